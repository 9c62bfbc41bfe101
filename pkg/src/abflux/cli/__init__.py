"""
abflux Command Line Interface
Sweeps, figure presets and checks from the shell
"""

from .abflux_cli import AbfluxCli, cli, main

__all__ = ["main", "cli", "AbfluxCli"]
