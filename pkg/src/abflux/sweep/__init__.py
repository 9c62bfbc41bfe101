"""
Sweeps
Parameter grids, figure presets, runners and output formats
"""

from .checks import CheckResult, run_checks
from .output import CSV_HEADER, format_csv, format_json, write_text
from .presets import FigurePreset, figure_preset, get_preset, list_presets
from .runner import SweepRunner, run_sweep, sweep_exit_status
from .spec import EvaluationPath, OutputFormat, SweepRecord, SweepSpec

__all__ = [
    "SweepSpec",
    "SweepRecord",
    "OutputFormat",
    "EvaluationPath",
    "SweepRunner",
    "run_sweep",
    "sweep_exit_status",
    "FigurePreset",
    "figure_preset",
    "get_preset",
    "list_presets",
    "CSV_HEADER",
    "format_csv",
    "format_json",
    "write_text",
    "CheckResult",
    "run_checks",
]
