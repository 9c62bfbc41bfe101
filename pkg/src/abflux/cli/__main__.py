"""
abflux CLI entry point
"""

from .abflux_cli import main

if __name__ == "__main__":
    main()
