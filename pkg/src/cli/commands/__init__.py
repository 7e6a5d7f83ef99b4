"""Commands - Un módulo por subcomando."""

from . import build, chart, diff, extract, fp_report, sweep, variation

COMMANDS = [extract, build, sweep, diff, fp_report, chart, variation]

__all__ = [
    "COMMANDS",
]
