"""CLI - Parser de argumentos con un subcomando por operación."""

import argparse

from .commands import COMMANDS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="compnet",
        description="Redes de composición de servicios web por matching aproximado de nombres",
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("--verbose", "-v", action="store_true", help="Logs de depuración")
    verbosity.add_argument("--quiet", "-q", action="store_true", help="Sólo advertencias y errores")

    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND", required=True)
    for command in COMMANDS:
        command.register(subparsers)
    return parser


__all__ = [
    "build_parser",
]
