"""Composition Network Toolkit - Punto de entrada de la línea de comandos."""

import logging
import sys
from typing import List, Optional

from cli import build_parser
from core import get_settings
from core.exceptions import (
    CompositionNetworkError,
    ConfigurationError,
    ExtractionError,
    UsageError,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def configure_logging(verbose: bool = False, quiet: bool = False) -> None:
    settings = get_settings()
    level = logging.DEBUG if verbose else logging.WARNING if quiet else settings.log_level.upper()
    logging.basicConfig(level=level, format=settings.log_format, stream=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    """
    Ejecuta un subcomando y retorna el código de salida.

    0 sin errores; 2 para errores de uso o configuración; 1 para el resto.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose, args.quiet)
    settings = get_settings()

    try:
        return args.handler(args, settings)
    except (UsageError, ConfigurationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ExtractionError as e:
        for path, message in e.failures:
            print(f"{path}: {message}", file=sys.stderr)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except CompositionNetworkError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
