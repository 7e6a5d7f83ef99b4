"""Subcomando extract - WSDL/JSON (bronze) → corpus JSON normalizado (silver)."""

import argparse
import sys
from pathlib import Path

from core import Settings
from domain import NameSource
from services.corpus import corpus_summary
from services.extraction import ExtractionPipeline

from cli.options import pick


def register(subparsers) -> None:
    parser = subparsers.add_parser("extract", help="Extraer servicios de WSDL o JSON a un corpus JSON")
    parser.add_argument("inputs", nargs="+", type=Path, help="Archivos .wsdl/.json o directorios")
    parser.add_argument("--out", type=Path, default=None, help="Corpus de salida (default: silver/corpus.json)")
    parser.add_argument(
        "--name-source",
        choices=[s.value for s in NameSource],
        default=None,
        help="Nombre del parámetro: part, element o qualified (mensaje_nombre)",
    )
    parser.add_argument("--fold-case", action="store_true", default=None, help="Normalizar a minúsculas")
    parser.add_argument("--strict", action="store_true", default=None, help="Rechazar claves JSON desconocidas")
    parser.add_argument("--keep-going", action="store_true", help="Omitir documentos inválidos")
    parser.set_defaults(handler=cmd_extract)


def cmd_extract(args: argparse.Namespace, settings: Settings) -> int:
    """Extrae el corpus y muestra servicios, operaciones y nombres distintos."""
    out = args.out or settings.silver_dir / "corpus.json"
    pipeline = ExtractionPipeline(
        name_source=NameSource(pick(args.name_source, settings.name_source)),
        fold_case=pick(args.fold_case, settings.fold_case),
        strict=pick(args.strict, settings.strict),
        keep_going=args.keep_going,
    )
    corpus = pipeline.run(args.inputs, out)

    for path, message in pipeline.failures:
        print(f"skipped {path}: {message}", file=sys.stderr)
    summary = corpus_summary(corpus)
    line = f"{summary['services']} services, {summary['operations']} operations, {summary['names']} parameter names"
    if pipeline.failures:
        line += f" ({len(pipeline.failures)} documents skipped)"
    print(line)
    return 0
