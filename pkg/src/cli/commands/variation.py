"""Subcomando variation - Variación proporcional, inflexión y umbral aceptable."""

import argparse
from pathlib import Path

from core import Settings
from core.exceptions import UndefinedMeasureError, UsageError
from infrastructure.repositories import SweepRepository
from services.analysis import (
    NUMERIC_PROPERTIES,
    acceptable_threshold,
    find_inflection,
    peak_threshold,
    variation_table,
)

from cli.options import fmt, thresholds_arg


def register(subparsers) -> None:
    parser = subparsers.add_parser("variation", help="Tabla de variación respecto del umbral 1")
    parser.add_argument("sweep", type=Path, help="CSV (o .parquet) de sweep")
    parser.add_argument("--property", default="avg_degree", help=f"Una de: {', '.join(NUMERIC_PROPERTIES)}")
    parser.add_argument("--thresholds", default="0.4,0.7,0.75,0.8,0.9,1.0", help="Umbrales separados por coma")
    parser.add_argument("--tolerance", type=float, default=20.0, help="Variación aceptable en %% (default 20)")
    parser.add_argument("--out", type=Path, default=None, help="CSV con la tabla de variación")
    parser.set_defaults(handler=cmd_variation)


def cmd_variation(args: argparse.Namespace, settings: Settings) -> int:
    if args.property not in NUMERIC_PROPERTIES:
        raise UsageError(f"propiedad desconocida '{args.property}' (válidas: {', '.join(NUMERIC_PROPERTIES)})")
    thresholds = thresholds_arg(args.thresholds)
    result = SweepRepository().load(args.sweep)

    table = variation_table(result, thresholds, args.property)
    if args.out:
        target = Path(args.out)
        target.parent.mkdir(parents=True, exist_ok=True)
        table.to_csv(target, na_rep="", float_format="%.2f", lineterminator="\n")
    print(table.to_string(na_rep="-", float_format=lambda v: f"{v:.1f}"))

    for metric in result.metrics:
        try:
            inflection = find_inflection(result, metric, args.property)
            knee = f"{inflection.threshold:.2f}" + ("" if inflection.has_inflection else " (none)")
        except UndefinedMeasureError:
            knee = "-"
        try:
            acceptable = fmt(acceptable_threshold(result, metric, args.property, args.tolerance), 2)
        except UndefinedMeasureError:
            acceptable = "-"
        peak = fmt(peak_threshold(result, metric, args.property), 2)
        print(f"{metric.label}: inflection {knee}, acceptable {acceptable}, peak {peak}")
    return 0
