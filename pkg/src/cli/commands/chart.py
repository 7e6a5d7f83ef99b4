"""Subcomando chart - Curva SVG de una propiedad a partir del CSV del barrido."""

import argparse
from pathlib import Path

from core import Settings
from core.exceptions import UsageError
from infrastructure.chart_renderer import CHART_PROPERTIES, ChartRenderer
from infrastructure.repositories import SweepRepository


def register(subparsers) -> None:
    parser = subparsers.add_parser("chart", help="Graficar una propiedad contra el umbral (SVG)")
    parser.add_argument("sweep", type=Path, help="CSV (o .parquet) de sweep")
    parser.add_argument("--property", default="avg_degree", help=f"Una de: {', '.join(CHART_PROPERTIES)}")
    parser.add_argument("--out", type=Path, default=None, help="SVG de salida (default: gold/<property>.svg)")
    parser.set_defaults(handler=cmd_chart)


def cmd_chart(args: argparse.Namespace, settings: Settings) -> int:
    if args.property not in CHART_PROPERTIES:
        raise UsageError(f"propiedad desconocida '{args.property}' (válidas: {', '.join(CHART_PROPERTIES)})")
    frame = SweepRepository().load_frame(args.sweep)
    out = args.out or settings.gold_dir / f"{args.property}.svg"
    series = ChartRenderer().render(frame, args.property, out)
    points = sum(len(x) for x, _ in series.values())
    print(f"{out}: {len(series)} series, {points} points")
    return 0
