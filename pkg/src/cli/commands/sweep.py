"""Subcomando sweep - Barrido de umbrales con todas las propiedades por métrica."""

import argparse
from pathlib import Path

from core import Settings
from core.exceptions import ConfigurationError
from domain import SweepConfig
from infrastructure.repositories import SweepRepository
from services.sweep import run_sweep

from cli.options import (
    add_corpus_options,
    add_counting_option,
    add_metric_options,
    counting_mode,
    load_corpus,
    metrics_from_args,
    name_source,
    pick,
)


def register(subparsers) -> None:
    parser = subparsers.add_parser("sweep", help="Barrer el umbral y registrar la topología")
    add_corpus_options(parser)
    add_metric_options(parser, many=True)
    add_counting_option(parser)
    parser.add_argument("--from", dest="t_start", type=float, default=None, help="Umbral inicial (default 0)")
    parser.add_argument("--to", dest="t_end", type=float, default=None, help="Umbral final (default 1)")
    parser.add_argument("--step", dest="t_step", type=float, default=None, help="Paso (default 0.01)")
    parser.add_argument("--vacuous-links", action="store_true", default=None, help="Enlazar hacia servicios sin entradas")
    parser.add_argument("--out", type=Path, default=None, help="CSV o .parquet (default: gold/sweep.csv)")
    parser.set_defaults(handler=cmd_sweep)


def cmd_sweep(args: argparse.Namespace, settings: Settings) -> int:
    config = SweepConfig(
        metrics=tuple(metrics_from_args(args, settings)),
        t_start=pick(args.t_start, settings.t_start),
        t_end=pick(args.t_end, settings.t_end),
        t_step=pick(args.t_step, settings.t_step),
        counting_mode=counting_mode(args, settings),
        vacuous_links=pick(args.vacuous_links, settings.vacuous_links),
        name_source=name_source(args, settings),
        jobs=pick(args.jobs, settings.jobs),
    )
    config.grid()
    if config.jobs < 1:
        raise ConfigurationError(f"--jobs debe ser >= 1 ({config.jobs})")

    corpus = load_corpus(args, settings)
    result = run_sweep(corpus, config)

    out = args.out or settings.gold_dir / "sweep.csv"
    SweepRepository().save(result, out)
    print(f"{len(result.records)} records")
    return 0
