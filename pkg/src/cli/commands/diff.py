"""Subcomando diff - Similitudes que agrega un umbral más bajo."""

import argparse
from pathlib import Path

from core import Settings
from infrastructure.mappers import RecordMapper
from services.network import CompositionScorer, diff_reports

from cli.options import (
    add_corpus_options,
    add_counting_option,
    add_metric_options,
    counting_mode,
    load_corpus,
    metric_from_args,
    pick,
    threshold_arg,
)


def register(subparsers) -> None:
    parser = subparsers.add_parser("diff", help="Pares similares a --low que no lo son a --high")
    add_corpus_options(parser)
    add_metric_options(parser)
    add_counting_option(parser)
    parser.add_argument("--low", type=float, required=True, help="Umbral bajo")
    parser.add_argument("--high", type=float, default=1.0, help="Umbral alto (default 1)")
    parser.add_argument("--out", type=Path, default=None, help="CSV con los pares agregados")
    parser.set_defaults(handler=cmd_diff)


def cmd_diff(args: argparse.Namespace, settings: Settings) -> int:
    low = threshold_arg(args.low, "--low")
    high = threshold_arg(args.high, "--high")
    metric = metric_from_args(args, settings)
    mode = counting_mode(args, settings)

    corpus = load_corpus(args, settings)
    scorer = CompositionScorer(corpus, metric, jobs=pick(args.jobs, settings.jobs))
    added = diff_reports(scorer.report(low, mode), scorer.report(high, mode))

    if args.out:
        target = Path(args.out)
        target.parent.mkdir(parents=True, exist_ok=True)
        RecordMapper.pairs_to_frame(added).to_csv(target, index=False, lineterminator="\n")
    for pair in added:
        print(f"{pair.name_a} ~ {pair.name_b}\t{pair.score:.4f}")
    print(f"{len(added)} additional pairs ({metric.label} {low:.2f} vs {high:.2f})")
    return 0
