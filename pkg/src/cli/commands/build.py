"""Subcomando build - Una red de interacción exportada a DOT, GraphML o JSON."""

import argparse
from pathlib import Path

from core import Settings
from infrastructure.repositories import NetworkRepository
from services.network import CompositionScorer
from services.topology import compute_all

from cli.options import (
    add_corpus_options,
    add_metric_options,
    format_record,
    load_corpus,
    metric_from_args,
    pick,
    threshold_arg,
)


def register(subparsers) -> None:
    parser = subparsers.add_parser("build", help="Construir la red a una métrica y umbral")
    add_corpus_options(parser)
    add_metric_options(parser)
    parser.add_argument("--threshold", type=float, required=True, help="Umbral en [0, 1]")
    parser.add_argument("--format", choices=["dot", "graphml", "json"], default=None, help="Default: por extensión")
    parser.add_argument("--out", type=Path, required=True, help="Archivo de salida")
    parser.add_argument("--vacuous-links", action="store_true", default=None, help="Enlazar hacia servicios sin entradas")
    parser.set_defaults(handler=cmd_build)


def cmd_build(args: argparse.Namespace, settings: Settings) -> int:
    # flags validados antes de leer el corpus
    t = threshold_arg(args.threshold)
    metric = metric_from_args(args, settings)
    repository = NetworkRepository()
    fmt = repository.format_for(args.out, args.format)

    corpus = load_corpus(args, settings)
    scorer = CompositionScorer(corpus, metric, jobs=pick(args.jobs, settings.jobs))
    vacuous = pick(args.vacuous_links, settings.vacuous_links)
    net = scorer.network(t, vacuous)

    repository.save(net, args.out, fmt)
    record = compute_all(net, n_similarities=scorer.count_pairs(t))
    print(format_record(record))
    return 0
