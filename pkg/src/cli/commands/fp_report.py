"""Subcomando fp-report - Falsos positivos según un CSV de etiquetas."""

import argparse
import sys
from pathlib import Path

from core import Settings
from core.exceptions import UsageError
from domain import FalsePositiveReport, SweepConfig
from infrastructure.mappers import RecordMapper
from infrastructure.repositories import LabelsRepository
from services.analysis import fp_curve, fp_free_threshold, fp_report
from services.network import CompositionScorer

from cli.options import (
    add_corpus_options,
    add_counting_option,
    add_metric_options,
    counting_mode,
    fmt,
    load_corpus,
    metric_from_args,
    pick,
    threshold_arg,
)


def register(subparsers) -> None:
    parser = subparsers.add_parser("fp-report", help="Contar falsos positivos entre los pares recuperados")
    add_corpus_options(parser)
    add_metric_options(parser)
    add_counting_option(parser)
    parser.add_argument("--threshold", type=float, default=None, help="Umbral (omitir con --scan)")
    parser.add_argument("--labels", type=Path, required=True, help="CSV name_a,name_b,label")
    parser.add_argument("--strict-labels", action="store_true", help="Los pares sin etiqueta cuentan en el denominador")
    parser.add_argument("--scan", action="store_true", help="Recorrer la grilla --from/--to/--step")
    parser.add_argument("--from", dest="t_start", type=float, default=None)
    parser.add_argument("--to", dest="t_end", type=float, default=None)
    parser.add_argument("--step", dest="t_step", type=float, default=None)
    parser.add_argument("--out", type=Path, default=None, help="CSV de salida (plantilla de pares sin etiquetar, o la curva con --scan)")
    parser.set_defaults(handler=cmd_fp_report)


def _line(report: FalsePositiveReport) -> str:
    percent = "-" if report.fp_percent is None else f"{report.fp_percent:.1f}%"
    return (
        f"{report.metric.value} t={report.threshold:.2f}: {report.n_retrieved} retrieved, "
        f"{report.n_labeled} labeled, {report.n_false_positive} false positives, {percent}"
    )


def cmd_fp_report(args: argparse.Namespace, settings: Settings) -> int:
    if args.scan == (args.threshold is not None):
        raise UsageError("indicar --threshold o --scan (uno de los dos)")
    metric = metric_from_args(args, settings)
    mode = counting_mode(args, settings)
    if args.scan:
        grid = SweepConfig(
            metrics=(metric,),
            t_start=pick(args.t_start, settings.t_start),
            t_end=pick(args.t_end, settings.t_end),
            t_step=pick(args.t_step, settings.t_step),
        ).grid()
    else:
        grid = (threshold_arg(args.threshold),)

    fold_case = pick(args.fold_case, settings.fold_case)
    labels = LabelsRepository(fold_case=fold_case).load(args.labels)
    corpus = load_corpus(args, settings)
    scorer = CompositionScorer(corpus, metric, jobs=pick(args.jobs, settings.jobs))

    if args.scan:
        reports = fp_curve(scorer, labels, grid, mode, args.strict_labels)
        for report in reports:
            print(_line(report))
        print(f"false-positive-free from t={fmt(fp_free_threshold(reports), 2)}")
        if args.out:
            args.out.parent.mkdir(parents=True, exist_ok=True)
            RecordMapper.fp_to_frame(reports).to_csv(args.out, index=False, lineterminator="\n")
        return 0

    report = fp_report(scorer.report(grid[0], mode), labels, args.strict_labels)
    print(_line(report))
    if report.unlabeled:
        print(f"{len(report.unlabeled)} retrieved pairs without label", file=sys.stderr)
    if args.out:
        LabelsRepository().save_template(report.unlabeled, args.out)
    return 0
