"""Opciones compartidas entre subcomandos y helpers de salida."""

import argparse
from pathlib import Path
from typing import List, Optional

from core import Settings
from core.exceptions import UsageError
from domain import Corpus, CountingMode, MetricKind, NameSource, PropertyRecord, SimilarityMetric
from infrastructure.repositories import CorpusRepository
from services.extraction import ExtractionPipeline, load_json_corpus
from services.metrics import make_metric

METRIC_ALIASES = {
    "levenshtein": MetricKind.LEVENSHTEIN,
    "jaro": MetricKind.JARO,
    "jaro_winkler": MetricKind.JARO_WINKLER,
    "jaro-winkler": MetricKind.JARO_WINKLER,
    "jarowinkler": MetricKind.JARO_WINKLER,
}


# ==================== FLAGS ====================

def add_corpus_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("corpus", type=Path, help="Corpus JSON (salida de extract), archivo .wsdl o directorio")
    parser.add_argument(
        "--name-source",
        choices=[s.value for s in NameSource],
        default=None,
        help="Regla de nombres al leer WSDL: part, element o qualified",
    )
    parser.add_argument("--fold-case", action="store_true", default=None, help="Comparar sin distinguir mayúsculas")
    parser.add_argument("--strict", action="store_true", default=None, help="Rechazar claves desconocidas")
    parser.add_argument("--jobs", type=int, default=None, help="Máximo de workers")


def add_metric_options(parser: argparse.ArgumentParser, many: bool = False) -> None:
    if many:
        parser.add_argument(
            "--metrics",
            default="levenshtein,jaro,jaro_winkler",
            help="Métricas separadas por coma (levenshtein, jaro, jaro_winkler)",
        )
    else:
        parser.add_argument("--metric", default="levenshtein", help="levenshtein | jaro | jaro_winkler")
    parser.add_argument("--prefix-scale", type=float, default=None, help="Jaro-Winkler: escala de prefijo p")
    parser.add_argument("--max-prefix", type=int, default=None, help="Jaro-Winkler: prefijo máximo l_max")


def add_counting_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--count-exact-co-occurrence",
        action="store_true",
        default=None,
        help="Contar (x, x) cuando x aparece como entrada y como salida",
    )


# ==================== PARSEO ====================

def pick(value, default):
    """Valor del flag o, si no se indicó, el de Settings."""
    return default if value is None else value


def metric_kind(name: str) -> MetricKind:
    key = name.strip().lower()
    if key not in METRIC_ALIASES:
        raise UsageError(f"métrica desconocida '{name}' (válidas: levenshtein, jaro, jaro_winkler)")
    return METRIC_ALIASES[key]


def metric_from_args(args: argparse.Namespace, settings: Settings, name: Optional[str] = None) -> SimilarityMetric:
    return make_metric(
        metric_kind(name or args.metric),
        prefix_scale=pick(args.prefix_scale, settings.jw_prefix_scale),
        max_prefix=pick(args.max_prefix, settings.jw_max_prefix),
    )


def metrics_from_args(args: argparse.Namespace, settings: Settings) -> List[SimilarityMetric]:
    names = [n for n in args.metrics.split(",") if n.strip()]
    if not names:
        raise UsageError("--metrics no puede estar vacío")
    return [metric_from_args(args, settings, n) for n in names]


def threshold_arg(value: float, flag: str = "--threshold") -> float:
    """Valida un umbral del usuario antes de tocar archivos."""
    if value is None or not 0.0 <= value <= 1.0:
        raise UsageError(f"{flag} debe estar en [0, 1]: {value}")
    return float(value)


def thresholds_arg(raw: str) -> List[float]:
    try:
        values = [float(v) for v in raw.split(",") if v.strip()]
    except ValueError as e:
        raise UsageError(f"lista de umbrales inválida: {raw}") from e
    return [threshold_arg(v, "--thresholds") for v in values]


def counting_mode(args: argparse.Namespace, settings: Settings) -> CountingMode:
    exact = pick(args.count_exact_co_occurrence, settings.count_exact_co_occurrence)
    return CountingMode.EXACT_CO_OCCURRENCE if exact else CountingMode.DISTINCT


def name_source(args: argparse.Namespace, settings: Settings) -> NameSource:
    return NameSource(pick(args.name_source, settings.name_source))


def load_corpus(args: argparse.Namespace, settings: Settings) -> Corpus:
    """
    Corpus JSON, o extracción en memoria cuando la entrada es un .wsdl o un
    directorio de documentos (con la regla --name-source).
    """
    repository = CorpusRepository()
    strict = pick(args.strict, settings.strict)
    fold_case = pick(args.fold_case, settings.fold_case)
    path = Path(args.corpus)
    if path.is_dir() or repository.is_wsdl(path):
        pipeline = ExtractionPipeline(
            repository=repository,
            name_source=name_source(args, settings),
            fold_case=fold_case,
            strict=strict,
        )
        return pipeline.extract([path])
    return load_json_corpus(repository.read_text(path), strict=strict, fold_case=fold_case)


# ==================== SALIDA ====================

def fmt(value, digits: int = 4) -> str:
    """Número para stdout; '-' para indefinidos."""
    if value is None:
        return "-"
    if isinstance(value, float):
        return f"{value:.{digits}f}"
    return str(value)


def format_record(record: PropertyRecord) -> str:
    """Una línea con todas las propiedades de la red."""
    return (
        f"{record.metric.value} t={record.threshold:.2f} "
        f"nodes={record.n_nodes} links={record.n_links} "
        f"min_degree={record.min_degree} max_degree={record.max_degree} "
        f"avg_degree={fmt(record.avg_degree)} density={fmt(record.density)} "
        f"transitivity={fmt(record.transitivity)} degree_correlation={fmt(record.degree_correlation)} "
        f"avg_distance={fmt(record.avg_distance)} isolated={record.n_isolated}"
    )
