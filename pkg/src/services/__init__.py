"""Services - Servicios de aplicación (extracción, métricas, redes, barridos)."""

from .corpus import build_corpus, build_vocabulary, corpus_fingerprint, corpus_summary, service_io
from .metrics import (
    jaro_similarity,
    jaro_winkler_similarity,
    levenshtein_distance,
    levenshtein_similarity,
    make_metric,
    match,
    similarity,
)
from .network import CompositionScorer, build_network, diff_reports, link_exists, similarity_pairs
from .topology import (
    average_distance,
    compute_all,
    degree_correlation,
    degree_stats,
    density,
    isolated_count,
    transitivity,
)
from .sweep import SweepRunner, run_sweep
from .analysis import (
    acceptable_threshold,
    find_inflection,
    first_departure,
    fp_curve,
    fp_free_threshold,
    fp_report,
    peak_threshold,
    proportional_variation,
    variation_table,
)
from .extraction import ExtractionPipeline, load_json_corpus, parse_wsdl

__all__ = [
    "build_corpus",
    "build_vocabulary",
    "corpus_fingerprint",
    "corpus_summary",
    "service_io",
    "jaro_similarity",
    "jaro_winkler_similarity",
    "levenshtein_distance",
    "levenshtein_similarity",
    "make_metric",
    "match",
    "similarity",
    "CompositionScorer",
    "build_network",
    "diff_reports",
    "link_exists",
    "similarity_pairs",
    "average_distance",
    "compute_all",
    "degree_correlation",
    "degree_stats",
    "density",
    "isolated_count",
    "transitivity",
    "SweepRunner",
    "run_sweep",
    "acceptable_threshold",
    "find_inflection",
    "first_departure",
    "fp_curve",
    "fp_free_threshold",
    "fp_report",
    "peak_threshold",
    "proportional_variation",
    "variation_table",
    "ExtractionPipeline",
    "load_json_corpus",
    "parse_wsdl",
]
