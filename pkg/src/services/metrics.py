"""Metrics - Similitudes normalizadas (Levenshtein, Jaro, Jaro-Winkler) y matching."""

import logging
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

import numpy as np
from pydantic import ValidationError
from rapidfuzz.distance import Levenshtein
from rapidfuzz.process import cdist

from core.exceptions import ConfigurationError
from domain import MatchThreshold, MetricKind, SimilarityMetric

logger = logging.getLogger(__name__)

ThresholdLike = Union[float, MatchThreshold]


def make_metric(kind: Union[str, MetricKind], prefix_scale: float = 0.1, max_prefix: int = 4) -> SimilarityMetric:
    """
    Construye una SimilarityMetric validada.

    Raises:
        ConfigurationError: Si los parámetros de Jaro-Winkler son inválidos.
    """
    try:
        return SimilarityMetric(kind=MetricKind(kind), prefix_scale=prefix_scale, max_prefix=max_prefix)
    except ValueError as e:
        if isinstance(e, ValidationError):
            detail = "; ".join(err["msg"] for err in e.errors())
        else:
            detail = str(e)
        raise ConfigurationError(f"métrica inválida '{kind}': {detail}") from e


def threshold_value(threshold: ThresholdLike) -> float:
    """Valor numérico de un umbral, validando el rango [0, 1]."""
    value = threshold.value if isinstance(threshold, MatchThreshold) else float(threshold)
    if not 0.0 <= value <= 1.0:
        raise ConfigurationError(f"el umbral debe estar en [0, 1]: {value}")
    return value


# ==================== LEVENSHTEIN ====================

def levenshtein_distance(s1: str, s2: str) -> int:
    """Distancia de edición con costo unitario, sobre puntos de código Unicode."""
    return Levenshtein.distance(s1, s2)


def levenshtein_similarity(s1: str, s2: str) -> float:
    """(max(|s1|, |s2|) - d) / max(|s1|, |s2|); 1 cuando ambas cadenas son vacías."""
    longest = max(len(s1), len(s2))
    if longest == 0:
        return 1.0
    # una sola división entera: el valor exacto de la grilla no se redondea hacia abajo
    return (longest - levenshtein_distance(s1, s2)) / longest


# ==================== JARO / JARO-WINKLER ====================

Ratio = Tuple[int, int]


def jaro_ratio(s1: str, s2: str) -> Ratio:
    """
    Similitud de Jaro como fracción entera (numerador, denominador).

    Ventana de matching max(|s1|,|s2|) // 2 - 1 (mínimo 0); emparejamiento
    greedy de izquierda a derecha; t = posiciones distintas entre las
    secuencias emparejadas / 2.
    """
    if s1 == s2:
        return 1, 1
    if not s1 or not s2:
        return 0, 1
    # orden canónico: el emparejamiento greedy depende del orden de los argumentos
    if s2 < s1:
        s1, s2 = s2, s1

    len1, len2 = len(s1), len(s2)
    window = max(max(len1, len2) // 2 - 1, 0)

    taken = [False] * len2
    matched1: List[str] = []
    for i, ch in enumerate(s1):
        lo = max(0, i - window)
        hi = min(i + window + 1, len2)
        for j in range(lo, hi):
            if not taken[j] and s2[j] == ch:
                taken[j] = True
                matched1.append(ch)
                break

    m = len(matched1)
    if m == 0:
        return 0, 1
    matched2 = [s2[j] for j in range(len2) if taken[j]]
    mismatches = sum(a != b for a, b in zip(matched1, matched2))
    # (m/|s1| + m/|s2| + (m - mismatches/2)/m) / 3 sobre el denominador común 6·|s1|·|s2|·m
    numerator = 2 * m * m * len2 + 2 * m * m * len1 + (2 * m - mismatches) * len1 * len2
    return numerator, 6 * len1 * len2 * m


def jaro_similarity(s1: str, s2: str) -> float:
    """Similitud de Jaro (ver jaro_ratio)."""
    numerator, denominator = jaro_ratio(s1, s2)
    return numerator / denominator


def common_prefix_length(s1: str, s2: str, limit: int) -> int:
    length = 0
    for a, b in zip(s1, s2):
        if a != b or length >= limit:
            break
        length += 1
    return length


def prefix_scale_ratio(p: float) -> Fraction:
    """La escala p como fracción decimal exacta (0.1 → 1/10)."""
    return Fraction(repr(float(p)))


def winkler_ratio(jaro: Ratio, prefix: int, scale: Fraction) -> Ratio:
    """d_j + l·p·(1 - d_j) con d_j = a/b y p = c/e: (a·e + l·c·(b - a)) / (b·e)."""
    a, b = jaro
    return a * scale.denominator + prefix * scale.numerator * (b - a), b * scale.denominator


def _check_winkler(p: float, l_max: int) -> None:
    if not 0.0 <= p <= 0.25 or l_max < 0 or p * l_max > 1.0:
        raise ConfigurationError(f"parámetros Jaro-Winkler inválidos: p={p}, l_max={l_max}")


def jaro_winkler_similarity(s1: str, s2: str, p: float = 0.1, l_max: int = 4) -> float:
    """
    d_w = d_j + l * p * (1 - d_j), con l el prefijo común acotado por l_max.

    Raises:
        ConfigurationError: Si p * l_max > 1 o p fuera de [0, 0.25].
    """
    _check_winkler(p, l_max)
    numerator, denominator = winkler_ratio(
        jaro_ratio(s1, s2), common_prefix_length(s1, s2, l_max), prefix_scale_ratio(p)
    )
    return numerator / denominator


# ==================== DESPACHO ====================

def similarity(metric: SimilarityMetric, s1: str, s2: str) -> float:
    """Puntaje de la métrica para un par de nombres."""
    if metric.kind == MetricKind.LEVENSHTEIN:
        return levenshtein_similarity(s1, s2)
    if metric.kind == MetricKind.JARO:
        return jaro_similarity(s1, s2)
    return jaro_winkler_similarity(s1, s2, metric.prefix_scale, metric.max_prefix)


def match(metric: SimilarityMetric, threshold: ThresholdLike, p1: str, p2: str) -> bool:
    """True si similarity(p1, p2) >= umbral (comparación inclusiva)."""
    return similarity(metric, p1, p2) >= threshold_value(threshold)


# ==================== TABLAS DE PUNTAJES ====================

def _jaro_rows(args: Tuple[Sequence[str], Sequence[str], MetricKind, float, int]) -> np.ndarray:
    rows, cols, kind, p, l_max = args
    scale = prefix_scale_ratio(p)
    out = np.empty((len(rows), len(cols)), dtype=np.float64)
    for i, a in enumerate(rows):
        for j, b in enumerate(cols):
            ratio = jaro_ratio(a, b)
            if kind == MetricKind.JARO_WINKLER:
                ratio = winkler_ratio(ratio, common_prefix_length(a, b, l_max), scale)
            out[i, j] = ratio[0] / ratio[1]
    return out


def score_matrix(
    metric: SimilarityMetric,
    rows: Sequence[str],
    cols: Sequence[str],
    jobs: int = 1,
) -> np.ndarray:
    """
    Matriz |rows| x |cols| de puntajes.

    Los valores son idénticos a los de similarity() par a par. Levenshtein usa
    rapidfuzz.cdist; Jaro y Jaro-Winkler se reparten por bloques de filas
    entre procesos cuando jobs > 1.
    """
    rows, cols = list(rows), list(cols)
    if not rows or not cols:
        return np.zeros((len(rows), len(cols)), dtype=np.float64)

    if metric.kind == MetricKind.LEVENSHTEIN:
        distances = cdist(rows, cols, scorer=Levenshtein.distance, dtype=np.int64, workers=jobs)
        longest = np.maximum.outer(
            np.fromiter((len(r) for r in rows), dtype=np.int64, count=len(rows)),
            np.fromiter((len(c) for c in cols), dtype=np.int64, count=len(cols)),
        )
        with np.errstate(invalid="ignore", divide="ignore"):
            scores = (longest - distances) / longest
        scores[longest == 0] = 1.0
        return scores

    p, l_max = metric.prefix_scale, metric.max_prefix
    if jobs <= 1 or len(rows) < 2 * jobs:
        return _jaro_rows((rows, cols, metric.kind, p, l_max))

    chunk = -(-len(rows) // jobs)
    blocks = [(rows[i:i + chunk], cols, metric.kind, p, l_max) for i in range(0, len(rows), chunk)]
    logger.debug(f"Puntajes {metric.label}: {len(blocks)} bloques en {jobs} procesos")
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return np.vstack(list(pool.map(_jaro_rows, blocks)))
