"""Analysis - Lecturas sobre el barrido: variaciones, inflexiones y falsos positivos."""

import logging
import math
from typing import Iterable, List, Optional, Sequence

import numpy as np
import pandas as pd

from core.exceptions import UndefinedMeasureError, UsageError
from domain import (
    CountingMode,
    FalsePositiveReport,
    GroundTruthLabels,
    Inflection,
    MatchReport,
    MetricKind,
    PairLabel,
    SweepResult,
)
from services.network import CompositionScorer

logger = logging.getLogger(__name__)

NUMERIC_PROPERTIES = (
    "n_links",
    "min_degree",
    "max_degree",
    "avg_degree",
    "density",
    "transitivity",
    "degree_correlation",
    "avg_distance",
    "n_isolated",
    "n_similarities",
)


def property_series(result: SweepResult, metric: MetricKind, prop: str) -> pd.Series:
    """Curva de una propiedad indexada por umbral (NaN para indefinidos)."""
    if prop not in NUMERIC_PROPERTIES:
        raise UsageError(f"propiedad desconocida '{prop}' (válidas: {', '.join(NUMERIC_PROPERTIES)})")
    records = result.records_for(MetricKind(metric))
    values = [getattr(r, prop) for r in records]
    return pd.Series(
        [np.nan if v is None else float(v) for v in values],
        index=[round(r.threshold, 10) for r in records],
        dtype=float,
        name=prop,
    )


# ==================== VARIACIÓN PROPORCIONAL ====================

def proportional_variation(
    result: SweepResult,
    metric: MetricKind,
    t: float,
    prop: str = "avg_degree",
) -> Optional[float]:
    """
    100 * (v(t) - v(1)) / v(1) para la propiedad dada.

    Returns:
        El porcentaje, o None si v(1) es 0 o alguno de los valores es indefinido

    Raises:
        UndefinedMeasureError: Si no hay registro en t o en 1.
    """
    series = property_series(result, metric, prop)
    key = round(t, 10)
    if key not in series.index or 1.0 not in series.index:
        raise UndefinedMeasureError(f"faltan registros de {metric} en {t} o en 1.0")
    reference = series[1.0]
    value = series[key]
    if math.isnan(reference) or math.isnan(value) or reference == 0:
        return None
    return 100.0 * (value - reference) / reference


def variation_table(
    result: SweepResult,
    thresholds: Sequence[float],
    prop: str = "avg_degree",
) -> pd.DataFrame:
    """Tabla métrica x umbral de variaciones porcentuales (NaN si no aplica)."""
    rows = {}
    for metric in result.metrics:
        row = {}
        for t in thresholds:
            try:
                value = proportional_variation(result, metric, t, prop)
            except UndefinedMeasureError:
                value = None
            row[f"{t:.2f}"] = np.nan if value is None else value
        rows[metric.value] = row
    table = pd.DataFrame.from_dict(rows, orient="index", columns=[f"{t:.2f}" for t in thresholds])
    table.index.name = "metric"
    return table


def acceptable_threshold(
    result: SweepResult,
    metric: MetricKind,
    prop: str = "avg_degree",
    tolerance_pct: float = 20.0,
) -> float:
    """
    Menor umbral t tal que todo umbral de la grilla en [t, 1] varía a lo sumo
    tolerance_pct respecto del valor en 1.
    """
    series = property_series(result, metric, prop)
    if 1.0 not in series.index:
        raise UndefinedMeasureError(f"no hay registro de {metric} en 1.0")
    accepted = 1.0
    for t in sorted(series.index, reverse=True):
        value = proportional_variation(result, metric, t, prop)
        if value is None or abs(value) > tolerance_pct:
            break
        accepted = t
    return accepted


# ==================== FORMA DE LAS CURVAS ====================

def find_inflection(result: SweepResult, metric: MetricKind, prop: str = "avg_degree") -> Inflection:
    """
    Umbral de máxima |segunda diferencia| de la curva (diagnóstico).

    Si la curva es lineal o constante se retorna el primer punto interior
    con has_inflection=False.

    Raises:
        UndefinedMeasureError: Menos de 3 registros.
    """
    series = property_series(result, metric, prop)
    if len(series) < 3:
        raise UndefinedMeasureError(f"find_inflection requiere 3 registros ({len(series)})")
    values = series.to_numpy()
    second = np.nan_to_num(np.abs(values[:-2] - 2 * values[1:-1] + values[2:]), nan=0.0)
    position = int(np.argmax(second))
    magnitude = float(second[position])
    return Inflection(
        metric=MetricKind(metric),
        threshold=float(series.index[position + 1]),
        magnitude=magnitude,
        has_inflection=magnitude > 0,
    )


def peak_threshold(result: SweepResult, metric: MetricKind, prop: str = "avg_distance") -> Optional[float]:
    """Umbral donde la propiedad alcanza su máximo (el primero si hay empate)."""
    series = property_series(result, metric, prop).dropna()
    if series.empty:
        return None
    return float(series.idxmax())


def first_departure(
    result: SweepResult,
    metric: MetricKind,
    prop: str,
    tolerance: float = 0.0,
) -> Optional[float]:
    """
    Recorriendo desde 1 hacia abajo, primer umbral cuyo valor difiere del
    valor en 1 en más de tolerance. None si la curva no se aparta.
    """
    series = property_series(result, metric, prop)
    if 1.0 not in series.index:
        raise UndefinedMeasureError(f"no hay registro de {metric} en 1.0")
    reference = series[1.0]
    for t in sorted(series.index, reverse=True):
        value = series[t]
        if math.isnan(value) != math.isnan(reference):
            return float(t)
        if not math.isnan(value) and abs(value - reference) > tolerance:
            return float(t)
    return None


# ==================== FALSOS POSITIVOS ====================

def fp_report(report: MatchReport, labels: GroundTruthLabels, strict_labels: bool = False) -> FalsePositiveReport:
    """
    Falsos positivos entre los pares recuperados.

    Sin strict_labels el porcentaje se calcula sobre los pares etiquetados;
    con strict_labels, sobre todos los recuperados.
    """
    labeled = 0
    false_positives = 0
    unlabeled = []
    for pair in report.pairs:
        label = labels.label_for(pair.name_a, pair.name_b)
        if label is None:
            unlabeled.append(pair.key)
            continue
        labeled += 1
        if label == PairLabel.FALSE_POSITIVE:
            false_positives += 1

    denominator = len(report.pairs) if strict_labels else labeled
    percent = 100.0 * false_positives / denominator if denominator else None
    return FalsePositiveReport(
        metric=report.metric.kind,
        threshold=report.threshold,
        n_retrieved=len(report.pairs),
        n_labeled=labeled,
        n_false_positive=false_positives,
        fp_percent=percent,
        unlabeled=tuple(unlabeled),
    )


def fp_curve(
    scorer: CompositionScorer,
    labels: GroundTruthLabels,
    grid: Iterable[float],
    mode: CountingMode = CountingMode.DISTINCT,
    strict_labels: bool = False,
) -> List[FalsePositiveReport]:
    """fp_report en cada umbral de la grilla (los pares se calculan una vez)."""
    grid = sorted(grid)
    if not grid:
        return []
    widest = scorer.pairs(grid[0], mode)
    baseline = scorer.pairs(1.0, mode)
    reports = []
    for t in grid:
        subset = tuple(p for p in widest if p.score >= t)
        report = MatchReport.model_construct(
            metric=scorer.metric, threshold=t, mode=mode, pairs=subset, baseline_pairs=baseline
        )
        reports.append(fp_report(report, labels, strict_labels))
    return reports


def fp_free_threshold(reports: Iterable[FalsePositiveReport]) -> Optional[float]:
    """Menor umbral desde el cual (hacia 1) no se recupera ningún falso positivo."""
    free: Optional[float] = None
    for report in sorted(reports, key=lambda r: r.threshold, reverse=True):
        if report.n_false_positive > 0:
            break
        free = report.threshold
    return free
