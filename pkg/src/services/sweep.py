"""Sweep - Barrido de umbrales por métrica y registro de la topología."""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import List, Tuple

from core.exceptions import ConfigurationError
from domain import Corpus, MatchSummary, PropertyRecord, SimilarityMetric, SweepConfig, SweepResult
from services.corpus import corpus_fingerprint
from services.network import CompositionScorer
from services.topology import measure_adjacency

logger = logging.getLogger(__name__)

PROGRESS_EVERY = 10


class SweepRunner:
    """
    Ejecuta el barrido: por cada métrica se calcula una vez la tabla de
    puntajes y se reutiliza en todos los umbrales de la grilla.
    """

    def __init__(self, config: SweepConfig, cache_scores: bool = True) -> None:
        """
        Inicializa el runner.

        Args:
            config: Configuración del barrido
            cache_scores: False recalcula los puntajes en cada umbral (referencia)
        """
        self.config = config
        self.cache_scores = cache_scores

    def run(self, corpus: Corpus) -> SweepResult:
        """
        Ejecuta el barrido completo.

        Raises:
            ConfigurationError: Grilla inválida o corpus vacío (antes de calcular).
        """
        grid = self.config.grid()
        if not corpus.services:
            raise ConfigurationError("el barrido requiere un corpus no vacío")

        logger.info(
            f"Barrido: {len(self.config.metrics)} métricas x {len(grid)} umbrales, "
            f"{len(corpus.services)} servicios"
        )
        records: List[PropertyRecord] = []
        reports: List[MatchSummary] = []
        for metric in self.config.metrics:
            metric_records, metric_reports = self._run_metric(corpus, metric, grid)
            records.extend(metric_records)
            reports.extend(metric_reports)
            logger.info(f"  ✓ {metric.label}: {len(metric_records)} registros")

        return SweepResult(
            records=tuple(records),
            reports=tuple(reports),
            config=self.config,
            corpus_fingerprint=corpus_fingerprint(corpus),
        )

    def _run_metric(
        self,
        corpus: Corpus,
        metric: SimilarityMetric,
        grid: Tuple[float, ...],
    ) -> Tuple[List[PropertyRecord], List[MatchSummary]]:
        jobs = self.config.jobs
        shared = CompositionScorer(corpus, metric, jobs=jobs) if self.cache_scores else None

        def evaluate(position: int) -> Tuple[PropertyRecord, MatchSummary]:
            t = grid[position]
            scorer = shared or CompositionScorer(corpus, metric)
            adj = scorer.adjacency(t, self.config.vacuous_links)
            n_pairs = scorer.count_pairs(t, self.config.counting_mode)
            record = measure_adjacency(adj, metric.kind, t, n_similarities=n_pairs)
            summary = MatchSummary(
                metric=metric.kind,
                threshold=t,
                n_pairs=n_pairs,
                n_baseline=scorer.count_pairs(1.0, self.config.counting_mode),
            )
            if (position + 1) % PROGRESS_EVERY == 0:
                logger.info(f"    {metric.label}: {position + 1}/{len(grid)} umbrales")
            return record, summary

        if jobs > 1 and self.cache_scores:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(evaluate, range(len(grid))))
        else:
            results = [evaluate(i) for i in range(len(grid))]

        return [r for r, _ in results], [s for _, s in results]


def run_sweep(corpus: Corpus, config: SweepConfig, cache_scores: bool = True) -> SweepResult:
    """Atajo funcional sobre SweepRunner."""
    return SweepRunner(config, cache_scores=cache_scores).run(corpus)
