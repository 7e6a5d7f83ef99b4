"""Network - Construcción de la red de interacción y conteo de pares similares."""

import logging
from typing import List, Optional, Tuple

import numpy as np

from core.exceptions import UsageError
from domain import (
    Corpus,
    CountingMode,
    InteractionNetwork,
    MatchReport,
    ServiceDescription,
    SimilarityMetric,
    SimilarityPair,
)
from services.corpus import corpus_fingerprint, service_io
from services.metrics import ThresholdLike, match, score_matrix, threshold_value

logger = logging.getLogger(__name__)


def link_exists(
    source: ServiceDescription,
    target: ServiceDescription,
    f: SimilarityMetric,
    t: ThresholdLike,
    vacuous_links: bool = False,
) -> bool:
    """
    True si cada entrada de target tiene una salida similar en source.

    Un target sin entradas sólo recibe enlaces con vacuous_links.
    """
    if source.id == target.id:
        raise UsageError(f"link_exists requiere servicios distintos ({source.id})")
    target_inputs = service_io(target)[0]
    source_outputs = service_io(source)[1]
    if not target_inputs:
        return vacuous_links
    return all(any(match(f, t, a, b) for a in source_outputs) for b in target_inputs)


class CompositionScorer:
    """
    Puntajes de un corpus bajo una métrica, independientes del umbral.

    Se calcula una vez la matriz salidas x entradas del vocabulario; de ella
    salen la "fuerza" de cada enlace posible (el mejor puntaje que α ofrece
    a la peor cubierta de las entradas de β) y la lista de pares únicos.
    Un umbral t sólo compara contra esos valores.
    """

    def __init__(self, corpus: Corpus, metric: SimilarityMetric, jobs: int = 1) -> None:
        self.corpus = corpus
        self.metric = metric
        self.fingerprint = corpus_fingerprint(corpus)
        self.node_ids: List[str] = corpus.ids

        vocabulary = corpus.vocabulary
        self.out_names = [n for n, e in vocabulary.items() if e.as_output]
        self.in_names = [n for n, e in vocabulary.items() if e.as_input]
        self.co_occurring = [n for n, e in vocabulary.items() if e.as_input and e.as_output]

        logger.info(
            f"Puntajes {metric.label}: {len(self.out_names)} salidas x "
            f"{len(self.in_names)} entradas"
        )
        self.scores = score_matrix(metric, self.out_names, self.in_names, jobs=jobs)

        self._build_strength()
        self._build_pairs()

    # ==================== ENLACES ====================

    def _build_strength(self) -> None:
        out_index = {n: i for i, n in enumerate(self.out_names)}
        in_index = {n: i for i, n in enumerate(self.in_names)}
        io = [service_io(s) for s in self.corpus.services]
        n = len(io)

        # cover[α, b]: mejor puntaje de una salida de α contra la entrada b
        cover = np.full((n, len(self.in_names)), -np.inf)
        for a, (_, outputs) in enumerate(io):
            if outputs:
                rows = [out_index[name] for name in sorted(outputs)]
                cover[a] = self.scores[rows].max(axis=0)

        strength = np.full((n, n), np.inf)
        for b, (inputs, _) in enumerate(io):
            if inputs:
                cols = [in_index[name] for name in sorted(inputs)]
                strength[:, b] = cover[:, cols].min(axis=1)
        np.fill_diagonal(strength, -np.inf)

        self.strength = strength
        self.has_inputs = np.array([bool(inputs) for inputs, _ in io], dtype=bool)

    def adjacency(self, t: ThresholdLike, vacuous_links: bool = False) -> np.ndarray:
        """Matriz booleana de adyacencia (filas = origen) al umbral t."""
        adj = self.strength >= threshold_value(t)
        if not vacuous_links:
            adj[:, ~self.has_inputs] = False
        return adj

    def network(self, t: ThresholdLike, vacuous_links: bool = False) -> InteractionNetwork:
        value = threshold_value(t)
        sources, targets = np.nonzero(self.adjacency(value, vacuous_links))
        links = sorted((self.node_ids[a], self.node_ids[b]) for a, b in zip(sources, targets))
        # construcción sin revalidar: los enlaces salen de índices válidos y sin diagonal
        return InteractionNetwork.model_construct(
            nodes=tuple(self.node_ids),
            links=tuple(links),
            metric=self.metric.kind,
            threshold=value,
            corpus_fingerprint=self.fingerprint,
            vacuous_links=vacuous_links,
        )

    # ==================== PARES ====================

    def _build_pairs(self) -> None:
        names = list(self.corpus.vocabulary)
        index = {n: i for i, n in enumerate(names)}
        self._names = names

        if not self.out_names or not self.in_names:
            self._pair_lo = np.empty(0, dtype=np.int64)
            self._pair_hi = np.empty(0, dtype=np.int64)
            self._pair_score = np.empty(0, dtype=np.float64)
            self._sorted_scores = self._pair_score
            return

        rows = np.array([index[n] for n in self.out_names], dtype=np.int64)
        cols = np.array([index[n] for n in self.in_names], dtype=np.int64)
        r, c = np.meshgrid(rows, cols, indexing="ij")
        distinct = r != c
        lo = np.minimum(r, c)[distinct]
        hi = np.maximum(r, c)[distinct]
        score = self.scores[distinct]

        # un mismo par aparece dos veces si ambos nombres tienen los dos roles
        _, first = np.unique(lo * len(names) + hi, return_index=True)
        self._pair_lo = lo[first]
        self._pair_hi = hi[first]
        self._pair_score = score[first]
        self._sorted_scores = np.sort(self._pair_score)

    def count_pairs(self, t: ThresholdLike, mode: CountingMode = CountingMode.DISTINCT) -> int:
        value = threshold_value(t)
        count = len(self._sorted_scores) - int(np.searchsorted(self._sorted_scores, value, side="left"))
        if mode == CountingMode.EXACT_CO_OCCURRENCE:
            count += len(self.co_occurring)
        return count

    def pairs(self, t: ThresholdLike, mode: CountingMode = CountingMode.DISTINCT) -> Tuple[SimilarityPair, ...]:
        value = threshold_value(t)
        keep = np.nonzero(self._pair_score >= value)[0]
        found = [
            SimilarityPair(
                name_a=self._names[self._pair_lo[i]],
                name_b=self._names[self._pair_hi[i]],
                score=float(self._pair_score[i]),
            )
            for i in keep
        ]
        if mode == CountingMode.EXACT_CO_OCCURRENCE:
            found.extend(SimilarityPair(name_a=n, name_b=n, score=1.0) for n in self.co_occurring)
        return tuple(sorted(found, key=lambda p: p.key))

    def report(self, t: ThresholdLike, mode: CountingMode = CountingMode.DISTINCT) -> MatchReport:
        return MatchReport(
            metric=self.metric,
            threshold=threshold_value(t),
            mode=mode,
            pairs=self.pairs(t, mode),
            baseline_pairs=self.pairs(1.0, mode),
        )


def build_network(
    corpus: Corpus,
    f: SimilarityMetric,
    t: ThresholdLike,
    vacuous_links: bool = False,
    jobs: int = 1,
    scorer: Optional[CompositionScorer] = None,
) -> InteractionNetwork:
    """Red de interacción del corpus a la métrica y umbral dados."""
    value = threshold_value(t)
    scorer = scorer or CompositionScorer(corpus, f, jobs=jobs)
    net = scorer.network(value, vacuous_links)
    logger.info(f"Red {f.label} @ {value:.2f}: {net.n_nodes} nodos, {net.n_links} enlaces")
    return net


def similarity_pairs(
    corpus: Corpus,
    f: SimilarityMetric,
    t: ThresholdLike,
    mode: CountingMode = CountingMode.DISTINCT,
    jobs: int = 1,
    scorer: Optional[CompositionScorer] = None,
) -> MatchReport:
    """Pares de nombres (salida, entrada) con puntaje >= t, más la línea base a t=1."""
    scorer = scorer or CompositionScorer(corpus, f, jobs=jobs)
    return scorer.report(t, mode)


def diff_reports(low: MatchReport, high: MatchReport) -> Tuple[SimilarityPair, ...]:
    """
    Pares que agrega el umbral más bajo: low.pairs - high.pairs.

    Raises:
        UsageError: Métrica o modo de conteo distintos, o umbrales invertidos.
    """
    if low.metric != high.metric or low.mode != high.mode:
        raise UsageError("diff_reports requiere la misma métrica y el mismo modo de conteo")
    if low.threshold > high.threshold:
        raise UsageError(f"umbral bajo ({low.threshold}) mayor que el alto ({high.threshold})")
    high_keys = {p.key for p in high.pairs}
    return tuple(p for p in low.pairs if p.key not in high_keys)
