"""Mappers - Conversión entre Domain Entities y sus representaciones externas."""

from typing import Iterable, List

import networkx as nx
import pandas as pd

from domain import (
    Corpus,
    CountingMode,
    FalsePositiveReport,
    InteractionNetwork,
    MetricKind,
    NameSource,
    PropertyRecord,
    SimilarityMetric,
    SimilarityPair,
    SweepConfig,
    SweepResult,
)
from infrastructure.models import (
    CorpusDocument,
    NetworkDocument,
    NetworkMeta,
    OperationDocument,
    ServiceDocument,
    SweepMetaDocument,
    SweepMetricMeta,
)

PROPERTY_COLUMNS: List[str] = [
    "metric",
    "threshold",
    "n_nodes",
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
]


class CorpusMapper:
    """Mapea Corpus (dominio) al documento JSON."""

    @staticmethod
    def to_document(corpus: Corpus) -> CorpusDocument:
        """Usa los nombres crudos: recargar el documento reproduce el mismo Corpus."""
        return CorpusDocument(
            services=[
                ServiceDocument(
                    id=service.id,
                    name=service.name,
                    operations=[
                        OperationDocument(
                            name=op.name,
                            inputs=[p.raw_name for p in op.inputs],
                            outputs=[p.raw_name for p in op.outputs],
                        )
                        for op in service.operations
                    ],
                )
                for service in corpus.services
            ]
        )


class NetworkMapper:
    """Mapea InteractionNetwork a networkx y al documento de adyacencia."""

    @staticmethod
    def to_digraph(net: InteractionNetwork) -> nx.DiGraph:
        graph = nx.DiGraph(
            metric=net.metric.value,
            threshold=net.threshold,
            corpus_fingerprint=net.corpus_fingerprint,
            vacuous_links=net.vacuous_links,
        )
        graph.add_nodes_from(net.nodes)
        graph.add_edges_from(net.links)
        return graph

    @staticmethod
    def to_document(net: InteractionNetwork) -> NetworkDocument:
        return NetworkDocument(
            nodes=list(net.nodes),
            links=[tuple(link) for link in net.links],
            meta=NetworkMeta(
                metric=net.metric.value,
                threshold=net.threshold,
                corpus_fingerprint=net.corpus_fingerprint,
                vacuous_links=net.vacuous_links,
                n_nodes=net.n_nodes,
                n_links=net.n_links,
            ),
        )

    @staticmethod
    def from_document(doc: NetworkDocument) -> InteractionNetwork:
        return InteractionNetwork(
            nodes=tuple(doc.nodes),
            links=tuple(sorted(tuple(link) for link in doc.links)),
            metric=MetricKind(doc.meta.metric),
            threshold=doc.meta.threshold,
            corpus_fingerprint=doc.meta.corpus_fingerprint,
            vacuous_links=doc.meta.vacuous_links,
        )


class SweepMetaMapper:
    """Mapea la configuración de un barrido al JSON que acompaña la tabla."""

    @staticmethod
    def to_document(result: SweepResult) -> SweepMetaDocument:
        config = result.config
        return SweepMetaDocument(
            corpus_fingerprint=result.corpus_fingerprint,
            metrics=[
                SweepMetricMeta(kind=m.kind.value, prefix_scale=m.prefix_scale, max_prefix=m.max_prefix)
                for m in config.metrics
            ],
            t_start=config.t_start,
            t_end=config.t_end,
            t_step=config.t_step,
            n_thresholds=len(config.grid()),
            counting_mode=config.counting_mode.value,
            vacuous_links=config.vacuous_links,
            name_source=config.name_source.value,
        )

    @staticmethod
    def from_document(doc: SweepMetaDocument) -> SweepConfig:
        return SweepConfig(
            metrics=tuple(
                SimilarityMetric(kind=MetricKind(m.kind), prefix_scale=m.prefix_scale, max_prefix=m.max_prefix)
                for m in doc.metrics
            ),
            t_start=doc.t_start,
            t_end=doc.t_end,
            t_step=doc.t_step,
            counting_mode=CountingMode(doc.counting_mode),
            vacuous_links=doc.vacuous_links,
            name_source=NameSource(doc.name_source),
        )


class RecordMapper:
    """Mapea registros del barrido a DataFrames y de vuelta."""

    @staticmethod
    def to_frame(records: Iterable[PropertyRecord]) -> pd.DataFrame:
        rows = [r.model_dump(mode="json") for r in records]
        return pd.DataFrame(rows, columns=PROPERTY_COLUMNS)

    @staticmethod
    def from_frame(df: pd.DataFrame) -> List[PropertyRecord]:
        records = []
        for row in df.to_dict(orient="records"):
            clean = {k: (None if pd.isna(v) else v) for k, v in row.items() if k in PROPERTY_COLUMNS}
            records.append(PropertyRecord(**clean))
        return records

    @staticmethod
    def pairs_to_frame(pairs: Iterable[SimilarityPair]) -> pd.DataFrame:
        return pd.DataFrame(
            [(p.name_a, p.name_b, p.score) for p in pairs],
            columns=["name_a", "name_b", "score"],
        )

    @staticmethod
    def fp_to_frame(reports: Iterable[FalsePositiveReport]) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    "metric": r.metric.value,
                    "threshold": r.threshold,
                    "n_retrieved": r.n_retrieved,
                    "n_labeled": r.n_labeled,
                    "n_false_positive": r.n_false_positive,
                    "fp_percent": r.fp_percent,
                }
                for r in reports
            ]
        )
