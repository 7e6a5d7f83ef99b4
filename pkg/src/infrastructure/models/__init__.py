"""Models - Esquemas de los formatos de archivo (JSON de corpus, de red y de barrido)."""

from .corpus_document import CorpusDocument, OperationDocument, ServiceDocument, json_path
from .network_document import NetworkDocument, NetworkMeta
from .sweep_document import SweepMetaDocument, SweepMetricMeta

__all__ = [
    "CorpusDocument",
    "OperationDocument",
    "ServiceDocument",
    "json_path",
    "NetworkDocument",
    "NetworkMeta",
    "SweepMetaDocument",
    "SweepMetricMeta",
]
