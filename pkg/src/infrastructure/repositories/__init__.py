"""Repositories - Capa de acceso a archivos con patrón Repository."""

from .base_repository import BaseRepository
from .corpus_repository import CorpusRepository
from .labels_repository import LabelsRepository
from .network_repository import NetworkRepository, to_dot
from .sweep_repository import SweepRepository

__all__ = [
    "BaseRepository",
    "CorpusRepository",
    "LabelsRepository",
    "NetworkRepository",
    "SweepRepository",
    "to_dot",
]
