"""Core Module - Configuración y componentes centrales."""

from .config import Settings, get_settings
from .exceptions import (
    CompositionNetworkError,
    ConfigurationError,
    CorpusError,
    CorpusSchemaError,
    DuplicateServiceError,
    EmptyServiceError,
    ExtractionError,
    NoInputDocumentsError,
    UndefinedMeasureError,
    UsageError,
    WsdlParseError,
    WsdlStructureError,
)

__all__ = [
    "Settings",
    "get_settings",
    "CompositionNetworkError",
    "ConfigurationError",
    "CorpusError",
    "CorpusSchemaError",
    "DuplicateServiceError",
    "EmptyServiceError",
    "ExtractionError",
    "NoInputDocumentsError",
    "UndefinedMeasureError",
    "UsageError",
    "WsdlParseError",
    "WsdlStructureError",
]
