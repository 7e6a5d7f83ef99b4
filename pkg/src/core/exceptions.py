"""Excepciones del dominio de redes de composición."""

from typing import List, Optional, Tuple


class CompositionNetworkError(Exception):
    """Error base del toolkit."""


# ==================== CORPUS ====================

class CorpusError(CompositionNetworkError):
    """Error al cargar o validar descripciones de servicios."""


class WsdlParseError(CorpusError):
    """Documento WSDL mal formado (XML inválido)."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        location = f" (línea {line}, columna {column})" if line is not None else ""
        super().__init__(f"{message}{location}")


class WsdlStructureError(CorpusError):
    """WSDL bien formado pero estructuralmente inconsistente."""

    def __init__(self, message: str, operation: Optional[str] = None):
        self.operation = operation
        super().__init__(message)


class EmptyServiceError(CorpusError):
    """El documento no declara ninguna operación."""


class CorpusSchemaError(CorpusError):
    """El JSON de corpus no respeta el esquema."""

    def __init__(self, message: str, path: str = "$"):
        self.path = path
        super().__init__(f"{path}: {message}")


class DuplicateServiceError(CorpusError):
    """Dos servicios comparten el mismo id."""

    def __init__(self, service_id: str, first: str, second: str):
        self.service_id = service_id
        self.first = first
        self.second = second
        super().__init__(f"id de servicio duplicado '{service_id}': {first} y {second}")


class NoInputDocumentsError(CorpusError):
    """No se encontró ningún documento de entrada."""

    def __init__(self, message: str = "no input documents"):
        super().__init__(message)


class ExtractionError(CorpusError):
    """Uno o más documentos de entrada no pudieron extraerse."""

    def __init__(self, failures: List[Tuple[str, str]]):
        self.failures = list(failures)
        super().__init__(f"{len(self.failures)} documento(s) con errores")


# ==================== CONFIGURACIÓN / USO ====================

class ConfigurationError(CompositionNetworkError, ValueError):
    """Parámetros inválidos (métrica, umbral, grilla)."""


class UsageError(CompositionNetworkError):
    """Invocación incorrecta de una operación o subcomando."""


# ==================== TOPOLOGÍA ====================

class UndefinedMeasureError(CompositionNetworkError):
    """La medida no está definida para la red dada."""
