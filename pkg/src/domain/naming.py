"""Normalización de nombres de parámetros."""

import unicodedata

from core.exceptions import CorpusSchemaError
from .DomainEntities import Parameter


def normalize_name(raw: str, fold_case: bool = False) -> str:
    """
    Normaliza un nombre de parámetro: NFC y recorte de espacios.

    La capitalización se conserva salvo que se pida fold_case. La función es
    idempotente.
    """
    name = unicodedata.normalize("NFC", raw).strip()
    if fold_case:
        name = unicodedata.normalize("NFC", name.casefold()).strip()
    return name


def make_parameter(raw_name: str, fold_case: bool = False, path: str = "$") -> Parameter:
    """
    Construye un Parameter validando que el nombre no quede vacío.

    Raises:
        CorpusSchemaError: Si el nombre es vacío o sólo contiene espacios.
    """
    if not raw_name:
        raise CorpusSchemaError("nombre de parámetro vacío", path)
    normalized = normalize_name(raw_name, fold_case=fold_case)
    if not normalized:
        raise CorpusSchemaError(f"nombre de parámetro en blanco: {raw_name!r}", path)
    return Parameter(raw_name=raw_name, normalized_name=normalized)
