"""Esquema del JSON de corpus: {"services":[{"id","name"?,"operations":[...]}]}."""

from typing import Any, Iterator, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

# extra="allow" conserva las claves desconocidas en model_extra para que el
# modo estricto pueda informarlas con su ruta


class OperationDocument(BaseModel):
    model_config = ConfigDict(extra="allow")

    name: str
    inputs: List[str] = Field(default_factory=list)
    outputs: List[str] = Field(default_factory=list)


class ServiceDocument(BaseModel):
    model_config = ConfigDict(extra="allow")

    id: str = Field(min_length=1)
    name: Optional[str] = None
    operations: List[OperationDocument] = Field(default_factory=list)


class CorpusDocument(BaseModel):
    model_config = ConfigDict(extra="allow")

    services: List[ServiceDocument]

    def unknown_keys(self) -> Iterator[Tuple[str, str]]:
        """Recorre (ruta, clave) de todas las claves no declaradas."""
        yield from _extras("$", self)
        for i, service in enumerate(self.services):
            yield from _extras(f"$.services[{i}]", service)
            for j, op in enumerate(service.operations):
                yield from _extras(f"$.services[{i}].operations[{j}]", op)


def _extras(path: str, model: BaseModel) -> Iterator[Tuple[str, str]]:
    for key in sorted(model.model_extra or {}):
        yield path, key


def json_path(loc: Tuple[Any, ...]) -> str:
    """Convierte la tupla `loc` de pydantic en una ruta JSON ($.a[0].b)."""
    path = "$"
    for part in loc:
        if isinstance(part, int):
            path += f"[{part}]"
        else:
            path += f".{part}"
    return path
