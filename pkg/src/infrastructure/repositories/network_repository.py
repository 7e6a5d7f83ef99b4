"""Network Repository - Exportación de redes a DOT, GraphML y JSON."""

import logging
from pathlib import Path
from typing import Optional

import networkx as nx

from core.exceptions import UsageError
from domain import InteractionNetwork
from infrastructure.mappers import NetworkMapper
from infrastructure.models import NetworkDocument
from infrastructure.repositories.base_repository import BaseRepository, PathLike

logger = logging.getLogger(__name__)

FORMATS = ("dot", "graphml", "json")
SUFFIX_FORMATS = {".dot": "dot", ".gv": "dot", ".graphml": "graphml", ".json": "json"}


def _dot_id(value: str) -> str:
    escaped = value.replace("\\", "\\\\").replace('"', '\\"')
    return f'"{escaped}"'


def to_dot(net: InteractionNetwork) -> str:
    """Serializa la red como digraph DOT (nodos y enlaces en orden estable)."""
    lines = [
        "digraph composition {",
        f"  // metric={net.metric.value} threshold={net.threshold:.2f} "
        f"corpus={net.corpus_fingerprint or '-'}",
    ]
    lines.extend(f"  {_dot_id(node)};" for node in net.nodes)
    lines.extend(f"  {_dot_id(a)} -> {_dot_id(b)};" for a, b in net.links)
    lines.append("}")
    return "\n".join(lines) + "\n"


class NetworkRepository(BaseRepository[InteractionNetwork]):
    """Persistencia de InteractionNetwork; el formato se deduce de la extensión."""

    @staticmethod
    def format_for(path: Path, fmt: Optional[str] = None) -> str:
        if fmt:
            if fmt not in FORMATS:
                raise UsageError(f"formato desconocido '{fmt}' (válidos: {', '.join(FORMATS)})")
            return fmt
        try:
            return SUFFIX_FORMATS[path.suffix.lower()]
        except KeyError:
            raise UsageError(f"no se puede deducir el formato de '{path.name}'")

    def save(self, obj: InteractionNetwork, path: PathLike, fmt: Optional[str] = None) -> Path:
        target = self.prepare(path)
        fmt = self.format_for(target, fmt)
        if fmt == "dot":
            target.write_text(to_dot(obj), encoding="utf-8")
        elif fmt == "graphml":
            nx.write_graphml(NetworkMapper.to_digraph(obj), target)
        else:
            document = NetworkMapper.to_document(obj)
            target.write_text(document.model_dump_json(indent=2) + "\n", encoding="utf-8")
        logger.info(f"  ✓ {target} ({fmt}, {obj.n_links} enlaces)")
        return target

    def load(self, path: PathLike) -> InteractionNetwork:
        """Sólo el formato JSON de adyacencia se recarga a una InteractionNetwork."""
        source = self.resolve(path)
        document = NetworkDocument.model_validate_json(source.read_text(encoding="utf-8"))
        return NetworkMapper.from_document(document)
