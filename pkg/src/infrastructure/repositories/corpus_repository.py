"""Corpus Repository - Descubrimiento y persistencia de documentos de corpus."""

import logging
from pathlib import Path
from typing import Iterable, List

from domain import Corpus
from infrastructure.mappers import CorpusMapper
from infrastructure.repositories.base_repository import BaseRepository, PathLike

logger = logging.getLogger(__name__)

WSDL_SUFFIXES = {".wsdl"}
JSON_SUFFIXES = {".json"}


class CorpusRepository(BaseRepository[Corpus]):
    """
    Archivos de corpus: WSDL crudos (bronze) y JSON normalizado (silver).

    El parseo vive en services.extraction; aquí sólo hay E/S.
    """

    def discover(self, paths: Iterable[PathLike]) -> List[Path]:
        """
        Expande archivos y directorios en documentos .wsdl/.json ordenados.

        Los directorios se recorren recursivamente.
        """
        found: List[Path] = []
        for raw in paths:
            path = self.resolve(raw)
            if path.is_dir():
                for candidate in sorted(path.rglob("*")):
                    if candidate.is_file() and candidate.suffix.lower() in WSDL_SUFFIXES | JSON_SUFFIXES:
                        found.append(candidate)
            else:
                found.append(path)
        logger.info(f"Documentos encontrados: {len(found)}")
        return found

    @staticmethod
    def is_wsdl(path: Path) -> bool:
        return path.suffix.lower() in WSDL_SUFFIXES

    def read_bytes(self, path: PathLike) -> bytes:
        return self.resolve(path).read_bytes()

    def read_text(self, path: PathLike) -> str:
        return self.resolve(path).read_text(encoding="utf-8")

    def load(self, path: PathLike) -> Corpus:
        """Carga un JSON de corpus (modo no estricto)."""
        from services.extraction import load_json_corpus

        return load_json_corpus(self.read_text(path))

    def save(self, obj: Corpus, path: PathLike) -> Path:
        """Escribe el corpus como JSON UTF-8 indentado."""
        target = self.prepare(path)
        document = CorpusMapper.to_document(obj)
        target.write_text(document.model_dump_json(indent=2, exclude_none=True) + "\n", encoding="utf-8")
        logger.info(f"  ✓ {target} ({len(obj.services)} servicios)")
        return target
