"""Extraction Pipeline - Documentos de servicios: Bronze (WSDL/JSON) → Silver (corpus JSON)."""

import json
import logging
from pathlib import Path
from typing import Iterable, List, Optional, Tuple

from pydantic import ValidationError

from core.exceptions import CorpusError, CorpusSchemaError, ExtractionError, NoInputDocumentsError
from domain import Corpus, NameSource, Operation, ServiceDescription
from domain.naming import make_parameter
from infrastructure.models import CorpusDocument, json_path
from infrastructure.repositories import CorpusRepository
from infrastructure.wsdl_parser import WsdlParser, parse_wsdl
from services.corpus import build_corpus, corpus_summary

logger = logging.getLogger(__name__)

__all__ = ["ExtractionPipeline", "load_json_corpus", "parse_wsdl"]


# ==================== JSON ====================

def _document_services(
    document: CorpusDocument,
    fold_case: bool,
    origin: str = "",
) -> Tuple[List[ServiceDescription], List[str]]:
    services: List[ServiceDescription] = []
    origins: List[str] = []
    for i, service in enumerate(document.services):
        base = f"$.services[{i}]"
        operations = []
        for j, op in enumerate(service.operations):
            op_path = f"{base}.operations[{j}]"
            operations.append(
                Operation(
                    name=op.name,
                    inputs=tuple(
                        make_parameter(n, fold_case, f"{op_path}.inputs[{k}]") for k, n in enumerate(op.inputs)
                    ),
                    outputs=tuple(
                        make_parameter(n, fold_case, f"{op_path}.outputs[{k}]") for k, n in enumerate(op.outputs)
                    ),
                )
            )
        services.append(
            ServiceDescription(id=service.id, name=service.name or service.id, operations=tuple(operations))
        )
        origins.append(f"{origin}{base}")
    return services, origins


def _validate_document(text: str, strict: bool) -> CorpusDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise CorpusSchemaError(f"JSON mal formado (línea {e.lineno}, columna {e.colno}): {e.msg}") from e

    try:
        document = CorpusDocument.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        raise CorpusSchemaError(first["msg"], json_path(first["loc"])) from e

    if strict:
        for path, key in document.unknown_keys():
            raise CorpusSchemaError(f"clave desconocida '{key}'", path)
    return document


def load_json_corpus(text: str, strict: bool = False, fold_case: bool = False) -> Corpus:
    """
    Carga un corpus desde su formato JSON.

    Args:
        text: Documento JSON
        strict: Rechazar claves desconocidas
        fold_case: Normalizar nombres a minúsculas

    Raises:
        CorpusSchemaError: Violación del esquema (con la ruta JSON)
        DuplicateServiceError: Dos servicios con el mismo id
    """
    document = _validate_document(text, strict)
    services, origins = _document_services(document, fold_case)
    return build_corpus(services, origins)


# ==================== PIPELINE ====================

class ExtractionPipeline:
    """
    Recorre los documentos de entrada, extrae sus servicios y arma un
    único corpus normalizado.
    """

    def __init__(
        self,
        repository: Optional[CorpusRepository] = None,
        name_source: NameSource = NameSource.ELEMENT,
        fold_case: bool = False,
        strict: bool = False,
        keep_going: bool = False,
    ) -> None:
        """
        Inicializa el pipeline.

        Args:
            repository: Repositorio de archivos de corpus
            name_source: Regla de nombres para WSDL
            fold_case: Normalizar nombres a minúsculas
            strict: Rechazar claves desconocidas en JSON
            keep_going: Omitir documentos inválidos en lugar de abortar
        """
        self.repository = repository or CorpusRepository()
        self.fold_case = fold_case
        self.strict = strict
        self.keep_going = keep_going
        self.name_source = NameSource(name_source)
        self.failures: List[Tuple[str, str]] = []

    def _read_wsdl(self, path: Path) -> Tuple[List[ServiceDescription], List[str]]:
        parser = WsdlParser(name_source=self.name_source, fold_case=self.fold_case, base_dir=path.parent)
        service = parser.parse(self.repository.read_bytes(path), service_id=path.stem)
        return [service], [str(path)]

    def _read_json(self, path: Path) -> Tuple[List[ServiceDescription], List[str]]:
        document = _validate_document(self.repository.read_text(path), self.strict)
        return _document_services(document, self.fold_case, origin=f"{path}:")

    def extract(self, paths: Iterable) -> Corpus:
        """
        Extrae todos los documentos y arma el corpus.

        Raises:
            NoInputDocumentsError: No hay documentos de entrada
            ExtractionError: Algún documento falló y keep_going está apagado
            DuplicateServiceError: Ids repetidos entre documentos
        """
        documents = self.repository.discover(paths)
        if not documents:
            raise NoInputDocumentsError()

        services: List[ServiceDescription] = []
        origins: List[str] = []
        self.failures = []
        for path in documents:
            try:
                read = self._read_wsdl if self.repository.is_wsdl(path) else self._read_json
                found, where = read(path)
            except (CorpusError, OSError, UnicodeDecodeError) as e:
                logger.error(f"  ✗ {path}: {e}")
                self.failures.append((str(path), str(e)))
                continue
            services.extend(found)
            origins.extend(where)
            logger.debug(f"  ✓ {path} ({len(found)} servicios)")

        if self.failures:
            if not self.keep_going:
                raise ExtractionError(self.failures)
            logger.warning(f"⚠ {len(self.failures)} documento(s) omitidos")

        return build_corpus(services, origins)

    def run(self, paths: Iterable, out: Path) -> Corpus:
        """Ejecuta el pipeline completo y escribe el corpus en out."""
        logger.info("=" * 70)
        logger.info("INICIANDO EXTRACCIÓN")
        logger.info("=" * 70)

        corpus = self.extract(paths)
        self.repository.save(corpus, out)

        summary = corpus_summary(corpus)
        logger.info(
            f"EXTRACCIÓN COMPLETADA: {summary['services']} servicios, "
            f"{summary['operations']} operaciones, {summary['names']} nombres"
        )
        return corpus
