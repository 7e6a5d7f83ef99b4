"""Corpus - Normalización de nombres, conjuntos I/O y vocabulario del corpus."""

import hashlib
import logging
from typing import Dict, FrozenSet, Iterable, Tuple

from core.exceptions import DuplicateServiceError
from domain import Corpus, Operation, ServiceDescription, VocabularyEntry
from domain.naming import make_parameter, normalize_name

logger = logging.getLogger(__name__)


def service_io(service: ServiceDescription) -> Tuple[FrozenSet[str], FrozenSet[str]]:
    """Retorna (I_α, O_α): uniones deduplicadas de entradas y salidas."""
    inputs = frozenset(p.normalized_name for op in service.operations for p in op.inputs)
    outputs = frozenset(p.normalized_name for op in service.operations for p in op.outputs)
    return inputs, outputs


def build_vocabulary(services: Iterable[ServiceDescription]) -> Dict[str, VocabularyEntry]:
    """
    Vocabulario ordenado: por nombre, cuántas veces aparece como parámetro de
    entrada y de salida en todas las operaciones del corpus.
    """
    counts: Dict[str, list] = {}
    for service in services:
        for op in service.operations:
            for p in op.inputs:
                counts.setdefault(p.normalized_name, [0, 0])[0] += 1
            for p in op.outputs:
                counts.setdefault(p.normalized_name, [0, 0])[1] += 1
    return {
        name: VocabularyEntry(name=name, input_count=c[0], output_count=c[1])
        for name, c in sorted(counts.items())
    }


def build_corpus(services: Iterable[ServiceDescription], origins: Iterable[str] = ()) -> Corpus:
    """
    Arma un Corpus validando unicidad de ids.

    Args:
        services: Servicios en orden de documento
        origins: Ubicación de cada servicio (para mensajes de error)

    Raises:
        DuplicateServiceError: Si dos servicios comparten id.
    """
    services = list(services)
    origins = list(origins) or [f"$.services[{i}]" for i in range(len(services))]
    seen: Dict[str, str] = {}
    for service, origin in zip(services, origins):
        if service.id in seen:
            raise DuplicateServiceError(service.id, seen[service.id], origin)
        seen[service.id] = origin

    for service in services:
        for op in service.operations:
            if not op.inputs and not op.outputs:
                logger.warning(f"⚠ Operación sin parámetros: {service.id}.{op.name}")

    corpus = Corpus(services=tuple(services), vocabulary=build_vocabulary(services))
    logger.debug(
        f"Corpus armado: {len(corpus.services)} servicios, "
        f"{len(corpus.vocabulary)} nombres distintos"
    )
    return corpus


def corpus_fingerprint(corpus: Corpus) -> str:
    """Huella sha256 (16 hex) del contenido del corpus."""
    digest = hashlib.sha256()
    for service in corpus.services:
        digest.update(f"S\x00{service.id}\x00{service.name}\x00".encode("utf-8"))
        for op in service.operations:
            digest.update(f"O\x00{op.name}\x00".encode("utf-8"))
            for p in op.inputs:
                digest.update(f"I\x00{p.raw_name}\x00".encode("utf-8"))
            for p in op.outputs:
                digest.update(f"U\x00{p.raw_name}\x00".encode("utf-8"))
    return digest.hexdigest()[:16]


def corpus_summary(corpus: Corpus) -> Dict[str, int]:
    """Conteos para la línea de resumen de extracción."""
    return {
        "services": len(corpus.services),
        "operations": sum(len(s.operations) for s in corpus.services),
        "names": len(corpus.vocabulary),
    }


def operation(name: str, inputs: Iterable[str], outputs: Iterable[str], fold_case: bool = False) -> Operation:
    """Atajo para construir una Operation desde nombres crudos."""
    return Operation(
        name=name,
        inputs=tuple(make_parameter(n, fold_case) for n in inputs),
        outputs=tuple(make_parameter(n, fold_case) for n in outputs),
    )
