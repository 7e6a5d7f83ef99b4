from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.exceptions import ConfigurationError

FROZEN = ConfigDict(frozen=True)

# ==================== ENUMERACIONES ====================

class NameSource(str, Enum):
    """Regla para derivar el nombre de un parámetro desde un WSDL."""
    PART = "part"
    ELEMENT = "element"
    QUALIFIED = "qualified"


class MetricKind(str, Enum):
    """Funciones de similitud soportadas."""
    LEVENSHTEIN = "levenshtein"
    JARO = "jaro"
    JARO_WINKLER = "jaro_winkler"

    @property
    def label(self) -> str:
        return {
            MetricKind.LEVENSHTEIN: "Levenshtein",
            MetricKind.JARO: "Jaro",
            MetricKind.JARO_WINKLER: "Jaro-Winkler",
        }[self]


class CountingMode(str, Enum):
    """Cómo se cuentan los pares de similitud."""
    DISTINCT = "distinct"
    EXACT_CO_OCCURRENCE = "exact_co_occurrence"


class PairLabel(str, Enum):
    """Juicio humano sobre un par de nombres."""
    APPROPRIATE = "appropriate"
    FALSE_POSITIVE = "false_positive"


# ==================== CORPUS ====================

class Parameter(BaseModel):
    """Parámetro de entrada o salida de una operación."""
    model_config = FROZEN

    raw_name: str = Field(min_length=1)
    normalized_name: str


class Operation(BaseModel):
    """Operación de un servicio con sus conjuntos I_i y O_i."""
    model_config = FROZEN

    name: str
    inputs: Tuple[Parameter, ...] = ()
    outputs: Tuple[Parameter, ...] = ()


class ServiceDescription(BaseModel):
    """
    Descripción sintáctica de un servicio web.

    El id es único dentro del corpus (nombre de archivo o clave JSON).
    """
    model_config = FROZEN

    id: str = Field(min_length=1)
    name: str
    operations: Tuple[Operation, ...] = ()


class VocabularyEntry(BaseModel):
    """Nombre normalizado del corpus con sus roles y ocurrencias."""
    model_config = FROZEN

    name: str
    input_count: int = 0
    output_count: int = 0

    @property
    def as_input(self) -> bool:
        return self.input_count > 0

    @property
    def as_output(self) -> bool:
        return self.output_count > 0


class Corpus(BaseModel):
    """Colección inmutable de servicios con su vocabulario de parámetros."""
    model_config = FROZEN

    services: Tuple[ServiceDescription, ...] = ()
    vocabulary: Dict[str, VocabularyEntry] = Field(default_factory=dict)

    @property
    def ids(self) -> List[str]:
        return [s.id for s in self.services]

    def service(self, service_id: str) -> ServiceDescription:
        for svc in self.services:
            if svc.id == service_id:
                return svc
        raise KeyError(service_id)


# ==================== MÉTRICAS ====================

class SimilarityMetric(BaseModel):
    """
    Función de similitud normalizada en [0, 1].

    prefix_scale y max_prefix sólo afectan a Jaro-Winkler; su producto no
    puede superar 1 para que el puntaje quede acotado.
    """
    model_config = FROZEN

    kind: MetricKind
    prefix_scale: float = Field(default=0.1, ge=0.0, le=0.25)
    max_prefix: int = Field(default=4, ge=0)

    @model_validator(mode="after")
    def _bounded_boost(self) -> "SimilarityMetric":
        if self.prefix_scale * self.max_prefix > 1.0:
            raise ConfigurationError(
                f"prefix_scale * max_prefix debe ser <= 1 "
                f"({self.prefix_scale} * {self.max_prefix})"
            )
        return self

    @property
    def label(self) -> str:
        return self.kind.label


class MatchThreshold(BaseModel):
    """Umbral de similitud (comparación inclusiva)."""
    model_config = FROZEN

    value: float = Field(ge=0.0, le=1.0)


# ==================== RED ====================

class SimilarityPair(BaseModel):
    """Par no ordenado de nombres (name_a <= name_b) con su puntaje."""
    model_config = FROZEN

    name_a: str
    name_b: str
    score: float = Field(ge=0.0, le=1.0)

    @model_validator(mode="before")
    @classmethod
    def _order_names(cls, data):
        if isinstance(data, dict) and "name_a" in data and "name_b" in data:
            a, b = data["name_a"], data["name_b"]
            if b < a:
                data = {**data, "name_a": b, "name_b": a}
        return data

    @property
    def key(self) -> Tuple[str, str]:
        return (self.name_a, self.name_b)


class MatchReport(BaseModel):
    """Pares recuperados a un umbral y su diferencia contra el umbral 1."""
    model_config = FROZEN

    metric: SimilarityMetric
    threshold: float
    mode: CountingMode = CountingMode.DISTINCT
    pairs: Tuple[SimilarityPair, ...] = ()
    baseline_pairs: Tuple[SimilarityPair, ...] = ()

    @property
    def n_pairs(self) -> int:
        return len(self.pairs)

    @property
    def additional(self) -> Tuple[SimilarityPair, ...]:
        baseline = {p.key for p in self.baseline_pairs}
        return tuple(p for p in self.pairs if p.key not in baseline)


class InteractionNetwork(BaseModel):
    """
    Red dirigida de interacción: un nodo por servicio, un enlace α→β cuando
    las salidas de α cubren todas las entradas de β.
    """
    model_config = FROZEN

    nodes: Tuple[str, ...] = ()
    links: Tuple[Tuple[str, str], ...] = ()
    metric: MetricKind
    threshold: float
    corpus_fingerprint: str = ""
    vacuous_links: bool = False

    @model_validator(mode="after")
    def _check_links(self) -> "InteractionNetwork":
        known = set(self.nodes)
        if len(known) != len(self.nodes):
            raise ValueError("nodos duplicados en la red")
        for source, target in self.links:
            if source == target:
                raise ValueError(f"auto-enlace no permitido: {source}")
            if source not in known or target not in known:
                raise ValueError(f"enlace con nodo desconocido: {source} -> {target}")
        return self

    @property
    def n_nodes(self) -> int:
        return len(self.nodes)

    @property
    def n_links(self) -> int:
        return len(self.links)


# ==================== TOPOLOGÍA ====================

class PropertyRecord(BaseModel):
    """
    Fila del barrido: propiedades topológicas de una red.

    None marca una medida indefinida (celda vacía en el CSV).
    """
    model_config = FROZEN

    metric: MetricKind
    threshold: float
    n_nodes: int
    n_links: int
    min_degree: int
    max_degree: int
    avg_degree: float
    density: Optional[float] = None
    transitivity: Optional[float] = None
    degree_correlation: Optional[float] = None
    avg_distance: Optional[float] = None
    n_isolated: int = 0
    n_similarities: Optional[int] = None


# ==================== BARRIDO ====================

class SweepConfig(BaseModel):
    """Parámetros del barrido de umbrales."""
    model_config = FROZEN

    metrics: Tuple[SimilarityMetric, ...] = (
        SimilarityMetric(kind=MetricKind.LEVENSHTEIN),
        SimilarityMetric(kind=MetricKind.JARO),
        SimilarityMetric(kind=MetricKind.JARO_WINKLER),
    )
    t_start: float = 0.0
    t_end: float = 1.0
    t_step: float = 0.01
    counting_mode: CountingMode = CountingMode.DISTINCT
    vacuous_links: bool = False
    name_source: NameSource = NameSource.ELEMENT
    jobs: int = 1

    def grid(self) -> Tuple[float, ...]:
        """
        Grilla de umbrales por índices enteros (sin sumas acumuladas).

        Raises:
            ConfigurationError: Si los extremos o el paso no forman una grilla.
        """
        if not (0.0 <= self.t_start <= 1.0 and 0.0 <= self.t_end <= 1.0):
            raise ConfigurationError("los extremos de la grilla deben estar en [0, 1]")
        if self.t_start > self.t_end:
            raise ConfigurationError(f"t_start ({self.t_start}) > t_end ({self.t_end})")
        if self.t_step <= 0:
            raise ConfigurationError(f"t_step debe ser positivo ({self.t_step})")
        if not self.metrics:
            raise ConfigurationError("se requiere al menos una métrica")

        span = (self.t_end - self.t_start) / self.t_step
        steps = round(span)
        if abs(span - steps) > 1e-9:
            raise ConfigurationError(
                f"({self.t_end} - {self.t_start}) / {self.t_step} no es entero"
            )
        points = [round(self.t_start + i * self.t_step, 10) for i in range(steps + 1)]
        points[-1] = self.t_end
        return tuple(points)


class MatchSummary(BaseModel):
    """Conteos de similitud de un (métrica, umbral)."""
    model_config = FROZEN

    metric: MetricKind
    threshold: float
    n_pairs: int
    n_baseline: int

    @property
    def n_additional(self) -> int:
        return self.n_pairs - self.n_baseline


class SweepResult(BaseModel):
    """Registros del barrido ordenados por (métrica, umbral)."""
    model_config = FROZEN

    records: Tuple[PropertyRecord, ...] = ()
    reports: Tuple[MatchSummary, ...] = ()
    config: Optional[SweepConfig] = None
    corpus_fingerprint: str = ""

    @property
    def metrics(self) -> List[MetricKind]:
        seen: List[MetricKind] = []
        for record in self.records:
            if record.metric not in seen:
                seen.append(record.metric)
        return seen

    def records_for(self, metric: MetricKind) -> List[PropertyRecord]:
        return sorted(
            (r for r in self.records if r.metric == metric),
            key=lambda r: r.threshold,
        )

    def record_at(self, metric: MetricKind, threshold: float) -> Optional[PropertyRecord]:
        for record in self.records:
            if record.metric == metric and abs(record.threshold - threshold) < 1e-9:
                return record
        return None


class GroundTruthLabels(BaseModel):
    """Etiquetas humanas por par no ordenado de nombres normalizados."""
    model_config = FROZEN

    labels: Dict[Tuple[str, str], PairLabel] = Field(default_factory=dict)

    @staticmethod
    def pair_key(name_a: str, name_b: str) -> Tuple[str, str]:
        return (name_a, name_b) if name_a <= name_b else (name_b, name_a)

    def label_for(self, name_a: str, name_b: str) -> Optional[PairLabel]:
        return self.labels.get(self.pair_key(name_a, name_b))

    def __len__(self) -> int:
        return len(self.labels)


class FalsePositiveReport(BaseModel):
    """Conteo de falsos positivos de un MatchReport."""
    model_config = FROZEN

    metric: MetricKind
    threshold: float
    n_retrieved: int
    n_labeled: int
    n_false_positive: int
    fp_percent: Optional[float] = None
    unlabeled: Tuple[Tuple[str, str], ...] = ()


class Inflection(BaseModel):
    """Umbral de máxima segunda diferencia de una curva."""
    model_config = FROZEN

    metric: MetricKind
    threshold: float
    magnitude: float
    has_inflection: bool
