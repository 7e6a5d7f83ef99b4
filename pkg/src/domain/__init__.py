from .DomainEntities import (
    NameSource,
    MetricKind,
    CountingMode,
    PairLabel,
    Parameter,
    Operation,
    ServiceDescription,
    VocabularyEntry,
    Corpus,
    SimilarityMetric,
    MatchThreshold,
    SimilarityPair,
    MatchReport,
    InteractionNetwork,
    PropertyRecord,
    SweepConfig,
    MatchSummary,
    SweepResult,
    GroundTruthLabels,
    FalsePositiveReport,
    Inflection,
)

__all__ = [
    "NameSource",
    "MetricKind",
    "CountingMode",
    "PairLabel",
    "Parameter",
    "Operation",
    "ServiceDescription",
    "VocabularyEntry",
    "Corpus",
    "SimilarityMetric",
    "MatchThreshold",
    "SimilarityPair",
    "MatchReport",
    "InteractionNetwork",
    "PropertyRecord",
    "SweepConfig",
    "MatchSummary",
    "SweepResult",
    "GroundTruthLabels",
    "FalsePositiveReport",
    "Inflection",
]
