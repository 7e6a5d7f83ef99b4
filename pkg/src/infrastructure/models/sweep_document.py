"""Esquema del JSON que acompaña a cada barrido (<nombre>.config.json)."""

from typing import List

from pydantic import BaseModel, Field


class SweepMetricMeta(BaseModel):
    kind: str
    prefix_scale: float = 0.1
    max_prefix: int = 4


class SweepMetaDocument(BaseModel):
    corpus_fingerprint: str = ""
    metrics: List[SweepMetricMeta] = Field(default_factory=list)
    t_start: float
    t_end: float
    t_step: float
    n_thresholds: int
    counting_mode: str
    vacuous_links: bool
    name_source: str
