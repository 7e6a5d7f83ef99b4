"""Esquema del JSON de adyacencia: {"nodes":[...],"links":[["a","b"],...],"meta":{...}}."""

from typing import List, Optional, Tuple

from pydantic import BaseModel, Field


class NetworkMeta(BaseModel):
    metric: str
    threshold: float
    corpus_fingerprint: str = ""
    vacuous_links: bool = False
    n_nodes: Optional[int] = None
    n_links: Optional[int] = None


class NetworkDocument(BaseModel):
    nodes: List[str] = Field(default_factory=list)
    links: List[Tuple[str, str]] = Field(default_factory=list)
    meta: NetworkMeta
