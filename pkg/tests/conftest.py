"""Fixtures compartidos: corpus de juguete, fábricas aleatorias y perfiles de hypothesis."""

import os
import random
from pathlib import Path
from typing import Callable, List

import hypothesis
import numpy as np
import pytest

from domain import Corpus, ServiceDescription
from services.corpus import build_corpus, operation
from services.extraction import load_json_corpus

hypothesis.settings.register_profile("fast", max_examples=20, deadline=None)
hypothesis.settings.register_profile("default", max_examples=100, deadline=None)
hypothesis.settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

PROJECT_ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = PROJECT_ROOT / "data"
TOY_DIR = DATA_DIR / "bronze" / "toy"
WSDL_DIR = DATA_DIR / "bronze" / "wsdl"
LABELS_DIR = DATA_DIR / "labels"

# nombres cortos para que distintas métricas y umbrales produzcan pares
NAME_POOL = [
    "a", "b", "ab", "ba", "abc", "abd", "acb", "bca", "cab",
    "_LOCATION", "_LOCATION1", "_LOCATION2", "_PRICE", "_PRICE1",
    "_DATE", "_HOTEL", "_HOSPITAL", "date", "price", "x",
]


@pytest.fixture
def fig1_path() -> Path:
    return TOY_DIR / "fig1.json"


@pytest.fixture
def fig2_path() -> Path:
    return TOY_DIR / "fig2.json"


@pytest.fixture
def mini_path() -> Path:
    return TOY_DIR / "mini_corpus.json"


@pytest.fixture
def labels_path() -> Path:
    return LABELS_DIR / "mini_corpus_labels.csv"


@pytest.fixture
def wsdl_dir() -> Path:
    return WSDL_DIR


@pytest.fixture
def fig2_corpus(fig2_path) -> Corpus:
    return load_json_corpus(fig2_path.read_text(encoding="utf-8"))


@pytest.fixture
def mini_corpus(mini_path) -> Corpus:
    return load_json_corpus(mini_path.read_text(encoding="utf-8"))


def random_corpus(rng: random.Random, n_services: int, pool: List[str] = NAME_POOL) -> Corpus:
    """Corpus aleatorio; algunos servicios quedan sin entradas o sin salidas."""
    services: List[ServiceDescription] = []
    for i in range(n_services):
        n_ops = rng.randint(1, 2)
        ops = []
        for j in range(n_ops):
            inputs = rng.sample(pool, rng.randint(0, 3))
            outputs = rng.sample(pool, rng.randint(0, 3))
            ops.append(operation(f"op{j}", inputs, outputs))
        services.append(ServiceDescription(id=f"s{i:02d}", name=f"S{i}", operations=tuple(ops)))
    return build_corpus(services)


@pytest.fixture
def corpus_factory() -> Callable[[int, int], Corpus]:
    def make(seed: int, n_services: int = 8) -> Corpus:
        return random_corpus(random.Random(seed), n_services)

    return make


def random_adjacency(rng: np.random.Generator, n: int, p: float) -> np.ndarray:
    adj = rng.random((n, n)) < p
    np.fill_diagonal(adj, False)
    return adj


@pytest.fixture
def adjacency_factory() -> Callable[[int, int, float], np.ndarray]:
    def make(seed: int, n: int, p: float = 0.3) -> np.ndarray:
        return random_adjacency(np.random.default_rng(seed), n, p)

    return make
