"""Topology - Propiedades topológicas de una red de interacción."""

import logging
from typing import Callable, Optional, Tuple, Union

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from core.exceptions import UndefinedMeasureError
from domain import InteractionNetwork, MetricKind, PropertyRecord

logger = logging.getLogger(__name__)

NetworkLike = Union[InteractionNetwork, np.ndarray]

# a partir de esta densidad el diámetro es chico y conviene avanzar la
# frontera con productos de matrices en lugar de un BFS por nodo
DENSE_DISTANCE_CUTOFF = 0.05


def adjacency_matrix(net: NetworkLike) -> np.ndarray:
    """Matriz booleana de adyacencia (filas = origen), en el orden de net.nodes."""
    if isinstance(net, np.ndarray):
        return net.astype(bool, copy=False)
    index = {node: i for i, node in enumerate(net.nodes)}
    adj = np.zeros((net.n_nodes, net.n_nodes), dtype=bool)
    for source, target in net.links:
        adj[index[source], index[target]] = True
    return adj


def _total_degrees(adj: np.ndarray) -> np.ndarray:
    return adj.sum(axis=0, dtype=np.int64) + adj.sum(axis=1, dtype=np.int64)


def _undirected(adj: np.ndarray) -> np.ndarray:
    return adj | adj.T


# ==================== GRADO / DENSIDAD ====================

def degree_stats(net: NetworkLike) -> Tuple[int, int, float]:
    """
    (mínimo, máximo, promedio) del grado total (entrante + saliente).

    Raises:
        UndefinedMeasureError: Red sin nodos.
    """
    adj = adjacency_matrix(net)
    n = adj.shape[0]
    if n == 0:
        raise UndefinedMeasureError("degree_stats requiere al menos un nodo")
    degrees = _total_degrees(adj)
    n_links = int(adj.sum())
    return int(degrees.min()), int(degrees.max()), 2 * n_links / n


def density(net: NetworkLike) -> float:
    """
    E / (N (N - 1)) para un grafo dirigido sin auto-enlaces.

    Raises:
        UndefinedMeasureError: Menos de 2 nodos.
    """
    adj = adjacency_matrix(net)
    n = adj.shape[0]
    if n < 2:
        raise UndefinedMeasureError("density requiere al menos 2 nodos")
    return int(adj.sum()) / (n * (n - 1))


def isolated_count(net: NetworkLike) -> int:
    """Cantidad de nodos con grado total 0."""
    adj = adjacency_matrix(net)
    return int((_total_degrees(adj) == 0).sum())


# ==================== TRANSITIVIDAD / CORRELACIÓN ====================

def transitivity(net: NetworkLike) -> float:
    """
    3 x triángulos / tripletas conexas sobre la proyección no dirigida.

    traza(A^3) cuenta cada triángulo 6 veces y sum d(d-1) cada tripleta
    2 veces, así que el cociente ya es la transitividad.

    Raises:
        UndefinedMeasureError: Menos de 3 nodos.
    """
    adj = adjacency_matrix(net)
    if adj.shape[0] < 3:
        raise UndefinedMeasureError("transitivity requiere al menos 3 nodos")
    und = _undirected(adj)
    degrees = und.sum(axis=1, dtype=np.int64)
    triples = int((degrees * (degrees - 1)).sum())
    if triples == 0:
        return 0.0
    a = und.astype(np.float64)
    closed = int(round(float(np.einsum("ij,ji->", a @ a, a))))
    return closed / triples


def degree_correlation(net: NetworkLike) -> Optional[float]:
    """
    Asortatividad de grado: Pearson de los grados totales en los extremos de
    cada enlace de la proyección no dirigida, contado en ambas orientaciones.

    Las sumas son enteras hasta la división final. Retorna None cuando todos
    los extremos tienen el mismo grado.

    Raises:
        UndefinedMeasureError: Red sin enlaces.
    """
    adj = adjacency_matrix(net)
    und = _undirected(adj)
    rows, cols = np.nonzero(np.triu(und, k=1))
    if len(rows) == 0:
        raise UndefinedMeasureError("degree_correlation requiere al menos un enlace")
    degrees = _total_degrees(adj)
    x = degrees[rows]
    y = degrees[cols]
    # ambas orientaciones: sum_x == sum_y y sum_x2 == sum_y2
    count = 2 * len(rows)
    sum_x = int(x.sum()) + int(y.sum())
    sum_x2 = int((x * x).sum()) + int((y * y).sum())
    sum_xy = 2 * int((x * y).sum())
    numerator = count * sum_xy - sum_x * sum_x
    denominator = count * sum_x2 - sum_x * sum_x
    if denominator == 0:
        return None
    return numerator / denominator


# ==================== DISTANCIAS ====================

def _distance_totals_bfs(adj: np.ndarray) -> Tuple[int, int]:
    dist = shortest_path(csr_matrix(adj), method="D", directed=True, unweighted=True)
    np.fill_diagonal(dist, np.inf)
    reachable = np.isfinite(dist)
    return int(dist[reachable].sum()), int(reachable.sum())


def _distance_totals_frontier(adj: np.ndarray) -> Tuple[int, int]:
    n = adj.shape[0]
    step = adj.astype(np.float32)
    reached = adj.copy()
    np.fill_diagonal(reached, False)
    frontier = reached.copy()
    total = int(frontier.sum())
    pairs = total
    k = 1
    while frontier.any():
        k += 1
        nxt = (frontier.astype(np.float32) @ step) > 0
        nxt &= ~reached
        np.fill_diagonal(nxt, False)
        found = int(nxt.sum())
        if found == 0:
            break
        reached |= nxt
        frontier = nxt
        total += k * found
        pairs += found
        if k > n:
            break
    return total, pairs


def average_distance(net: NetworkLike, strategy: Optional[str] = None) -> Optional[float]:
    """
    Media de las distancias dirigidas sobre los pares (u, v), u != v, con v
    alcanzable desde u. Los pares inalcanzables se excluyen.

    Args:
        net: Red o matriz de adyacencia
        strategy: "bfs", "frontier" o None (según la densidad)

    Returns:
        La distancia promedio, o None si no hay pares alcanzables
    """
    adj = adjacency_matrix(net)
    n = adj.shape[0]
    if n < 2 or not adj.any():
        return None
    if strategy is None:
        strategy = "frontier" if adj.sum() / (n * (n - 1)) >= DENSE_DISTANCE_CUTOFF else "bfs"
    compute: Callable[[np.ndarray], Tuple[int, int]] = (
        _distance_totals_frontier if strategy == "frontier" else _distance_totals_bfs
    )
    total, pairs = compute(adj)
    if pairs == 0:
        return None
    return total / pairs


# ==================== AGREGADO ====================

def _optional(measure: Callable[[np.ndarray], Optional[float]], adj: np.ndarray) -> Optional[float]:
    try:
        return measure(adj)
    except UndefinedMeasureError as e:
        logger.debug(f"Medida indefinida: {e}")
        return None


def measure_adjacency(
    adj: np.ndarray,
    metric: MetricKind,
    threshold: float,
    n_similarities: Optional[int] = None,
) -> PropertyRecord:
    """PropertyRecord a partir de una matriz de adyacencia."""
    adj = adjacency_matrix(adj)
    if adj.shape[0] == 0:
        raise UndefinedMeasureError("compute_all requiere al menos un nodo")
    min_degree, max_degree, avg_degree = degree_stats(adj)
    return PropertyRecord(
        metric=metric,
        threshold=threshold,
        n_nodes=adj.shape[0],
        n_links=int(adj.sum()),
        min_degree=min_degree,
        max_degree=max_degree,
        avg_degree=avg_degree,
        density=_optional(density, adj),
        transitivity=_optional(transitivity, adj),
        degree_correlation=_optional(degree_correlation, adj),
        avg_distance=_optional(average_distance, adj),
        n_isolated=isolated_count(adj),
        n_similarities=n_similarities,
    )


def compute_all(net: InteractionNetwork, n_similarities: Optional[int] = None) -> PropertyRecord:
    """Todas las propiedades de la red; las indefinidas quedan en None."""
    return measure_adjacency(adjacency_matrix(net), net.metric, net.threshold, n_similarities)
