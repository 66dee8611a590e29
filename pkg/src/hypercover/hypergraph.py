"""Uniform hypergraph construction from dependency weights, and its line graph.

Hyperedge i is the centroid variable i plus the e-1 variables with the
largest coefficients in row i of the weight matrix. The line graph has one
vertex per hyperedge, weighted by pairwise Jaccard similarity of the node
sets.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InvalidOrderError, NoConnectedOrderError


@dataclass(frozen=True)
class IncidenceMatrix:
    """N x K binary matrix; column j is hyperedge j's node set."""

    incidence: np.ndarray
    order: int

    @property
    def n_nodes(self) -> int:
        return self.incidence.shape[0]

    @property
    def n_edges(self) -> int:
        return self.incidence.shape[1]

    def edge_nodes(self, j: int) -> np.ndarray:
        return np.flatnonzero(self.incidence[:, j])


@dataclass(frozen=True)
class LineGraph:
    """K x K symmetric matrix of pairwise Jaccard similarities, zero diagonal."""

    similarity: np.ndarray

    @property
    def n_vertices(self) -> int:
        return self.similarity.shape[0]


def top_k_indices(values: np.ndarray, k: int, exclude: int | None = None) -> np.ndarray:
    """Indices of the k largest entries; ties broken by lowest index."""
    n = values.shape[0]
    order = np.lexsort((np.arange(n), -values))
    if exclude is not None:
        order = order[order != exclude]
    return order[:k]


def build_hyperedges(W, e: int, positive_only: bool = False) -> IncidenceMatrix:
    """Select each variable's hyperedge from its dependency weight row.

    Takes the e-1 largest entries by signed value so every hyperedge has
    cardinality exactly e. With ``positive_only`` nonpositive picks are
    dropped instead, which can yield smaller (non-uniform) hyperedges.
    """
    weights = W.weights
    n = weights.shape[0]
    if e < 2 or e > n:
        raise InvalidOrderError(e, n)
    incidence = np.zeros((n, n), dtype=np.int8)
    for i in range(n):
        picks = top_k_indices(weights[i], e - 1, exclude=i)
        if positive_only:
            picks = picks[weights[i, picks] > 0]
        incidence[i, i] = 1
        incidence[picks, i] = 1
    return IncidenceMatrix(incidence=incidence, order=e)


def line_graph(H: IncidenceMatrix) -> LineGraph:
    """Pairwise Jaccard similarity between hyperedges, zero diagonal."""
    inc = H.incidence.astype(np.float64)
    intersection = inc.T @ inc
    sizes = inc.sum(axis=0)
    union = sizes[:, None] + sizes[None, :] - intersection
    similarity = np.divide(
        intersection, union, out=np.zeros_like(intersection), where=union > 0
    )
    np.fill_diagonal(similarity, 0.0)
    return LineGraph(similarity=similarity)


def is_connected(G: LineGraph) -> bool:
    """Breadth-first search over the strictly-positive-similarity edges."""
    sim = G.similarity
    k = sim.shape[0]
    if k <= 1:
        return True
    seen = np.zeros(k, dtype=bool)
    seen[0] = True
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in np.flatnonzero(sim[v] > 0):
            if not seen[u]:
                seen[u] = True
                queue.append(u)
    return bool(seen.all())


def min_connected_order(W, e_max: int, positive_only: bool = False) -> int | None:
    """Smallest order in [2, e_max] with a connected line graph, else None.

    Growing the order only adds nodes to each hyperedge (top-k selection is
    prefix-stable under the fixed tie-break), so connectivity is monotone in
    the order and the first hit is the minimum.
    """
    for e in range(2, e_max + 1):
        if is_connected(line_graph(build_hyperedges(W, e, positive_only))):
            return e
    return None


def min_uniform_order(
    weight_matrices: Sequence, e_max: int, positive_only: bool = False
) -> int:
    """Smallest order whose line graph is connected for every weight matrix."""
    if not weight_matrices:
        raise ValueError("need at least one weight matrix")
    n = weight_matrices[0].weights.shape[0]
    if e_max < 2 or e_max > n:
        raise InvalidOrderError(e_max, n)
    best = 2
    for W in weight_matrices:
        e = min_connected_order(W, e_max, positive_only)
        if e is None:
            raise NoConnectedOrderError(e_max)
        best = max(best, e)
    return best
