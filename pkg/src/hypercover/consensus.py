"""Group-level aggregation: association matrix and consensus communities.

Subject-level co-membership matrices are averaged into an association
matrix, which is then treated like a weight matrix: top-entry hyperedges
per centroid node, line graph, eigengap, spectral clustering.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .community import Cover, CoMembershipMatrix, node_membership
from .errors import DimensionMismatchError, DisconnectedLineGraphError, InvalidOrderError
from .hypergraph import (
    IncidenceMatrix,
    LineGraph,
    is_connected,
    line_graph,
    min_connected_order,
    top_k_indices,
)
from .spectral import (
    SpectralResult,
    eigengap_k,
    normalized_laplacian,
    spectral_clustering,
)


@dataclass(frozen=True)
class AssociationMatrix:
    """N x N mean of co-membership matrices; entries in [0, 1], unit diagonal."""

    matrix: np.ndarray
    n_subjects: int
    n_runs: int

    @property
    def n_nodes(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class ConsensusResult:
    """Full consensus pipeline output, not just the final cover."""

    order: int
    incidence: IncidenceMatrix
    graph: LineGraph
    spectral: SpectralResult
    cover: Cover


def association_matrix(
    matrices: Sequence[CoMembershipMatrix],
    n_subjects: int | None = None,
    n_runs: int | None = None,
) -> AssociationMatrix:
    """Elementwise mean of co-membership matrices."""
    if not matrices:
        raise ValueError("need at least one co-membership matrix")
    n = matrices[0].n_nodes
    total = np.zeros((n, n), dtype=np.float64)
    for m in matrices:
        if m.matrix.shape != (n, n):
            raise DimensionMismatchError(
                f"expected {n}x{n} co-membership matrix, got {m.matrix.shape}"
            )
        total += m.matrix
    return AssociationMatrix(
        matrix=total / len(matrices),
        n_subjects=len(matrices) if n_subjects is None else n_subjects,
        n_runs=1 if n_runs is None else n_runs,
    )


def group_hyperedges(A: AssociationMatrix, e_group: int) -> IncidenceMatrix:
    """Per-centroid hyperedges from association weights; diagonal excluded.

    Hyperedge i is node i plus the e_group - 1 strongest associates of i,
    ties broken by lowest index.
    """
    mat = A.matrix
    n = mat.shape[0]
    if e_group < 2 or e_group > n:
        raise InvalidOrderError(e_group, n)
    incidence = np.zeros((n, n), dtype=np.int8)
    for i in range(n):
        picks = top_k_indices(mat[i], e_group - 1, exclude=i)
        incidence[i, i] = 1
        incidence[picks, i] = 1
    return IncidenceMatrix(incidence=incidence, order=e_group)


def consensus_detail(
    A: AssociationMatrix,
    e_group: int,
    seed: int,
    k_override: int | None = None,
    k_min: int = 2,
    k_max: int = 30,
    auto_order: bool = False,
) -> ConsensusResult:
    """Run the group-level pipeline on an association matrix.

    The group line graph must be connected at ``e_group``; otherwise this
    raises, telling the caller to increase the order, unless ``auto_order``
    searches for the minimum connected order starting from ``e_group``.
    """
    order = e_group
    H = group_hyperedges(A, order)
    G = line_graph(H)
    if not is_connected(G):
        if not auto_order:
            raise DisconnectedLineGraphError(order, context="group")
        weights = A.matrix.copy()
        np.fill_diagonal(weights, 0.0)
        order = min_connected_order(weights, A.n_nodes)
        if order is None:
            raise DisconnectedLineGraphError(e_group, context="group")
        H = group_hyperedges(A, order)
        G = line_graph(H)
    if k_override is not None:
        k = k_override
    else:
        hi = min(k_max, G.n_vertices - 1)
        if k_min > hi:
            k = min(2, G.n_vertices)
        else:
            probe = spectral_clustering(G, min(2, G.n_vertices), seed)
            k = eigengap_k(probe.eigenvalues, k_min, hi)
    spec = spectral_clustering(G, k, seed)
    cover = node_membership(H, spec.labels, k)
    return ConsensusResult(order=order, incidence=H, graph=G, spectral=spec, cover=cover)


def consensus_communities(
    A: AssociationMatrix,
    e_group: int,
    seed: int,
    k_override: int | None = None,
    k_min: int = 2,
    k_max: int = 30,
    auto_order: bool = False,
) -> Cover:
    """Consensus cover extracted from the association matrix."""
    return consensus_detail(A, e_group, seed, k_override, k_min, k_max, auto_order).cover
