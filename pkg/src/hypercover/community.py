"""Overlapping node covers derived from hyperedge community labels.

Nodes inherit every community label carried by a hyperedge they belong to,
so a node sitting in hyperedges from two communities is a member of both.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DimensionMismatchError
from .hypergraph import IncidenceMatrix


@dataclass(frozen=True)
class Cover:
    """Binary N x K node-membership matrix plus bookkeeping.

    ``label_map`` records the renumbering applied when empty communities are
    pruned (original label -> column). ``strength`` is an optional fractional
    membership (per-node share of hyperedges in each community, rows summing
    to 1); it is reporting-only and never feeds co-membership.
    """

    membership: np.ndarray
    community_sizes: np.ndarray
    label_map: dict = field(default_factory=dict)
    strength: np.ndarray | None = None

    @property
    def n_nodes(self) -> int:
        return self.membership.shape[0]

    @property
    def n_communities(self) -> int:
        return self.membership.shape[1]

    def communities(self) -> list[np.ndarray]:
        return [np.flatnonzero(self.membership[:, j]) for j in range(self.n_communities)]


@dataclass(frozen=True)
class CoMembershipMatrix:
    """Binary N x N symmetric matrix, 1 iff two nodes share a community."""

    matrix: np.ndarray

    @property
    def n_nodes(self) -> int:
        return self.matrix.shape[0]


def node_membership(H: IncidenceMatrix, edge_labels: np.ndarray, k: int) -> Cover:
    """Build the node cover from hyperedge labels, pruning empty communities."""
    labels = np.asarray(edge_labels)
    if labels.shape[0] != H.n_edges:
        raise DimensionMismatchError(
            f"{labels.shape[0]} labels for {H.n_edges} hyperedges"
        )
    inc = H.incidence.astype(bool)
    raw = np.zeros((H.n_nodes, k), dtype=np.int8)
    counts = np.zeros((H.n_nodes, k), dtype=np.float64)
    for j in range(k):
        edges_j = labels == j
        if edges_j.any():
            raw[:, j] = inc[:, edges_j].any(axis=1)
            counts[:, j] = inc[:, edges_j].sum(axis=1)
    kept = np.flatnonzero(raw.any(axis=0))
    membership = raw[:, kept]
    label_map = {int(orig): new for new, orig in enumerate(kept)}
    per_node = counts.sum(axis=1, keepdims=True)
    strength = np.divide(
        counts[:, kept], per_node, out=np.zeros_like(counts[:, kept]), where=per_node > 0
    )
    return Cover(
        membership=membership,
        community_sizes=membership.sum(axis=0, dtype=np.int64),
        label_map=label_map,
        strength=strength,
    )


def co_membership(Y: Cover) -> CoMembershipMatrix:
    """Indicator of sharing at least one community; symmetric, unit diagonal."""
    m = Y.membership.astype(np.int64)
    shared = (m @ m.T) > 0
    matrix = (shared | shared.T).astype(np.int8)
    np.fill_diagonal(matrix, 1)
    return CoMembershipMatrix(matrix=matrix)


def cover_from_communities(
    communities: list, n_nodes: int, require_cover: bool = True
) -> Cover:
    """Construct a Cover from explicit node-id lists.

    With ``require_cover`` every node must appear in at least one community
    (the invariant pipeline-produced covers satisfy); disable it for
    deliberately partial covers such as random baselines.
    """
    if not communities:
        raise ValueError("need at least one community")
    membership = np.zeros((n_nodes, len(communities)), dtype=np.int8)
    for j, nodes in enumerate(communities):
        idx = np.asarray(list(nodes), dtype=np.int64)
        if idx.size == 0:
            raise ValueError(f"community {j} is empty")
        if idx.min() < 0 or idx.max() >= n_nodes:
            raise ValueError(f"community {j} has node ids outside [0, {n_nodes})")
        membership[idx, j] = 1
    if require_cover and not membership.any(axis=1).all():
        missing = np.flatnonzero(~membership.any(axis=1))
        raise ValueError(f"nodes {missing.tolist()} belong to no community")
    return Cover(
        membership=membership,
        community_sizes=membership.sum(axis=0, dtype=np.int64),
        label_map={j: j for j in range(len(communities))},
    )
