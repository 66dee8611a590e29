"""Normalized Laplacian, eigengap model selection, and spectral clustering.

The line graph is small (one vertex per hyperedge, so at most a few hundred
vertices here); a dense symmetric eigendecomposition is all that is needed.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BoundsError, EigenFailureError, IsolatedVertexError
from .hypergraph import LineGraph

EMBEDDING_NORM_TOL = 1e-12


@dataclass(frozen=True)
class SpectralResult:
    """Clustering of line-graph vertices (hyperedges) into communities.

    ``embedding`` holds the raw eigenvectors of the k smallest eigenvalues
    (orthonormal columns); the row-normalized copy used for k-means is not
    stored. ``eigenvalues`` is the full ascending spectrum.
    """

    labels: np.ndarray
    n_communities: int
    eigenvalues: np.ndarray
    embedding: np.ndarray


def normalized_laplacian(G: LineGraph) -> np.ndarray:
    """D^{-1/2} (D - A) D^{-1/2} for the similarity matrix A of the line graph."""
    A = G.similarity
    degrees = A.sum(axis=1)
    isolated = np.flatnonzero(degrees <= 0)
    if isolated.size:
        raise IsolatedVertexError(int(isolated[0]))
    inv_sqrt = 1.0 / np.sqrt(degrees)
    L = -A * inv_sqrt[:, None] * inv_sqrt[None, :]
    np.fill_diagonal(L, 1.0)
    return (L + L.T) / 2.0


def eigengap_k(eigenvalues: np.ndarray, k_min: int, k_max: int) -> int:
    """Number of communities by the largest gap among the smallest eigenvalues.

    Scans k in [k_min, k_max] of the ascending spectrum and returns the k
    maximizing lambda_{k+1} - lambda_k, ties going to the smallest k.
    """
    ev = np.asarray(eigenvalues)
    if not (2 <= k_min <= k_max < ev.shape[0]):
        raise BoundsError(
            f"need 2 <= k_min <= k_max < {ev.shape[0]}, got [{k_min}, {k_max}]"
        )
    gaps = ev[k_min : k_max + 1] - ev[k_min - 1 : k_max]
    return k_min + int(np.argmax(gaps))


def _kmeans_pp_init(points, k, rng):
    """k-means++ seeding; degenerate all-zero weights fall back to the lowest
    unchosen index so the draw stays well-defined."""
    m = points.shape[0]
    centers = np.empty((k, points.shape[1]), dtype=np.float64)
    chosen = np.zeros(m, dtype=bool)
    first = int(rng.integers(m))
    centers[0] = points[first]
    chosen[first] = True
    d2 = ((points - centers[0]) ** 2).sum(axis=1)
    for c in range(1, k):
        total = d2.sum()
        if total <= 0.0:
            idx = int(np.flatnonzero(~chosen)[0])
        else:
            idx = int(rng.choice(m, p=d2 / total))
        centers[c] = points[idx]
        chosen[idx] = True
        d2 = np.minimum(d2, ((points - centers[c]) ** 2).sum(axis=1))
    return centers


def _sq_distances(points, centers):
    return ((points[:, None, :] - centers[None, :, :]) ** 2).sum(axis=2)


def _lloyd(points, centers, max_iter):
    m, k = points.shape[0], centers.shape[0]
    labels = np.full(m, -1, dtype=np.int64)
    for _ in range(max_iter):
        dist = _sq_distances(points, centers)
        new_labels = dist.argmin(axis=1)
        # empty-cluster repair: hand the farthest point to each empty cluster
        point_cost = dist[np.arange(m), new_labels].copy()
        for cid in range(k):
            if not (new_labels == cid).any():
                far = int(point_cost.argmax())
                new_labels[far] = cid
                point_cost[far] = -1.0
        if np.array_equal(new_labels, labels):
            break
        labels = new_labels
        for cid in range(k):
            centers[cid] = points[labels == cid].mean(axis=0)
    wcss = float(((points - centers[labels]) ** 2).sum())
    return labels, wcss


def kmeans(
    points: np.ndarray,
    k: int,
    seed: int,
    n_init: int = 20,
    max_iter: int = 300,
) -> np.ndarray:
    """Best-of-restarts k-means with k-means++ seeding.

    Each restart draws from an independently spawned child of the seed
    stream, so a parallel implementation would reproduce the sequential
    result exactly. Ties in the final inertia keep the earliest restart.
    """
    points = np.asarray(points, dtype=np.float64)
    m = points.shape[0]
    if k < 1 or k > m:
        raise ValueError(f"k must be in [1, {m}], got {k}")
    children = np.random.SeedSequence(seed).spawn(n_init)
    best_labels, best_wcss = None, np.inf
    for child in children:
        rng = np.random.default_rng(child)
        centers = _kmeans_pp_init(points, k, rng)
        labels, wcss = _lloyd(points, centers.copy(), max_iter)
        if wcss < best_wcss:
            best_labels, best_wcss = labels, wcss
    return best_labels


def spectral_clustering(G: LineGraph, k: int, seed: int) -> SpectralResult:
    """Cluster line-graph vertices via the k smallest Laplacian eigenvectors.

    Rows of the embedding are scaled to unit length before k-means (the
    usual companion of the symmetric normalized Laplacian); zero rows are
    left untouched.
    """
    L = normalized_laplacian(G)
    try:
        eigenvalues, eigenvectors = np.linalg.eigh(L)
    except np.linalg.LinAlgError as exc:
        raise EigenFailureError(str(exc)) from exc
    embedding = eigenvectors[:, :k]
    norms = np.linalg.norm(embedding, axis=1)
    safe = np.where(norms > EMBEDDING_NORM_TOL, norms, 1.0)
    labels = kmeans(embedding / safe[:, None], k, seed)
    return SpectralResult(
        labels=labels,
        n_communities=k,
        eigenvalues=eigenvalues,
        embedding=embedding,
    )
