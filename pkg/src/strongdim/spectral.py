"""Laplacian spectrum and the algebraic-connectivity bounds on omega and dims."""

from __future__ import annotations

import math

import numpy as np

from . import kernels
from .graph import Graph, all_pairs_distances
from .metric import DisconnectedGraphError

__all__ = [
    "BOUND_TOL",
    "CEIL_SNAP",
    "MAX_SWEEPS",
    "laplacian",
    "laplacian_spectrum",
    "algebraic_connectivity",
    "spectral_clique_upper_bound",
    "spectral_dims_lower_bound",
]

MAX_SWEEPS = 100
BOUND_TOL = 1e-12
# Values this close to an integer are snapped before taking the ceiling.
CEIL_SNAP = 1e-9


def laplacian(g: Graph) -> np.ndarray:
    """L = D - A as a float array, filled from the edge list so it is exactly symmetric."""
    lap = np.zeros((g.n, g.n))
    for u, v in g.edges:
        lap[u, v] = lap[v, u] = -1.0
    for v in range(g.n):
        lap[v, v] = float(g.degree(v))
    return lap


def laplacian_spectrum(g: Graph, tol: float = BOUND_TOL) -> list[float]:
    """All Laplacian eigenvalues, ascending, by cyclic Jacobi."""
    if tol <= 0:
        raise ValueError("tol must be positive")
    eigs, _ = kernels.jacobi_eigenvalues(laplacian(g).tolist(), tol, MAX_SWEEPS)
    return list(eigs)


def algebraic_connectivity(g: Graph, tol: float = BOUND_TOL) -> float:
    """Second-smallest Laplacian eigenvalue; zero (within tolerance) iff G is disconnected."""
    if g.n < 2:
        raise ValueError("algebraic connectivity needs at least two vertices")
    return laplacian_spectrum(g, tol)[1]


def _connected_noncomplete(g: Graph) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError("bound needs a connected graph")
    if g.is_complete():
        raise ValueError("bound is undefined for complete graphs (mu = n)")


def spectral_clique_upper_bound(g: Graph) -> float:
    """n(Delta - mu + 1) / (n - mu), an upper bound on the clique number."""
    _connected_noncomplete(g)
    n, delta = g.n, g.max_degree()
    mu = algebraic_connectivity(g, BOUND_TOL)
    return n * (delta - mu + 1) / (n - mu)


def spectral_dims_lower_bound(h: Graph) -> int:
    """ceil(n(n - Delta - 1) / (n - mu)) for a connected graph of diameter two."""
    _connected_noncomplete(h)
    if h.n < 2 or all_pairs_distances(h).diameter() != 2:
        raise ValueError("bound needs diameter exactly two")
    n, delta = h.n, h.max_degree()
    mu = algebraic_connectivity(h, BOUND_TOL)
    x = n * (n - delta - 1) / (n - mu)
    nearest = round(x)
    if abs(x - nearest) <= CEIL_SNAP:
        return int(nearest)
    return math.ceil(x)
