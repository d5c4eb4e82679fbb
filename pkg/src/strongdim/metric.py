"""Geodesic intervals, strong resolution, and mutually maximally distant pairs.

Intervals are never materialised: ``v`` lies on a shortest ``u``-``w`` path
exactly when ``d(u, v) + d(v, w) == d(u, w)``.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .graph import DistanceMatrix, Graph, all_pairs_distances, build_graph

__all__ = [
    "DisconnectedGraphError",
    "in_interval",
    "strongly_resolves",
    "resolver_masks",
    "is_strong_resolving_set",
    "is_maximally_distant",
    "mmd_pairs",
    "mmd_graph",
]


class DisconnectedGraphError(ValueError):
    """Raised where an operation is only defined for connected graphs."""


def _require_connected(g: Graph) -> None:
    if not g.is_connected():
        raise DisconnectedGraphError("graph must be connected")


def in_interval(dist: DistanceMatrix, u: int, v: int, w: int) -> bool:
    """True iff ``v`` lies on some shortest ``u``-``w`` path."""
    if not dist.reachable(u, w):
        raise DisconnectedGraphError(f"vertices {u} and {w} are in different components")
    if not (dist.reachable(u, v) and dist.reachable(v, w)):
        return False
    return dist[u][v] + dist[v][w] == dist[u][w]


def strongly_resolves(dist: DistanceMatrix, w: int, u: int, v: int) -> bool:
    """True iff ``v`` is in I[u, w] or ``u`` is in I[v, w]."""
    return in_interval(dist, u, v, w) or in_interval(dist, v, u, w)


def resolver_masks(g: Graph, dist: DistanceMatrix | None = None) -> list[int]:
    """For each pair ``u < v`` (lexicographic), the bitmask of vertices that
    strongly resolve it. Requires a connected graph."""
    _require_connected(g)
    if dist is None:
        dist = all_pairs_distances(g)
    n = g.n
    masks = []
    for u, v in combinations(range(n), 2):
        du, dv, duv = dist[u], dist[v], dist[u][v]
        m = 0
        for w in range(n):
            # v in I[u, w]  or  u in I[v, w]
            if duv + dv[w] == du[w] or duv + du[w] == dv[w]:
                m |= 1 << w
        masks.append(m)
    return masks


def is_strong_resolving_set(g: Graph, s: Iterable[int]) -> bool:
    _require_connected(g)
    members = set(s)
    if any(not 0 <= w < g.n for w in members):
        raise ValueError("vertex set has ids outside the graph")
    dist = all_pairs_distances(g)
    return all(
        any(strongly_resolves(dist, w, u, v) for w in members)
        for u, v in combinations(range(g.n), 2)
    )


def is_maximally_distant(dist: DistanceMatrix, g: Graph, u: int, v: int) -> bool:
    """True iff ``u`` is maximally distant from ``v``: no neighbour of ``u`` is farther from ``v``."""
    _require_connected(g)
    return all(dist[v][w] <= dist[u][v] for w in g.adj[u])


def mmd_pairs(g: Graph) -> list[tuple[int, int]]:
    """Mutually maximally distant pairs ``(u, v)``, ``u < v``, in lexicographic order."""
    _require_connected(g)
    dist = all_pairs_distances(g)
    return [
        (u, v)
        for u, v in combinations(range(g.n), 2)
        if is_maximally_distant(dist, g, u, v) and is_maximally_distant(dist, g, v, u)
    ]


def mmd_graph(g: Graph) -> Graph:
    """Graph on V(G) whose edges are the mutually maximally distant pairs."""
    return build_graph(g.n, mmd_pairs(g))
