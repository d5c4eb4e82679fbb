"""Exact exponential-time solvers with lexicographically least witnesses.

All searches go through :mod:`strongdim.kernels`, so the compiled backend is
used when available. Witness tie-breaking: among optimal sets, the one whose
sorted vertex tuple is lexicographically least.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .graph import Graph, true_twin_pairs
from .metric import _require_connected, mmd_graph, resolver_masks

__all__ = [
    "DIMS_MAX_ORDER",
    "CLIQUE_MAX_ORDER",
    "WitnessedValue",
    "dims_bruteforce",
    "twin_free_clique_number",
    "clique_number",
    "min_vertex_cover",
    "dims_lower_bound_mmd",
]

DIMS_MAX_ORDER = 20
CLIQUE_MAX_ORDER = 32


@dataclass(frozen=True)
class WitnessedValue:
    value: int
    witness: tuple[int, ...]


def _cap(g: Graph, cap: int, what: str) -> None:
    if g.n > cap:
        raise ValueError(f"{what} is limited to graphs of order <= {cap} (got {g.n})")


def dims_bruteforce(g: Graph) -> WitnessedValue:
    """Strong metric dimension by exhaustive search over vertex subsets.

    Subsets are tried by increasing size; the witness is the lex-least strong
    resolving set of minimum size. K1 gives 0 with an empty witness.
    """
    _cap(g, DIMS_MAX_ORDER, "dims_bruteforce")
    _require_connected(g)
    return _dims_cached(g)


@lru_cache(maxsize=4096)
def _dims_cached(g: Graph) -> WitnessedValue:
    witness = kernels.min_hitting_set(g.n, resolver_masks(g))
    return WitnessedValue(len(witness), tuple(witness))


def _twin_free_adjacency(g: Graph) -> list[int]:
    # Drop edges between true twins: a clique of the result is exactly a
    # twin-free clique of g.
    masks = list(g.masks)
    for u, v in true_twin_pairs(g):
        masks[u] &= ~(1 << v)
        masks[v] &= ~(1 << u)
    return masks


def twin_free_clique_number(g: Graph) -> WitnessedValue:
    """Largest clique with pairwise distinct closed neighbourhoods. G may be disconnected."""
    if g.n < 1:
        raise ValueError("twin-free clique number needs a nonempty graph")
    _cap(g, CLIQUE_MAX_ORDER, "twin_free_clique_number")
    witness = kernels.max_clique(g.n, _twin_free_adjacency(g))
    return WitnessedValue(len(witness), tuple(witness))


def clique_number(g: Graph) -> WitnessedValue:
    if g.n < 1:
        raise ValueError("clique number needs a nonempty graph")
    _cap(g, CLIQUE_MAX_ORDER, "clique_number")
    witness = kernels.max_clique(g.n, g.masks)
    return WitnessedValue(len(witness), tuple(witness))


def min_vertex_cover(g: Graph) -> WitnessedValue:
    _cap(g, CLIQUE_MAX_ORDER, "min_vertex_cover")
    witness = kernels.min_hitting_set(g.n, [(1 << u) | (1 << v) for u, v in g.edges])
    return WitnessedValue(len(witness), tuple(witness))


def dims_lower_bound_mmd(g: Graph) -> int:
    """Minimum vertex cover of the MMD graph.

    Every strong metric basis contains an endpoint of each mutually maximally
    distant pair, so this never exceeds the strong metric dimension.
    """
    return min_vertex_cover(mmd_graph(g)).value
