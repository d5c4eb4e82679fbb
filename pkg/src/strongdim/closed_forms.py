"""Closed forms for the strong metric dimension of join and corona products.

Every function checks the hypotheses of the result it applies and records
them in ``FormulaResult.hypothesis_trace``. If a hypothesis fails, it raises
:class:`HypothesisError` carrying the trace. It never extrapolates.

Small-factor strong dimensions inside the relation formulas come from
:func:`~strongdim.solvers.dims_bruteforce`, never from another closed form.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Graph, all_pairs_distances, complete, disjoint_union, join, true_twin_pairs
from .solvers import clique_number, dims_bruteforce, twin_free_clique_number

__all__ = [
    "THEOREM_IDS",
    "FormulaResult",
    "HypothesisError",
    "InconsistencyError",
    "dims_diameter_two",
    "varpi_join",
    "dims_join",
    "corona_reduction_graph",
    "dims_corona",
    "dims_corona_triangle_free",
    "dims_corona_relations",
    "dims_kr_plus_h",
    "dims_diameter_two_via_omega",
]

THEOREM_IDS = (
    "twin-clique-diam2",
    "join-varpi-i",
    "join-varpi-ii",
    "join-dims-i",
    "join-dims-ii",
    "join-dims-iii",
    "corona-reduction",
    "corona-dims-i",
    "corona-dims-ii",
    "corona-k1",
    "corona-triangle-free",
    "relations-i",
    "relations-ii",
    "relations-iii",
    "kr-plus-h-i",
    "kr-plus-h-ii",
    "kr-plus-h-iii",
    "diam2-omega",
    "diam2-omega-twins",
)

Trace = tuple[tuple[str, bool], ...]


class HypothesisError(ValueError):
    """The inputs fall outside every case of the requested result."""

    def __init__(self, message: str, trace: Trace):
        lines = "; ".join(f"{cond}: {ok}" for cond, ok in trace)
        super().__init__(f"{message} [{lines}]")
        self.trace = trace


class InconsistencyError(RuntimeError):
    """Two applicable cases disagree. Indicates a bug, since the cases are proven equal."""


@dataclass(frozen=True)
class FormulaResult:
    value: int
    theorem_id: str
    hypothesis_trace: Trace = field(default=())


class _Checks:
    """Accumulates the hypotheses of the case being applied; rejected case
    probes are not recorded, so a returned trace is all true."""

    def __init__(self) -> None:
        self.items: list[tuple[str, bool]] = []

    def add(self, cond: str, ok: bool) -> bool:
        self.items.append((cond, bool(ok)))
        return bool(ok)

    def require(self, message: str) -> None:
        if not all(ok for _, ok in self.items):
            raise HypothesisError(message, self.trace)

    def fail(self, message: str):
        raise HypothesisError(message, self.trace)

    def result(self, value: int, theorem_id: str) -> FormulaResult:
        return FormulaResult(value, theorem_id, self.trace)

    @property
    def trace(self) -> Trace:
        return tuple(self.items)


def _diameter(g: Graph) -> int:
    return all_pairs_distances(g).diameter()


def _has_universal(g: Graph) -> bool:
    return g.max_degree() == g.n - 1


def _universal_count(g: Graph) -> int:
    return sum(1 for v in range(g.n) if g.degree(v) == g.n - 1)


def _only_universal_twins(g: Graph) -> bool:
    return all(g.degree(u) == g.n - 1 and g.degree(v) == g.n - 1 for u, v in true_twin_pairs(g))


def dims_diameter_two(h: Graph) -> FormulaResult:
    """n - varpi(H) for a connected graph of diameter two."""
    ck = _Checks()
    ck.add("H connected", h.is_connected())
    ck.add("order >= 2", h.n >= 2)
    ck.require("twin-clique theorem needs a connected graph of order >= 2")
    ck.add("diameter == 2", _diameter(h) == 2)
    ck.require("equality case needs diameter exactly two")
    return ck.result(h.n - twin_free_clique_number(h).value, "twin-clique-diam2")


def _join_factor_checks(g: Graph, h: Graph) -> _Checks:
    ck = _Checks()
    ck.add("G connected", g.is_connected())
    ck.add("H connected", h.is_connected())
    ck.add("n1 >= 2", g.n >= 2)
    ck.add("n2 >= 2", h.n >= 2)
    ck.require("join results need connected factors of order >= 2")
    return ck


def varpi_join(g: Graph, h: Graph) -> FormulaResult:
    ck = _join_factor_checks(g, h)
    total = twin_free_clique_number(g).value + twin_free_clique_number(h).value
    if _has_universal(g) and _has_universal(h):
        ck.add("Delta1 = n1-1 and Delta2 = n2-1", True)
        return ck.result(total - 1, "join-varpi-ii")
    ck.add("Delta1 != n1-1 or Delta2 != n2-1", True)
    return ck.result(total, "join-varpi-i")


def dims_join(g: Graph, h: Graph) -> FormulaResult:
    """Strong dimension of G + H.

    Both factors with a universal vertex: dims(G) + dims(H) + 1. Both of
    diameter two otherwise: dims(G) + dims(H), cross-checked against the
    twin-free clique form. Remaining inputs: n1 + n2 - varpi(G) - varpi(H).
    """
    ck = _join_factor_checks(g, h)
    if _has_universal(g) and _has_universal(h):
        ck.add("Delta1 = n1-1 and Delta2 = n2-1", True)
        return ck.result(dims_bruteforce(g).value + dims_bruteforce(h).value + 1, "join-dims-iii")
    ck.add("Delta1 != n1-1 or Delta2 != n2-1", True)
    via_varpi = g.n + h.n - twin_free_clique_number(g).value - twin_free_clique_number(h).value
    if _diameter(g) == 2 and _diameter(h) == 2:
        ck.add("diam(G) = 2 and diam(H) = 2", True)
        value = dims_bruteforce(g).value + dims_bruteforce(h).value
        if value != via_varpi:
            raise InconsistencyError(
                f"join cases disagree: dims(G)+dims(H) = {value}, n1+n2-varpi(G)-varpi(H) = {via_varpi}"
            )
        return ck.result(value, "join-dims-ii")
    return ck.result(via_varpi, "join-dims-i")


def corona_reduction_graph(g: Graph, h: Graph) -> Graph:
    """K1 joined to n1 disjoint copies of H.

    The apex is vertex 0; copy ``i`` occupies ``1 + i*n2 .. 1 + (i+1)*n2 - 1``.
    Has the same strong dimension as the corona of G and H.
    """
    if g.n < 1:
        raise ValueError("corona reduction needs a nonempty first factor")
    if not g.is_connected():
        raise HypothesisError("corona reduction needs a connected first factor", (("G connected", False),))
    return join(complete(1), disjoint_union([h] * g.n))


def _corona_checks(g: Graph, h: Graph) -> _Checks:
    ck = _Checks()
    ck.add("G connected", g.is_connected())
    ck.add("n1 >= 1", g.n >= 1)
    ck.add("n2 >= 1", h.n >= 1)
    ck.require("corona results need a connected G and nonempty factors")
    return ck


def dims_corona(g: Graph, h: Graph) -> FormulaResult:
    ck = _corona_checks(g, h)
    n1, n2 = g.n, h.n
    if n2 == 1 and n1 >= 2:
        ck.add("H = K1 and n1 >= 2", True)
        return ck.result(n1 - 1, "corona-k1")
    varpi = twin_free_clique_number(h).value
    if n1 == 1 and h.max_degree() == n2 - 1:
        ck.add("n1 = 1 and Delta(H) = n2-1", True)
        return ck.result(n2 + 1 - varpi, "corona-dims-i")
    ck.add("Delta(H) <= n2-2 or n1 >= 2", True)
    return ck.result(n1 * n2 - varpi, "corona-dims-ii")


def dims_corona_triangle_free(g: Graph, h: Graph, strict: bool = True) -> FormulaResult:
    """n1*n2 - 2 for triangle-free H.

    With ``strict`` (the default) H must also have a vertex of degree >= 2.
    Without one, a triangle-free H has no twin-free edge, varpi(H) = 1, and
    the value is n1*n2 - 1 instead. ``strict=False`` drops that condition and
    exists only to demonstrate the counterexamples.
    """
    ck = _corona_checks(g, h)
    n1, n2 = g.n, h.n
    ck.add("H triangle-free", not h.has_triangle())
    ck.add("n2 >= 3", n2 >= 3)
    ck.add("n1 >= 2 or Delta(H) <= n2-2", n1 >= 2 or h.max_degree() <= n2 - 2)
    if strict:
        ck.add("Delta(H) >= 2", h.max_degree() >= 2)
    ck.require("triangle-free corona formula does not apply")
    return ck.result(n1 * n2 - 2, "corona-triangle-free")


def dims_corona_relations(g: Graph, h: Graph) -> FormulaResult:
    """Strong dimension of the corona expressed through dims(H) or dims(K1 + H).

    The first case (dims(K1 + H) = dims(H) + 1 when H has a universal vertex)
    is about K1 + H, which is the corona only when n1 = 1; it is applied only
    then.
    """
    ck = _corona_checks(g, h)
    n1, n2 = g.n, h.n
    connected = h.is_connected()
    diam = _diameter(h) if connected else None
    delta = h.max_degree()
    if n1 == 1 and connected and delta == n2 - 1:
        ck.add("n1 = 1, H connected, Delta(H) = n2-1", True)
        return ck.result(dims_bruteforce(h).value + 1, "relations-i")
    if connected and diam == 2 and (delta <= n2 - 2 or n1 >= 2):
        ck.add("H diameter 2 and (Delta(H) <= n2-2 or n1 >= 2)", True)
        return ck.result((n1 - 1) * n2 + dims_bruteforce(h).value, "relations-ii")
    if not connected or diam > 2:
        ck.add("H disconnected or diam(H) > 2", True)
        return ck.result((n1 - 1) * n2 + dims_bruteforce(join(complete(1), h)).value, "relations-iii")
    ck.add("H connected", connected)
    ck.add(f"diam(H) = {diam} (neither 2 nor > 2)", False)
    ck.add("n1 = 1 with Delta(H) = n2-1", n1 == 1 and delta == n2 - 1)
    ck.fail("no case of the corona relations theorem applies")


def dims_kr_plus_h(r: int, h: Graph) -> FormulaResult:
    """Strong dimension of K_r + H from dims(H) or dims(K1 + H)."""
    ck = _Checks()
    ck.add("r >= 1", r >= 1)
    ck.add("n >= 1", h.n >= 1)
    ck.require("K_r + H needs r >= 1 and a nonempty H")
    n = h.n
    delta = h.max_degree()
    connected = h.is_connected()
    diam = _diameter(h) if connected else None
    if delta == n - 1:
        ck.add("Delta = n-1", True)
        return ck.result(dims_bruteforce(h).value + r, "kr-plus-h-i")
    if connected and diam == 2:
        ck.add("Delta <= n-2 and diam(H) = 2", True)
        return ck.result(dims_bruteforce(h).value + r - 1, "kr-plus-h-ii")
    if not connected or diam > 2:
        ck.add("H disconnected or diam(H) > 2", True)
        return ck.result(dims_bruteforce(join(complete(1), h)).value + r - 1, "kr-plus-h-iii")
    ck.add(f"diam(H) = {diam}", False)
    ck.fail("no case of the K_r + H corollary applies")


def dims_diameter_two_via_omega(h: Graph, g: Graph | None = None) -> FormulaResult:
    """Strong dimension from the clique number when true twins are restricted.

    Without ``g``: H connected of diameter two; twin-free gives n - omega, and
    twins only among universal vertices gives n + c - omega - 1, where c counts
    universal vertices. With ``g``: the same twin conditions applied to the
    corona of G and H (H need not have diameter two).

    The c-form is used only when twins actually exist (so c >= 2). For a
    twin-free H with c = 0 it would be off by one.
    """
    ck = _Checks()
    n2 = h.n
    twins = true_twin_pairs(h)
    omega = clique_number(h).value if n2 >= 1 else 0
    c = _universal_count(h)
    if g is None:
        ck.add("H connected", h.is_connected())
        ck.add("diameter == 2", h.n >= 2 and _diameter(h) == 2)
        ck.require("clique form needs a connected graph of diameter two")
        if not twins:
            ck.add("H has no true twins", True)
            return ck.result(n2 - omega, "diam2-omega")
        ck.add("only true twins are universal vertices", _only_universal_twins(h))
        ck.require("true twins other than universal vertices")
        return ck.result(n2 + c - omega - 1, "diam2-omega-twins")

    ck.add("G connected", g.is_connected())
    ck.add("n1 >= 1", g.n >= 1)
    ck.add("n2 >= 1", n2 >= 1)
    ck.require("corona clique form needs a connected G and nonempty factors")
    n1 = g.n
    if n1 >= 2:
        ck.add("n1 >= 2", True)
        if not twins:
            ck.add("H has no true twins", True)
            return ck.result(n1 * n2 - omega, "diam2-omega")
        ck.add("only true twins are universal vertices", _only_universal_twins(h))
        ck.require("true twins other than universal vertices")
        return ck.result(n1 * n2 + c - 1 - omega, "diam2-omega-twins")
    ck.add("n1 = 1", True)
    if not twins:
        ck.add("H has no true twins", True)
        if h.max_degree() == n2 - 1:
            ck.add("Delta = n2-1", True)
            return ck.result(n2 + 1 - omega, "diam2-omega")
        ck.add("Delta <= n2-2", True)
        return ck.result(n2 - omega, "diam2-omega")
    ck.add("only true twins are universal vertices", _only_universal_twins(h))
    ck.require("true twins other than universal vertices")
    return ck.result(n2 + c - omega, "diam2-omega-twins")
