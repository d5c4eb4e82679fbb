"""Randomised verification of the closed forms and bounds against exact oracles.

A theorem check draws one graph per factor from seeded families, applies the
formula (skipping the trial when its hypotheses fail), and compares it with a
brute-force oracle on the explicitly constructed graph. Reports depend only
on ``(theorem_id, family, trials, seed)``.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import closed_forms as cf
from .graph import (
    Graph,
    GraphFamilySpec,
    corona,
    generate,
    join,
    parse_graph,
)
from .metric import is_strong_resolving_set
from .solvers import (
    CLIQUE_MAX_ORDER,
    DIMS_MAX_ORDER,
    clique_number,
    dims_bruteforce,
    dims_lower_bound_mmd,
    twin_free_clique_number,
)
from .spectral import spectral_clique_upper_bound, spectral_dims_lower_bound

__all__ = [
    "SCHEMA_VERSION",
    "THEOREMS",
    "Factor",
    "Comparison",
    "TheoremCheck",
    "VerificationReport",
    "verify_theorem",
    "replay",
]

SCHEMA_VERSION = 1
CLIQUE_BOUND_SLACK = 1e-9


class NotApplicable(Exception):
    """Trial skipped: the drawn graphs miss the theorem's hypotheses."""


@dataclass(frozen=True)
class Factor:
    label: str
    family: str
    n_min: int
    n_max: int
    p: float | None = 0.5

    def to_dict(self) -> dict:
        return {"label": self.label, "family": self.family, "n": [self.n_min, self.n_max], "p": self.p}


@dataclass(frozen=True)
class Comparison:
    expected: int | float  # formula or bound value
    oracle: int | float
    holds: bool


@dataclass(frozen=True)
class TheoremCheck:
    theorem_id: str
    description: str
    factors: tuple[Factor, ...]
    order: Callable[[list[int]], int]  # order of the graph the oracle sees
    default_max_n: int
    solver_cap: int
    check: Callable[..., Comparison]


def _formula(fn: Callable[..., cf.FormulaResult], *args) -> int:
    try:
        return fn(*args).value
    except cf.HypothesisError as exc:
        raise NotApplicable(str(exc)) from None


def _equal(expected: int, oracle: int) -> Comparison:
    return Comparison(expected, oracle, expected == oracle)


# -- individual checks ---------------------------------------------------------


def _twin_clique_upper(h: Graph) -> Comparison:
    if h.n < 2:
        raise NotApplicable("order < 2")
    w = twin_free_clique_number(h).witness
    dims = dims_bruteforce(h).value
    rest = [v for v in range(h.n) if v not in w]
    bound = h.n - len(w)
    return Comparison(bound, dims, dims <= bound and is_strong_resolving_set(h, rest))


def _twin_clique_diam2(h: Graph) -> Comparison:
    return _equal(_formula(cf.dims_diameter_two, h), dims_bruteforce(h).value)


def _diam2_omega(h: Graph) -> Comparison:
    return _equal(_formula(cf.dims_diameter_two_via_omega, h), dims_bruteforce(h).value)


def _corona_omega(g: Graph, h: Graph) -> Comparison:
    return _equal(_formula(cf.dims_diameter_two_via_omega, h, g), dims_bruteforce(corona(g, h)).value)


def _join_varpi(g: Graph, h: Graph) -> Comparison:
    return _equal(_formula(cf.varpi_join, g, h), twin_free_clique_number(join(g, h)).value)


def _join_dims(g: Graph, h: Graph) -> Comparison:
    return _equal(_formula(cf.dims_join, g, h), dims_bruteforce(join(g, h)).value)


def _corona_reduction(g: Graph, h: Graph) -> Comparison:
    reduced = dims_bruteforce(cf.corona_reduction_graph(g, h)).value
    return _equal(reduced, dims_bruteforce(corona(g, h)).value)


def _corona_dims(g: Graph, h: Graph) -> Comparison:
    return _equal(_formula(cf.dims_corona, g, h), dims_bruteforce(corona(g, h)).value)


def _corona_triangle_free(g: Graph, h: Graph) -> Comparison:
    return _equal(_formula(cf.dims_corona_triangle_free, g, h), dims_bruteforce(corona(g, h)).value)


def _corona_triangle_free_literal(g: Graph, h: Graph) -> Comparison:
    value = _formula(lambda a, b: cf.dims_corona_triangle_free(a, b, strict=False), g, h)
    return _equal(value, dims_bruteforce(corona(g, h)).value)


def _relations(g: Graph, h: Graph) -> Comparison:
    return _equal(_formula(cf.dims_corona_relations, g, h), dims_bruteforce(corona(g, h)).value)


def _kr_plus_h(kr: Graph, h: Graph) -> Comparison:
    return _equal(_formula(cf.dims_kr_plus_h, kr.n, h), dims_bruteforce(join(kr, h)).value)


def _mmd_lower_bound(g: Graph) -> Comparison:
    lb, dims = dims_lower_bound_mmd(g), dims_bruteforce(g).value
    return Comparison(lb, dims, lb <= dims)


def _spectral_clique(g: Graph) -> Comparison:
    if g.is_complete():
        raise NotApplicable("complete graph")
    bound, omega = spectral_clique_upper_bound(g), clique_number(g).value
    return Comparison(bound, omega, omega <= bound + CLIQUE_BOUND_SLACK)


def _spectral_dims(h: Graph) -> Comparison:
    try:
        bound = spectral_dims_lower_bound(h)
    except ValueError as exc:
        raise NotApplicable(str(exc)) from None
    dims = dims_bruteforce(h).value
    return Comparison(bound, dims, bound <= dims)


def _single(n_min: int, n_max: int, p: float = 0.5, family: str = "gnp-random-connected"):
    return (Factor("G", family, n_min, n_max, p),)


def _pair(g: tuple[int, int], h: tuple[int, int], h_family: str = "gnp-random", p: float = 0.5):
    return (
        Factor("G", "gnp-random-connected", g[0], g[1], p),
        Factor("H", h_family, h[0], h[1], p),
    )


def _order_single(ns: list[int]) -> int:
    return ns[0]


def _order_corona(ns: list[int]) -> int:
    return ns[0] * (1 + ns[1])


def _order_join(ns: list[int]) -> int:
    return ns[0] + ns[1]


_CHECKS = [
    TheoremCheck("twin-clique-upper", "dims(H) <= n - varpi(H); V - W strongly resolving",
                 _single(2, 9), _order_single, 9, DIMS_MAX_ORDER, _twin_clique_upper),
    TheoremCheck("twin-clique-diam2", "dims(H) = n - varpi(H) for diameter two",
                 _single(4, 9), _order_single, 9, DIMS_MAX_ORDER, _twin_clique_diam2),
    TheoremCheck("diam2-omega", "clique-number forms for diameter-two H with restricted twins",
                 _single(4, 9, 0.6), _order_single, 9, DIMS_MAX_ORDER, _diam2_omega),
    TheoremCheck("corona-omega", "clique-number forms for coronas with restricted twins",
                 _pair((1, 3), (1, 4)), _order_corona, 15, DIMS_MAX_ORDER, _corona_omega),
    TheoremCheck("join-varpi", "varpi(G + H) from varpi(G), varpi(H)",
                 _pair((2, 6), (2, 6), "gnp-random-connected"), _order_join, 12, CLIQUE_MAX_ORDER,
                 _join_varpi),
    TheoremCheck("join-dims", "dims(G + H), three cases",
                 _pair((2, 6), (2, 6), "gnp-random-connected"), _order_join, 12, DIMS_MAX_ORDER,
                 _join_dims),
    TheoremCheck("corona-reduction", "dims(G o H) = dims(K1 + n1 H)",
                 _pair((1, 3), (1, 3)), _order_corona, 12, DIMS_MAX_ORDER, _corona_reduction),
    TheoremCheck("corona-dims", "dims(G o H) = n1 n2 - varpi(H) (and the K1 + H case)",
                 _pair((1, 4), (1, 4)), _order_corona, 16, DIMS_MAX_ORDER, _corona_dims),
    TheoremCheck("corona-k1", "dims(G o K1) = n1 - 1",
                 (Factor("G", "gnp-random-connected", 2, 10, 0.5), Factor("H", "complete", 1, 1, None)),
                 _order_corona, 20, DIMS_MAX_ORDER, _corona_dims),
    TheoremCheck("corona-triangle-free", "dims(G o H) = n1 n2 - 2 for triangle-free H with Delta >= 2",
                 _pair((1, 3), (3, 5), p=0.4), _order_corona, 16, DIMS_MAX_ORDER, _corona_triangle_free),
    TheoremCheck("corona-triangle-free-literal",
                 "dims(G o H) = n1 n2 - 2 under the published hypotheses only (has counterexamples)",
                 _pair((1, 3), (3, 5), p=0.3), _order_corona, 16, DIMS_MAX_ORDER,
                 _corona_triangle_free_literal),
    TheoremCheck("relations", "dims(G o H) via dims(H) or dims(K1 + H)",
                 _pair((1, 3), (1, 4)), _order_corona, 15, DIMS_MAX_ORDER, _relations),
    TheoremCheck("kr-plus-h", "dims(K_r + H) via dims(H) or dims(K1 + H)",
                 (Factor("K_r", "complete", 1, 4, None), Factor("H", "gnp-random", 1, 7, 0.5)),
                 _order_join, 11, DIMS_MAX_ORDER, _kr_plus_h),
    TheoremCheck("mmd-lower-bound", "MMD-graph vertex cover <= dims",
                 _single(2, 10), _order_single, 10, DIMS_MAX_ORDER, _mmd_lower_bound),
    TheoremCheck("spectral-clique", "omega <= n(Delta - mu + 1)/(n - mu)",
                 _single(4, 12), _order_single, 12, CLIQUE_MAX_ORDER, _spectral_clique),
    TheoremCheck("spectral-dims", "dims >= ceil(n(n - Delta - 1)/(n - mu)) for diameter two",
                 _single(4, 10), _order_single, 10, DIMS_MAX_ORDER, _spectral_dims),
]

THEOREMS: dict[str, TheoremCheck] = {c.theorem_id: c for c in _CHECKS}


@dataclass
class VerificationReport:
    theorem_id: str
    family: dict
    seed: int
    trials_attempted: int = 0
    trials_applicable: int = 0
    failures: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "schema_version": SCHEMA_VERSION,
            "theorem_id": self.theorem_id,
            "family": self.family,
            "seed": self.seed,
            "trials_attempted": self.trials_attempted,
            "trials_applicable": self.trials_applicable,
            "failures": self.failures,
            "counterexamples": self.counterexamples,
        }
        if timing:
            d["wall_time"] = self.wall_time
        return d


def _draw_sizes(check: TheoremCheck, rng: random.Random, max_n: int) -> list[int]:
    sizes: list[int] = []
    mins = [f.n_min for f in check.factors]
    for i, f in enumerate(check.factors):
        hi = f.n_max
        while hi > f.n_min and check.order(sizes + [hi] + mins[i + 1 :]) > max_n:
            hi -= 1
        sizes.append(rng.randint(f.n_min, hi))
    return sizes


def _draw(check: TheoremCheck, rng: random.Random, max_n: int) -> list[GraphFamilySpec]:
    specs = []
    for f, n in zip(check.factors, _draw_sizes(check, rng, max_n)):
        seed = rng.getrandbits(64)
        if f.family.startswith("gnp"):
            specs.append(GraphFamilySpec(f.family, n, f.p, seed))
        else:
            specs.append(GraphFamilySpec(f.family, n))
    return specs


def verify_theorem(
    theorem_id: str, trials: int, seed: int, max_n: int | None = None
) -> VerificationReport:
    """Run ``trials`` seeded trials of one theorem check."""
    if theorem_id not in THEOREMS:
        raise KeyError(f"unknown theorem {theorem_id!r}; known: {', '.join(THEOREMS)}")
    if trials < 0:
        raise ValueError("trials must be nonnegative")
    check = THEOREMS[theorem_id]
    max_n = check.default_max_n if max_n is None else max_n
    if max_n > check.solver_cap:
        raise ValueError(f"--max-n {max_n} exceeds the solver cap {check.solver_cap} for {theorem_id}")
    if check.order([f.n_min for f in check.factors]) > max_n:
        raise ValueError(f"--max-n {max_n} is below the smallest graph {theorem_id} can draw")
    family = {"factors": [f.to_dict() for f in check.factors], "max_order": max_n}
    report = VerificationReport(theorem_id, family, seed)
    rng = random.Random(seed)
    start = time.perf_counter()
    for trial in range(trials):
        specs = _draw(check, rng, max_n)
        graphs = [generate(s) for s in specs]
        report.trials_attempted += 1
        try:
            cmp = check.check(*graphs)
        except NotApplicable:
            continue
        report.trials_applicable += 1
        if not cmp.holds:
            report.counterexamples.append(
                {
                    "trial": trial,
                    "params": [
                        {"label": f.label, "family": s.family, "n": s.n, "p": s.p, "seed": s.seed}
                        for f, s in zip(check.factors, specs)
                    ],
                    "graphs": {f.label: str(g) for f, g in zip(check.factors, graphs)},
                    "expected": cmp.expected,
                    "oracle": cmp.oracle,
                }
            )
    report.counterexamples.sort(key=lambda c: c["trial"])
    report.failures = len(report.counterexamples)
    report.wall_time = time.perf_counter() - start
    return report


def replay(theorem_id: str, counterexample: dict) -> Comparison:
    """Re-run a stored counterexample through the same formula/oracle pair."""
    check = THEOREMS[theorem_id]
    graphs = [parse_graph(counterexample["graphs"][f.label]) for f in check.factors]
    return check.check(*graphs)


def format_report(report: VerificationReport, timing: bool = False) -> str:
    lines = [
        f"theorem={report.theorem_id}",
        f"seed={report.seed}",
        f"trials_attempted={report.trials_attempted}",
        f"trials_applicable={report.trials_applicable}",
        f"failures={report.failures}",
    ]
    for c in report.counterexamples:
        sizes = ",".join(f"{p['label']}:n={p['n']}" for p in c["params"])
        lines.append(f"counterexample trial={c['trial']} {sizes} expected={c['expected']} oracle={c['oracle']}")
    if timing:
        lines.append(f"wall_time={report.wall_time:.3f}")
    lines.append("status=" + ("verified" if report.failures == 0 else "counterexample"))
    return "\n".join(lines) + "\n"

