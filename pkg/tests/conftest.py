import random

import pytest
from hypothesis import strategies as st

from strongdim import graph as gr
from strongdim import kernels


@st.composite
def graphs(draw, min_n=1, max_n=8, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    g = gr.build_graph(n, chosen)
    if connected and not g.is_connected():
        g = gr.build_graph(n, chosen + [(u, u + 1) for u in range(n - 1)])
    return g


def random_connected(rng: random.Random, n_min: int, n_max: int, p: float = 0.5) -> gr.Graph:
    spec = gr.GraphFamilySpec("gnp-random-connected", rng.randint(n_min, n_max), p, rng.getrandbits(64))
    return gr.generate(spec)


def random_any(rng: random.Random, n_min: int, n_max: int, p: float = 0.5) -> gr.Graph:
    return gr.generate(gr.GraphFamilySpec("gnp-random", rng.randint(n_min, n_max), p, rng.getrandbits(64)))


@pytest.fixture(params=["python", "compiled"])
def backend(request):
    mod = getattr(kernels, request.param)
    if mod is None:
        pytest.skip("compiled extension not built")
    return mod


# Acceptance criteria outcomes, printed after the run.
CRITERIA_LOG: list[tuple[str, bool, str]] = []


def record(criterion: str, ok: bool, detail: str = "") -> bool:
    CRITERIA_LOG.append((criterion, ok, detail))
    return ok


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA_LOG:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in CRITERIA_LOG:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {criterion}  {detail}".rstrip())
