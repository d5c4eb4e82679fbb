"""Both kernel backends against the reference oracles and against each other."""

import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from strongdim import graph as gr
from strongdim import kernels
from strongdim.metric import resolver_masks
from strongdim.spectral import laplacian

from .conftest import graphs
from .oracles import clique, dims, vertex_cover


def test_backend_is_selected():
    assert kernels.BACKEND in ("compiled", "python")
    assert kernels.min_hitting_set is (kernels.compiled or kernels.python).min_hitting_set


def test_hitting_set_trivial(backend):
    assert backend.min_hitting_set(5, []) == []
    assert backend.min_hitting_set(3, [0b110, 0b011]) == [1]
    assert backend.min_hitting_set(4, [0b0011, 0b1100]) == [0, 2]


def test_hitting_set_rejects_empty_mask(backend):
    with pytest.raises(ValueError):
        backend.min_hitting_set(3, [0b1, 0])


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=1, max_n=7, connected=True))
def test_hitting_set_gives_lex_least_basis(g):
    masks = resolver_masks(g)
    expected = list(dims(g)[1])
    assert kernels.python.min_hitting_set(g.n, masks) == expected
    if kernels.compiled is not None:
        assert kernels.compiled.min_hitting_set(g.n, masks) == expected


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=0, max_n=8))
def test_cover_is_lex_least(g):
    masks = [(1 << u) | (1 << v) for u, v in g.edges]
    expected = list(vertex_cover(g)[1])
    for mod in filter(None, (kernels.python, kernels.compiled)):
        assert mod.min_hitting_set(g.n, masks) == expected


@settings(max_examples=150, deadline=None)
@given(graphs(min_n=1, max_n=9))
def test_max_clique_is_lex_least(g):
    expected = list(clique(g)[1])
    for mod in filter(None, (kernels.python, kernels.compiled)):
        assert mod.max_clique(g.n, g.masks) == expected


def test_backends_agree_on_larger_graphs():
    if kernels.compiled is None:
        pytest.skip("compiled extension not built")
    rng = random.Random(2024)
    for _ in range(25):
        g = gr.generate(gr.GraphFamilySpec("gnp-random-connected", rng.randint(10, 14), 0.4, rng.getrandbits(64)))
        m = resolver_masks(g)
        assert kernels.python.min_hitting_set(g.n, m) == kernels.compiled.min_hitting_set(g.n, m)
        big = gr.generate(gr.GraphFamilySpec("gnp-random", rng.randint(20, 32), 0.5, rng.getrandbits(64)))
        assert kernels.python.max_clique(big.n, big.masks) == kernels.compiled.max_clique(big.n, big.masks)


def test_jacobi_known_spectra(backend):
    eigs, _ = backend.jacobi_eigenvalues(laplacian(gr.cycle(4)).tolist(), 1e-12)
    assert eigs == pytest.approx([0, 2, 2, 4], abs=1e-10)
    eigs, _ = backend.jacobi_eigenvalues(laplacian(gr.petersen()).tolist(), 1e-12)
    assert eigs == pytest.approx([0] + [2] * 5 + [5] * 4, abs=1e-10)
    eigs, sweeps = backend.jacobi_eigenvalues([[3.0]], 1e-12)
    assert eigs == [3.0] and sweeps == 0


def test_jacobi_reports_non_convergence(backend):
    a = laplacian(gr.petersen()).tolist()
    with pytest.raises(RuntimeError, match="converge"):
        backend.jacobi_eigenvalues(a, 1e-12, max_sweeps=1)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 12), st.integers(0, 2**32 - 1))
def test_jacobi_matches_lapack_on_random_symmetric(n, seed):
    rng = np.random.default_rng(seed)
    x = rng.normal(size=(n, n))
    a = (x + x.T) / 2
    ref = np.linalg.eigvalsh(a)
    for mod in filter(None, (kernels.python, kernels.compiled)):
        eigs, _ = mod.jacobi_eigenvalues(a.tolist(), 1e-12)
        np.testing.assert_allclose(eigs, ref, atol=1e-9)
