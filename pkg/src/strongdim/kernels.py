"""Kernel backend selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise the
pure-Python ``_pykernels`` module takes over. ``BACKEND`` names the choice.
Both backends return identical results.
"""

from __future__ import annotations

from . import _pykernels as python

try:
    from . import _ckernels as compiled
except ImportError:  # extension not built
    compiled = None

_impl = compiled if compiled is not None else python

BACKEND: str = "compiled" if compiled is not None else "python"

min_hitting_set = _impl.min_hitting_set
max_clique = _impl.max_clique
jacobi_eigenvalues = _impl.jacobi_eigenvalues

__all__ = ["BACKEND", "compiled", "python", "min_hitting_set", "max_clique", "jacobi_eigenvalues"]
