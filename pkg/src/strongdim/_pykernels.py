"""Pure-Python kernels. Same contracts as the compiled ``_ckernels`` module."""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

__all__ = ["min_hitting_set", "max_clique", "jacobi_eigenvalues"]


def min_hitting_set(n: int, masks: Sequence[int]) -> list[int]:
    """Lexicographically least minimum-cardinality set meeting every mask.

    Each mask is a nonempty bitmask over ``0..n-1``. Cardinalities are tried in
    increasing order; within one cardinality the depth-first search visits
    subsets in lexicographic order, so the first hit is the lex-least one.
    """
    masks = [int(m) for m in masks]
    if any(m == 0 for m in masks):
        raise ValueError("every mask needs at least one vertex")
    if not masks:
        return []
    full = (1 << n) - 1

    def search(start: int, slots: int, chosen: int) -> int | None:
        # Next pick must not skip past the highest candidate of any unhit mask.
        above = full & ~((1 << start) - 1)
        limit = n
        hit_all = True
        for m in masks:
            if m & chosen:
                continue
            hit_all = False
            avail = m & above
            if not avail:
                return None
            top = avail.bit_length() - 1
            if top < limit:
                limit = top
        if hit_all:
            return chosen
        if slots == 0:
            return None
        for v in range(start, limit + 1):
            found = search(v + 1, slots - 1, chosen | (1 << v))
            if found is not None:
                return found
        return None

    for k in range(1, n + 1):
        found = search(0, k, 0)
        if found is not None:
            return [v for v in range(n) if found >> v & 1]
    raise AssertionError("the full vertex set always hits every nonempty mask")


def max_clique(n: int, adj: Sequence[int]) -> list[int]:
    """Lexicographically least maximum clique of the graph given by neighbour masks."""
    if n == 0:
        return []
    adj = [int(a) for a in adj]
    best: list[int] = [0, 0]  # size, mask

    def expand(cand: int, size: int, chosen: int) -> None:
        if not cand:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        while cand:
            if size + bin(cand).count("1") <= best[0]:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            expand(cand & adj[v], size + 1, chosen | low)

    expand((1 << n) - 1, 0, 0)
    return [v for v in range(n) if best[1] >> v & 1]


def jacobi_eigenvalues(a, tol: float, max_sweeps: int = 100) -> tuple[list[float], int]:
    """Eigenvalues (ascending) of a dense symmetric matrix by cyclic Jacobi.

    Stops once every off-diagonal magnitude is below ``tol``. Returns the
    eigenvalues and the number of sweeps performed; raises ``RuntimeError``
    when ``max_sweeps`` sweeps do not reach the threshold.
    """
    a = np.array(a, dtype=float)
    n = a.shape[0]
    iu = np.triu_indices(n, 1)
    for sweep in range(max_sweeps + 1):
        if n < 2 or np.max(np.abs(a[iu])) < tol:
            return sorted(float(x) for x in np.diag(a)), sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                colp = a[:, p].copy()
                colq = a[:, q].copy()
                a[:, p] = c * colp - s * colq
                a[:, q] = s * colp + c * colq
                rowp = a[p, :].copy()
                rowq = a[q, :].copy()
                a[p, :] = c * rowp - s * rowq
                a[q, :] = s * rowp + c * rowq
                a[p, q] = a[q, p] = 0.0
    raise RuntimeError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
