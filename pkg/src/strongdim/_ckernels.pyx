# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: 64-bit bitset searches and cyclic Jacobi.

Contracts match ``strongdim._pykernels`` exactly (same witnesses, same
eigenvalue ordering); vertex counts are limited to 63.
"""

from libc.math cimport fabs, sqrt, copysign
from libc.stdlib cimport malloc, free

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_clzll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAX_N = 63


cdef inline int _top(u64 x) nogil:
    return 63 - __builtin_clzll(x)


cdef bint _hit_search(int start, int slots, u64 chosen, const u64* masks,
                      int m, int n, u64* out) nogil:
    cdef u64 above = (~<u64>0) << start if start < 64 else 0
    cdef int limit = n
    cdef bint hit_all = True
    cdef int i, top, v
    cdef u64 avail
    for i in range(m):
        if masks[i] & chosen:
            continue
        hit_all = False
        avail = masks[i] & above
        if avail == 0:
            return False
        top = _top(avail)
        if top < limit:
            limit = top
    if hit_all:
        out[0] = chosen
        return True
    if slots == 0:
        return False
    for v in range(start, limit + 1):
        if _hit_search(v + 1, slots - 1, chosen | (<u64>1 << v), masks, m, n, out):
            return True
    return False


def min_hitting_set(int n, masks):
    """Lexicographically least minimum set meeting every (nonempty) mask."""
    if n > MAX_N:
        raise ValueError(f"compiled kernel supports at most {MAX_N} vertices")
    cdef int m = len(masks)
    if m == 0:
        return []
    cdef u64* buf = <u64*> malloc(m * sizeof(u64))
    if buf == NULL:
        raise MemoryError()
    cdef u64 found = 0
    cdef int i, k
    cdef bint ok = False
    try:
        for i in range(m):
            buf[i] = <u64> masks[i]
            if buf[i] == 0:
                raise ValueError("every mask needs at least one vertex")
        with nogil:
            for k in range(1, n + 1):
                if _hit_search(0, k, 0, buf, m, n, &found):
                    ok = True
                    break
    finally:
        free(buf)
    if not ok:
        raise AssertionError("the full vertex set always hits every nonempty mask")
    return [v for v in range(n) if (found >> v) & 1]


cdef void _expand(u64 cand, int size, u64 chosen, const u64* adj,
                  int* best_size, u64* best) nogil:
    cdef u64 low
    cdef int v
    if cand == 0:
        if size > best_size[0]:
            best_size[0] = size
            best[0] = chosen
        return
    while cand:
        if size + __builtin_popcountll(cand) <= best_size[0]:
            return
        v = __builtin_ctzll(cand)
        low = <u64>1 << v
        cand ^= low
        _expand(cand & adj[v], size + 1, chosen | low, adj, best_size, best)


def max_clique(int n, adj):
    """Lexicographically least maximum clique from neighbour masks."""
    if n > MAX_N:
        raise ValueError(f"compiled kernel supports at most {MAX_N} vertices")
    if n == 0:
        return []
    cdef u64 a[MAX_N]
    cdef int i
    for i in range(n):
        a[i] = <u64> adj[i]
    cdef int best_size = 0
    cdef u64 best = 0
    cdef u64 start = ((<u64>1) << n) - 1
    with nogil:
        _expand(start, 0, 0, a, &best_size, &best)
    return [v for v in range(n) if (best >> v) & 1]


def jacobi_eigenvalues(a, double tol, int max_sweeps=100):
    """Ascending eigenvalues of a dense symmetric matrix by cyclic Jacobi."""
    cdef int n = len(a)
    cdef double* A = <double*> malloc(max(n * n, 1) * sizeof(double))
    if A == NULL:
        raise MemoryError()
    cdef int i, j, p, q, r, sweep
    cdef double off, apq, theta, t, c, s, x, y
    cdef bint converged = False
    try:
        for i in range(n):
            row = a[i]
            for j in range(n):
                A[i * n + j] = <double> row[j]
        with nogil:
            for sweep in range(max_sweeps + 1):
                off = 0.0
                for p in range(n - 1):
                    for q in range(p + 1, n):
                        if fabs(A[p * n + q]) > off:
                            off = fabs(A[p * n + q])
                if off < tol:
                    converged = True
                    break
                if sweep == max_sweeps:
                    break
                for p in range(n - 1):
                    for q in range(p + 1, n):
                        apq = A[p * n + q]
                        if apq == 0.0:
                            continue
                        theta = (A[q * n + q] - A[p * n + p]) / (2.0 * apq)
                        if fabs(theta) > 1e150:
                            t = 0.5 / theta
                        else:
                            t = copysign(1.0, theta) / (fabs(theta) + sqrt(theta * theta + 1.0))
                        c = 1.0 / sqrt(t * t + 1.0)
                        s = t * c
                        for r in range(n):
                            x = A[r * n + p]
                            y = A[r * n + q]
                            A[r * n + p] = c * x - s * y
                            A[r * n + q] = s * x + c * y
                        for r in range(n):
                            x = A[p * n + r]
                            y = A[q * n + r]
                            A[p * n + r] = c * x - s * y
                            A[q * n + r] = s * x + c * y
                        A[p * n + q] = 0.0
                        A[q * n + p] = 0.0
        if not converged:
            raise RuntimeError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
        return sorted([A[i * n + i] for i in range(n)]), sweep
    finally:
        free(A)
