"""Simple undirected graphs: construction, named families, products, distances, file I/O.

Vertices are the integers ``0..n-1``. Graphs are immutable; every operation
returns a new graph.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

__all__ = [
    "Graph",
    "DistanceMatrix",
    "GraphFamilySpec",
    "GraphProfile",
    "GraphFormatError",
    "FAMILIES",
    "MAX_REJECTIONS",
    "build_graph",
    "complete",
    "path",
    "cycle",
    "star",
    "empty",
    "petersen",
    "generate",
    "corona",
    "join",
    "cartesian",
    "disjoint_union",
    "all_pairs_distances",
    "profile",
    "true_twin_pairs",
    "read_graph",
    "write_graph",
    "parse_graph",
    "format_graph",
]

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "star",
    "empty",
    "petersen",
    "tree-random",
    "gnp-random-connected",
    "gnp-random",
)

# Upper bound on rejected draws for gnp-random-connected.
MAX_REJECTIONS = 10_000


class GraphFormatError(ValueError):
    """Malformed graph file; ``line`` is the 1-based offending line (0 if unknown)."""

    def __init__(self, message: str, line: int = 0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


@dataclass(frozen=True)
class Graph:
    """Finite simple graph on vertices ``0..n-1``.

    ``adj[v]`` is the frozenset of neighbours of ``v``. Use :func:`build_graph`
    rather than the constructor; it validates and normalises the edge list.
    """

    n: int
    adj: tuple[frozenset[int], ...] = field(repr=False)

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal the order")
        for v, nbrs in enumerate(self.adj):
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise ValueError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise ValueError(f"self-loop at {v}")
                if v not in self.adj[u]:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")

    @property
    def order(self) -> int:
        return self.n

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return tuple((u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v)

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Open neighbourhoods as integer bitmasks."""
        return tuple(sum(1 << u for u in nbrs) for nbrs in self.adj)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def closed_neighborhood(self, v: int) -> frozenset[int]:
        return self.adj[v] | {v}

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for u in self.adj[v]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
        return len(seen) == self.n

    def is_complete(self) -> bool:
        return all(len(a) == self.n - 1 for a in self.adj)

    def induced_is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(u, v) for u, v in combinations(vs, 2))

    def has_triangle(self) -> bool:
        return any(self.adj[u] & self.adj[v] for u, v in self.edges)

    def complement(self) -> Graph:
        return build_graph(
            self.n, [(u, v) for u, v in combinations(range(self.n), 2) if not self.has_edge(u, v)]
        )

    def __str__(self) -> str:
        return format_graph(self)


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Return the simple graph of order ``n`` with the given edges.

    Duplicate pairs collapse to one edge; self-loops and out-of-range ids raise
    ``ValueError``.
    """
    if n < 0:
        raise ValueError("order must be nonnegative")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for pair in edges:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop ({u}, {v}) is not allowed in a simple graph")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(frozenset(s) for s in nbrs))


# -- named families ----------------------------------------------------------


def complete(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(n: int) -> Graph:
    """K_{1,n-1}: centre 0, leaves 1..n-1."""
    if n < 1:
        raise ValueError("a star needs at least 1 vertex")
    return build_graph(n, [(0, i) for i in range(1, n)])


def empty(n: int) -> Graph:
    return build_graph(n, [])


def petersen() -> Graph:
    """Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


@dataclass(frozen=True)
class GraphFamilySpec:
    """A named family plus parameters; random families are fixed by ``seed``.

    Random draws use :class:`random.Random` (Mersenne Twister) seeded with
    ``seed``. ``gnp-random-connected`` draws G(n, p) repeatedly from that one
    stream until a connected graph appears, giving up after
    :data:`MAX_REJECTIONS` rejections. ``tree-random`` decodes a uniformly
    drawn Pruefer sequence.
    """

    family: str
    n: int = 0
    p: float | None = None
    seed: int = 0

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if self.family == "petersen":
            if self.n not in (0, 10):
                raise ValueError("petersen has order 10")
            return
        if self.n < 1:
            raise ValueError(f"{self.family} needs n >= 1")
        if self.family == "cycle" and self.n < 3:
            raise ValueError("cycle needs n >= 3")
        if self.family.startswith("gnp"):
            if self.p is None or not 0.0 <= self.p <= 1.0:
                raise ValueError(f"{self.family} needs an edge probability p in [0, 1]")
            if self.family == "gnp-random-connected" and self.p == 0.0 and self.n >= 2:
                raise ValueError("p = 0 can never produce a connected graph on n >= 2 vertices")
        elif self.p is not None:
            raise ValueError(f"{self.family} takes no edge probability")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def _gnp(n: int, p: float, rng: random.Random) -> Graph:
    return build_graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def _random_tree(n: int, rng: random.Random) -> Graph:
    if n <= 2:
        return path(n)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(n) if degree[x] == 1)
    edges.append((u, w))
    return build_graph(n, edges)


def generate(spec: GraphFamilySpec) -> Graph:
    """Build the graph described by ``spec``; deterministic in ``spec``."""
    spec.validate()
    fam, n = spec.family, spec.n
    if fam == "path":
        return path(n)
    if fam == "cycle":
        return cycle(n)
    if fam == "complete":
        return complete(n)
    if fam == "star":
        return star(n)
    if fam == "empty":
        return empty(n)
    if fam == "petersen":
        return petersen()
    rng = random.Random(spec.seed)
    if fam == "tree-random":
        return _random_tree(n, rng)
    assert spec.p is not None
    if fam == "gnp-random":
        return _gnp(n, spec.p, rng)
    for _ in range(MAX_REJECTIONS + 1):
        g = _gnp(n, spec.p, rng)
        if g.is_connected():
            return g
    raise RuntimeError(
        f"no connected G({n}, {spec.p}) draw after {MAX_REJECTIONS} rejections (seed {spec.seed})"
    )


# -- products ----------------------------------------------------------------


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """Vertices of ``graphs[i]`` are shifted by the total order of the ones before it."""
    edges: list[tuple[int, int]] = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return build_graph(offset, edges)


def corona(g: Graph, h: Graph) -> Graph:
    """Corona product: G keeps ids ``0..n1-1``; copy ``i`` of H sits at
    ``n1 + i*n2 .. n1 + (i+1)*n2 - 1`` and is fully joined to G-vertex ``i``."""
    if g.n < 1:
        raise ValueError("corona needs a nonempty first factor")
    n1, n2 = g.n, h.n
    edges = list(g.edges)
    for i in range(n1):
        base = n1 + i * n2
        edges.extend((base + u, base + v) for u, v in h.edges)
        edges.extend((i, base + x) for x in range(n2))
    return build_graph(n1 + n1 * n2, edges)


def join(g: Graph, h: Graph) -> Graph:
    """Join: G keeps ids ``0..n1-1``, H is shifted to ``n1..n1+n2-1``."""
    if g.n < 1 or h.n < 1:
        raise ValueError("join needs two nonempty factors")
    n1 = g.n
    edges = list(g.edges)
    edges.extend((n1 + u, n1 + v) for u, v in h.edges)
    edges.extend((u, n1 + v) for u in range(n1) for v in range(h.n))
    return build_graph(n1 + h.n, edges)


def cartesian(g: Graph, h: Graph) -> Graph:
    """Cartesian product; vertex ``(a, b)`` is flattened to ``a*n2 + b``."""
    if g.n < 1 or h.n < 1:
        raise ValueError("cartesian product needs two nonempty factors")
    n2 = h.n
    edges = [(a * n2 + x, a * n2 + y) for a in range(g.n) for x, y in h.edges]
    edges += [(a * n2 + b, c * n2 + b) for a, c in g.edges for b in range(n2)]
    return build_graph(g.n * n2, edges)


# -- distances ---------------------------------------------------------------


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances. Unreachable pairs hold :attr:`sentinel` (= n)."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def sentinel(self) -> int:
        return len(self.rows)

    def __getitem__(self, u: int) -> tuple[int, ...]:
        return self.rows[u]

    def __len__(self) -> int:
        return len(self.rows)

    def reachable(self, u: int, v: int) -> bool:
        return self.rows[u][v] != self.sentinel

    def diameter(self) -> int:
        """Largest distance; the sentinel when some pair is unreachable."""
        return max((max(r) for r in self.rows), default=0)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    """BFS from every vertex."""
    n = g.n
    rows = []
    for s in range(n):
        dist = [n] * n
        dist[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if dist[u] == n:
                    dist[u] = dist[v] + 1
                    queue.append(u)
        rows.append(tuple(dist))
    return DistanceMatrix(tuple(rows))


@dataclass(frozen=True)
class GraphProfile:
    connected: bool
    diameter: int  # n (the sentinel) when disconnected
    max_degree: int
    universal_count: int
    true_twin_pairs: tuple[tuple[int, int], ...]


def true_twin_pairs(g: Graph) -> tuple[tuple[int, int], ...]:
    closed = [g.closed_neighborhood(v) for v in range(g.n)]
    return tuple((u, v) for u, v in combinations(range(g.n), 2) if closed[u] == closed[v])


def profile(g: Graph) -> GraphProfile:
    dist = all_pairs_distances(g)
    return GraphProfile(
        connected=g.is_connected(),
        diameter=dist.diameter(),
        max_degree=g.max_degree(),
        universal_count=sum(1 for a in g.adj if len(a) == g.n - 1),
        true_twin_pairs=true_twin_pairs(g),
    )


# -- file format -------------------------------------------------------------


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.size}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    """Parse the ``n m`` header + ``u v`` edge-line format; ``#`` lines are comments."""
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    lineno = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphFormatError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError("negative count in header", lineno)
            header = (a, b)
            continue
        if len(edges) == header[1]:
            raise GraphFormatError(f"more than the declared {header[1]} edges", lineno)
        if not 0 <= a < b < header[0]:
            raise GraphFormatError(f"edge must satisfy 0 <= u < v < {header[0]}, got {a} {b}", lineno)
        edges.append((a, b))
    if header is None:
        raise GraphFormatError("missing 'n m' header", lineno)
    if len(edges) != header[1]:
        raise GraphFormatError(f"declared {header[1]} edges, found {len(edges)}", lineno)
    if len(set(edges)) != len(edges):
        raise GraphFormatError("duplicate edge", lineno)
    return build_graph(header[0], edges)


def read_graph(file: str | Path) -> Graph:
    return parse_graph(Path(file).read_text())


def write_graph(g: Graph, file: str | Path) -> None:
    Path(file).write_text(format_graph(g))
