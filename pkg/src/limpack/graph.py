"""Simple undirected graphs, vertex sets, the edge-list format and test families.

Vertices are dense integers ``0..n-1``. A :class:`Graph` never changes after
construction, so one instance can be shared between worker processes.
"""
from __future__ import annotations

import io
import itertools
from collections import deque
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import InputError, ParseError

REGULAR_RETRY_CAP = 1000


class Graph:
    """Immutable simple undirected graph backed by sorted adjacency tuples."""

    __slots__ = ("n", "adjacency", "m", "_nbr_sets")

    def __init__(self, n: int, adjacency: Sequence[Iterable[int]]):
        if n < 0:
            raise InputError(f"vertex count must be non-negative, got {n}")
        if len(adjacency) != n:
            raise InputError(f"expected {n} adjacency lists, got {len(adjacency)}")
        adj = tuple(tuple(sorted(nbrs)) for nbrs in adjacency)
        sets = tuple(frozenset(nbrs) for nbrs in adj)
        half = 0
        for v, nbrs in enumerate(adj):
            if len(sets[v]) != len(nbrs):
                raise InputError(f"vertex {v} has a repeated neighbour")
            for u in nbrs:
                if not 0 <= u < n:
                    raise InputError(f"vertex {v} lists neighbour {u} outside [0, {n})")
                if u == v:
                    raise InputError(f"self-loop at vertex {v}")
                if v not in sets[u]:
                    raise InputError(f"edge {v}-{u} is not symmetric")
            half += len(nbrs)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adjacency", adj)
        object.__setattr__(self, "m", half // 2)
        object.__setattr__(self, "_nbr_sets", sets)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) has an endpoint outside [0, {n})")
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise InputError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        return cls(n, adj)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self):
        return hash((self.n, self.adjacency))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def __reduce__(self):
        return (Graph, (self.n, self.adjacency))

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._nbr_sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                if u < v:
                    yield u, v

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise InputError(f"vertex {v} outside [0, {self.n})")


class VertexSet:
    """Mutable subset of ``range(universe_size)``."""

    __slots__ = ("universe_size", "_members")

    def __init__(self, universe_size: int, members: Iterable[int] = ()):
        self.universe_size = universe_size
        self._members: set[int] = set()
        for v in members:
            self.add(v)

    @classmethod
    def full(cls, universe_size: int) -> "VertexSet":
        return cls(universe_size, range(universe_size))

    def add(self, v: int) -> None:
        if not 0 <= v < self.universe_size:
            raise InputError(f"vertex {v} outside [0, {self.universe_size})")
        self._members.add(v)

    def discard(self, v: int) -> None:
        self._members.discard(v)

    def __contains__(self, v) -> bool:
        return v in self._members

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self._members))

    def __len__(self) -> int:
        return len(self._members)

    def __eq__(self, other):
        if not isinstance(other, VertexSet):
            return NotImplemented
        return self.universe_size == other.universe_size and self._members == other._members

    def __repr__(self):
        return f"VertexSet({self.universe_size}, {sorted(self._members)})"

    def copy(self) -> "VertexSet":
        return VertexSet(self.universe_size, self._members)

    def sorted(self) -> list[int]:
        return sorted(self._members)


def degree(g: Graph, v: int) -> int:
    return len(g.neighbors(v))


def max_degree(g: Graph) -> int:
    if g.n == 0:
        raise InputError("maximum degree of the empty graph is undefined")
    return max(len(nbrs) for nbrs in g.adjacency)


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise InputError("minimum degree of the empty graph is undefined")
    return min(len(nbrs) for nbrs in g.adjacency)


def check_universe(g: Graph, s: VertexSet) -> None:
    if s.universe_size != g.n:
        raise InputError(f"vertex set built for n={s.universe_size}, graph has n={g.n}")


def closed_neighborhood_count(g: Graph, v: int, s: VertexSet) -> int:
    """Return ``|N[v] & s|``."""
    check_universe(g, s)
    return (v in s) + sum(1 for u in g.neighbors(v) if u in s)


def is_connected(g: Graph) -> bool:
    """Breadth-first connectivity test; graphs on at most one vertex count as connected."""
    if g.n <= 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    queue = deque([0])
    reached = 1
    while queue:
        v = queue.popleft()
        for u in g.adjacency[v]:
            if not seen[u]:
                seen[u] = True
                reached += 1
                queue.append(u)
    return reached == g.n


# -- edge-list text format -------------------------------------------------------


def parse_graph(data) -> Graph:
    """Parse the ``n m`` header + ``u v`` edge-list format.

    ``data`` may be ``str`` or ``bytes``. Lines starting with ``#`` and blank
    lines are skipped. Errors carry the 1-based line number.
    """
    if isinstance(data, (bytes, bytearray)):
        data = data.decode("utf-8")
    header = None
    n = m = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(data.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            nums = [int(f) for f in fields]
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno) from None
        if len(nums) != 2:
            raise ParseError(f"expected two integers, got {len(nums)}", lineno)
        if header is None:
            n, m = nums
            if n < 0 or m < 0:
                raise ParseError("header values must be non-negative", lineno)
            header = lineno
            continue
        u, v = nums
        if len(edges) == m:
            raise ParseError(f"more than the {m} edges declared in the header", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex index out of range [0, {n}) in edge {u} {v}", lineno)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", lineno)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {u} {v}", lineno)
        seen.add(key)
        edges.append(key)
    if header is None:
        raise ParseError("missing 'n m' header", 1)
    if len(edges) != m:
        raise ParseError(f"header declares {m} edges, found {len(edges)}", header)
    return Graph.from_edges(n, edges)


def write_graph(g: Graph) -> bytes:
    out = io.StringIO()
    out.write(f"{g.n} {g.m}\n")
    for u, v in g.edges():
        out.write(f"{u} {v}\n")
    return out.getvalue().encode("ascii")


def read_graph_file(path) -> Graph:
    with open(path, "rb") as fh:
        return parse_graph(fh.read())


# -- generators -------------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    _need(n >= 0, "complete graph needs n >= 0")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}: centre 0 joined to ``leaves`` leaves."""
    _need(leaves >= 0, "star needs a non-negative leaf count")
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def empty_graph(n: int) -> Graph:
    _need(n >= 0, "edgeless graph needs n >= 0")
    return Graph(n, [()] * n)


def rook_graph(n: int) -> Graph:
    """K_n [] K_n. Vertex ``(i, j)`` is ``i * n + j``; same row or column means adjacent."""
    _need(n >= 1, "rook graph needs n >= 1")
    adj = []
    for i in range(n):
        for j in range(n):
            row = [i * n + c for c in range(n) if c != j]
            col = [r * n + j for r in range(n) if r != i]
            adj.append(row + col)
    return Graph(n * n, adj)


def gnp_graph(n: int, p: float, seed: int) -> Graph:
    _need(n >= 0, "G(n,p) needs n >= 0")
    _need(0.0 <= p <= 1.0, f"edge probability {p} outside [0, 1]")
    rng = np.random.default_rng(seed)
    pairs = list(itertools.combinations(range(n), 2))
    keep = rng.random(len(pairs)) < p
    return Graph.from_edges(n, [e for e, k in zip(pairs, keep) if k])


def random_regular_graph(n: int, d: int, seed: int, max_attempts: int = REGULAR_RETRY_CAP) -> Graph:
    """Uniform-ish d-regular graph from the pairing model.

    Each attempt shuffles the stub list and pairs consecutive stubs; pairs that
    would form a loop or a repeated edge go back into the pool, which is
    reshuffled until it empties or no admissible pair remains. A stuck attempt
    is thrown away. After ``max_attempts`` failures an :class:`InputError` is
    raised.
    """
    _need(n >= 1, "random regular graph needs n >= 1")
    _need(0 <= d < n, f"degree {d} must satisfy 0 <= d < n = {n}")
    _need((n * d) % 2 == 0, f"n*d = {n * d} is odd")
    rng = np.random.default_rng(seed)
    for _ in range(max_attempts):
        edges = _pairing_attempt(n, d, rng)
        if edges is not None:
            return Graph.from_edges(n, sorted(edges))
    raise InputError(f"no simple {d}-regular graph on {n} vertices after {max_attempts} attempts")


def _pairing_attempt(n, d, rng):
    edges: set[tuple[int, int]] = set()
    stubs = np.repeat(np.arange(n), d)
    while len(stubs):
        stubs = rng.permutation(stubs)
        leftover = []
        for a, b in zip(stubs[0::2].tolist(), stubs[1::2].tolist()):
            key = (a, b) if a < b else (b, a)
            if a != b and key not in edges:
                edges.add(key)
            else:
                leftover += [a, b]
        if not leftover:
            break
        if not _can_pair(leftover, edges):
            return None
        stubs = np.array(leftover)
    return edges


def _can_pair(stubs, edges):
    distinct = sorted(set(stubs))
    return any(
        (a, b) not in edges for a, b in itertools.combinations(distinct, 2)
    )


FAMILIES = {
    "complete": ("n",),
    "cycle": ("n",),
    "path": ("n",),
    "star": ("n",),
    "empty": ("n",),
    "gnp": ("n", "p", "seed"),
    "random_regular": ("n", "d", "seed"),
    "rook": ("n",),
}


def generate(family: str, n: int, p: float | None = None, d: int | None = None,
             seed: int | None = None) -> Graph:
    """Build a graph from a named family.

    ``star n`` means K_{1,n}; ``rook n`` means K_n [] K_n on n*n vertices.
    """
    if family not in FAMILIES:
        raise InputError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    given = {"n": n, "p": p, "d": d, "seed": seed}
    missing = [name for name in FAMILIES[family] if given[name] is None]
    if missing:
        raise InputError(f"family {family!r} needs {', '.join(missing)}")
    if family == "complete":
        return complete_graph(n)
    if family == "cycle":
        return cycle_graph(n)
    if family == "path":
        return path_graph(n)
    if family == "star":
        return star_graph(n)
    if family == "empty":
        return empty_graph(n)
    if family == "rook":
        return rook_graph(n)
    if family == "gnp":
        return gnp_graph(n, p, seed)
    return random_regular_graph(n, d, seed)


def _need(cond: bool, message: str) -> None:
    if not cond:
        raise InputError(message)
