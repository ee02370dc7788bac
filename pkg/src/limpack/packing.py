"""k-limited packings: verification, the randomized construction, and exact solvers."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bounds import log_binomial
from .errors import CapacityError, InputError, UndefinedParameterError
from .graph import Graph, VertexSet, check_universe, max_degree, min_degree

DEFAULT_ORACLE_CAP = 30


@dataclass(frozen=True)
class PackingInstance:
    graph: Graph
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise InputError(f"k must be >= 1, got {self.k}")


@dataclass
class PackingResult:
    set: VertexSet
    size: int
    seed: int | None = None
    is_maximal: bool = False


def _closed_counts(g: Graph, x: VertexSet) -> list[int]:
    counts = [0] * g.n
    for v in x:
        counts[v] += 1
        for u in g.adjacency[v]:
            counts[u] += 1
    return counts


def verify_packing(inst: PackingInstance, x: VertexSet) -> bool:
    """True iff every closed neighbourhood holds at most k members of ``x``."""
    check_universe(inst.graph, x)
    return all(c <= inst.k for c in _closed_counts(inst.graph, x))


def verify_ktuple_dominating(inst: PackingInstance, y: VertexSet) -> bool:
    """True iff every closed neighbourhood holds at least k members of ``y``."""
    check_universe(inst.graph, y)
    return all(c >= inst.k for c in _closed_counts(inst.graph, y))


def is_maximal_packing(inst: PackingInstance, x: VertexSet) -> bool:
    """True iff ``x`` is a k-limited packing and no outside vertex can join it."""
    g, k = inst.graph, inst.k
    check_universe(g, x)
    counts = _closed_counts(g, x)
    if any(c > k for c in counts):
        return False
    return not any(
        v not in x and _can_add(g, counts, v, k) for v in range(g.n)
    )


def compute_p(delta: int, k: int) -> float:
    """Selection probability (1 / (C(Delta+1, k+1) (1+k)))^(1/k)."""
    if not 1 <= k <= delta:
        raise InputError(f"selection probability needs 1 <= k <= Delta, got k={k}, Delta={delta}")
    return math.exp(-(log_binomial(delta + 1, k + 1) + math.log1p(k)) / k)


def compute_p_rewritten(delta: int, k: int) -> float:
    """Equal to :func:`compute_p`, written as 1 / (C(Delta, k) (Delta+1))^(1/k)."""
    if not 1 <= k <= delta:
        raise InputError(f"selection probability needs 1 <= k <= Delta, got k={k}, Delta={delta}")
    return math.exp(-(log_binomial(delta, k) + math.log(delta + 1)) / k)


def randomized_packing(inst: PackingInstance, seed: int) -> PackingResult:
    """Randomized k-limited packing.

    1. Every vertex, in ascending order, joins A with probability
       :func:`compute_p` (one uniform draw each).
    2. One ascending pass: with r = |N(v) & A| for the current A, drop the
       r - k + 1 highest-index members of N(v) & A if v is in A and r >= k,
       or the r - k highest-index ones if v is outside A and r > k.
    3. Greedy ascending extension to a maximal packing.

    When k >= Delta + 1 the whole vertex set is returned without drawing.
    """
    g, k = inst.graph, inst.k
    if g.n == 0:
        raise InputError("randomized packing needs a non-empty graph")
    delta = max_degree(g)
    if k >= delta + 1:
        return PackingResult(VertexSet.full(g.n), g.n, seed, True)

    p = compute_p(delta, k)
    rng = np.random.default_rng(seed)
    in_a = (rng.random(g.n) < p).tolist()

    for v in range(g.n):
        hits = [u for u in g.adjacency[v] if in_a[u]]
        r = len(hits)
        if in_a[v] and r >= k:
            drop = r - k + 1
        elif not in_a[v] and r > k:
            drop = r - k
        else:
            continue
        # adjacency lists are sorted, so the tail holds the largest indices
        for u in hits[r - drop:]:
            in_a[u] = False

    x = VertexSet(g.n, (v for v in range(g.n) if in_a[v]))
    x = extend_to_maximal(inst, x)
    return PackingResult(x, len(x), seed, True)


def _can_add(g: Graph, counts: list[int], v: int, k: int) -> bool:
    if counts[v] >= k:
        return False
    return all(counts[u] < k for u in g.adjacency[v])


def extend_to_maximal(inst: PackingInstance, x: VertexSet) -> VertexSet:
    """Greedily add vertices in ascending order while the packing stays valid.

    Counts only grow, so one pass already gives a maximal packing.
    """
    g, k = inst.graph, inst.k
    check_universe(g, x)
    counts = _closed_counts(g, x)
    if any(c > k for c in counts):
        raise InputError("cannot extend: the given set is not a k-limited packing")
    out = x.copy()
    for v in range(g.n):
        if v in out or not _can_add(g, counts, v, k):
            continue
        out.add(v)
        counts[v] += 1
        for u in g.adjacency[v]:
            counts[u] += 1
    return out


def _check_cap(g: Graph, oracle_cap: int) -> None:
    if g.n > oracle_cap:
        raise CapacityError(f"graph has {g.n} vertices, exact solver cap is {oracle_cap}")


def exact_Lk(inst: PackingInstance, oracle_cap: int = DEFAULT_ORACLE_CAP) -> PackingResult:
    """Maximum k-limited packing by include/exclude branch and bound.

    Vertices are decided in ascending order. A branch dies when a closed
    neighbourhood would exceed k, or when the chosen vertices plus the
    undecided vertices that could still be added cannot beat the incumbent.
    """
    g, k = inst.graph, inst.k
    _check_cap(g, oracle_cap)
    n = g.n
    adj = g.adjacency
    counts = [0] * n
    chosen: list[int] = []
    best: list[int] = []

    def addable(v):
        return counts[v] < k and all(counts[u] < k for u in adj[v])

    def search(i):
        nonlocal best
        if len(chosen) > len(best):
            best = chosen.copy()
        if i == n:
            return
        room = sum(1 for w in range(i, n) if addable(w))
        if len(chosen) + room <= len(best):
            return
        if addable(i):
            chosen.append(i)
            counts[i] += 1
            for u in adj[i]:
                counts[u] += 1
            search(i + 1)
            counts[i] -= 1
            for u in adj[i]:
                counts[u] -= 1
            chosen.pop()
        search(i + 1)

    search(0)
    return PackingResult(VertexSet(n, best), len(best), None, True)


def exact_ktuple_domination(inst: PackingInstance,
                            oracle_cap: int = DEFAULT_ORACLE_CAP) -> PackingResult:
    """Minimum k-tuple dominating set by include/exclude branch and bound.

    Mirror of :func:`exact_Lk`. A branch dies when some vertex can no longer
    collect k members of its closed neighbourhood from the chosen and undecided
    vertices, or when the chosen count plus ceil(total deficit / (Delta + 1))
    reaches the incumbent (one vertex lowers the total deficit by at most
    Delta + 1).
    """
    g, k = inst.graph, inst.k
    n = g.n
    if n == 0:
        return PackingResult(VertexSet(0), 0, None, False)
    dmin = min_degree(g)
    if dmin < k - 1:
        raise UndefinedParameterError(
            f"k-tuple domination needs delta >= k - 1, got delta={dmin}, k={k}")
    _check_cap(g, oracle_cap)
    adj = g.adjacency
    width = max_degree(g) + 1
    have = [0] * n
    # closed-neighbourhood members not yet decided; vertex i is undecided at depth i
    open_ = [len(adj[v]) + 1 for v in range(n)]
    best = list(range(n))
    chosen: list[int] = []

    def search(i, deficit):
        nonlocal best
        if deficit == 0:
            if len(chosen) < len(best):
                best = chosen.copy()
            return
        if i == n or len(chosen) + -(-deficit // width) >= len(best):
            return
        closed = (i,) + adj[i]
        for u in closed:
            open_[u] -= 1
        # include i
        gain = 0
        for u in closed:
            if have[u] < k:
                gain += 1
            have[u] += 1
        chosen.append(i)
        search(i + 1, deficit - gain)
        chosen.pop()
        for u in closed:
            have[u] -= 1
        # exclude i, unless that strands a neighbourhood
        if all(have[u] + open_[u] >= k for u in closed):
            search(i + 1, deficit)
        for u in closed:
            open_[u] += 1

    search(0, k * n)
    return PackingResult(VertexSet(n, best), len(best), None, False)


def exact_domination_number(g: Graph, oracle_cap: int = DEFAULT_ORACLE_CAP) -> int:
    return exact_ktuple_domination(PackingInstance(g, 1), oracle_cap).size
