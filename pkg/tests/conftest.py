"""Shared brute-force oracles and hypothesis strategies.

The oracles enumerate every subset and only use plain Python sets, so they
share nothing with the branch-and-bound code they check.
"""
import itertools

from hypothesis import strategies as st

from limpack.graph import Graph


def closed_nbhds(g):
    return [set(g.adjacency[v]) | {v} for v in range(g.n)]


def subsets(n):
    for mask in range(1 << n):
        yield {v for v in range(n) if mask >> v & 1}


def brute_Lk(g, k):
    nb = closed_nbhds(g)
    return max(len(x) for x in subsets(g.n) if all(len(nb[v] & x) <= k for v in range(g.n)))


def brute_ktuple(g, k):
    nb = closed_nbhds(g)
    sizes = [len(y) for y in subsets(g.n) if all(len(nb[v] & y) >= k for v in range(g.n))]
    return min(sizes) if sizes else None


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
