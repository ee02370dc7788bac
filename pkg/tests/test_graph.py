import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from limpack.errors import InputError, ParseError
from limpack.graph import (
    Graph,
    VertexSet,
    closed_neighborhood_count,
    complete_graph,
    cycle_graph,
    degree,
    empty_graph,
    generate,
    is_connected,
    max_degree,
    min_degree,
    parse_graph,
    path_graph,
    random_regular_graph,
    rook_graph,
    star_graph,
    write_graph,
)

from conftest import graphs


def test_degree():
    assert degree(complete_graph(3), 0) == 2
    assert degree(cycle_graph(5), 2) == 2
    assert degree(empty_graph(4), 1) == 0
    with pytest.raises(InputError):
        degree(cycle_graph(5), 5)


@pytest.mark.parametrize("g, hi, lo", [
    (star_graph(4), 4, 1),
    (cycle_graph(6), 2, 2),
    (path_graph(3), 2, 1),
])
def test_max_min_degree(g, hi, lo):
    assert max_degree(g) == hi
    assert min_degree(g) == lo


def test_degree_stats_reject_empty_graph():
    with pytest.raises(InputError):
        max_degree(empty_graph(0))
    with pytest.raises(InputError):
        min_degree(empty_graph(0))


def test_closed_neighborhood_count():
    assert closed_neighborhood_count(complete_graph(3), 0, VertexSet(3, {1, 2})) == 2
    assert closed_neighborhood_count(cycle_graph(5), 0, VertexSet(5, {0})) == 1
    assert closed_neighborhood_count(cycle_graph(5), 0, VertexSet(5, {2})) == 0
    with pytest.raises(InputError):
        closed_neighborhood_count(cycle_graph(5), 0, VertexSet(6, {2}))


def test_constructor_rejects_bad_adjacency():
    with pytest.raises(InputError):
        Graph(2, [[0], []])          # loop
    with pytest.raises(InputError):
        Graph(2, [[1], []])          # asymmetric
    with pytest.raises(InputError):
        Graph(2, [[1, 1], [0]])      # repeated
    with pytest.raises(InputError):
        Graph(2, [[2], []])          # out of range


def test_graph_is_immutable():
    g = cycle_graph(4)
    with pytest.raises(AttributeError):
        g.n = 5


def test_vertex_set_bounds():
    s = VertexSet(3, [0, 2])
    assert 2 in s and 1 not in s and len(s) == 2
    with pytest.raises(InputError):
        s.add(3)
    s.discard(0)
    assert s.sorted() == [2]


def test_parse_examples():
    assert parse_graph(b"3 3\n0 1\n0 2\n1 2\n") == complete_graph(3)
    assert parse_graph("2 0\n") == empty_graph(2)
    with pytest.raises(ParseError, match="line 2"):
        parse_graph("3 1\n0 3\n")


@pytest.mark.parametrize("text, line", [
    ("", 1),
    ("3\n", 1),
    ("3 x\n", 1),
    ("3 1\n0 0\n", 2),
    ("3 2\n0 1\n1 0\n", 3),
    ("3 2\n0 1\n", 1),
    ("3 1\n0 1\n1 2\n", 3),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text)
    assert info.value.line == line


def test_parse_skips_comments_and_normalizes():
    g = parse_graph("# triangle\n3 3\n2 1\n# mid\n1 0\n0 2\n")
    assert write_graph(g) == b"3 3\n0 1\n0 2\n1 2\n"


@given(graphs(min_n=0, max_n=9))
def test_round_trip(g):
    text = write_graph(g)
    assert parse_graph(text) == g
    assert write_graph(parse_graph(text)) == text


@given(graphs(max_n=10))
def test_handshake(g):
    assert sum(g.degrees()) == 2 * g.m


def test_generate_families():
    k4 = generate("complete", 4)
    assert k4.m == 6 and max_degree(k4) == min_degree(k4) == 3
    r3 = generate("rook", 3)
    assert r3.n == 9 and set(r3.degrees()) == {4}


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_rook_counts(n):
    g = rook_graph(n)
    assert g.n == n * n
    assert g.m == n * n * (n - 1)
    assert set(g.degrees()) == {2 * n - 2}


def test_random_regular_example():
    g = generate("random_regular", 10, d=3, seed=7)
    assert g.n == 10 and set(g.degrees()) == {3}


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 40), st.integers(0, 8), st.integers(0, 2**64 - 1))
def test_random_regular_is_regular_and_reproducible(n, d, seed):
    if d >= n or (n * d) % 2:
        with pytest.raises(InputError):
            random_regular_graph(n, d, seed)
        return
    g = random_regular_graph(n, d, seed)
    assert set(g.degrees()) == {d}
    assert write_graph(g) == write_graph(random_regular_graph(n, d, seed))


def test_random_regular_dense():
    g = random_regular_graph(100, 40, 1)
    assert set(g.degrees()) == {40}


def test_gnp_is_seeded():
    assert generate("gnp", 12, p=0.4, seed=3) == generate("gnp", 12, p=0.4, seed=3)
    assert generate("gnp", 6, p=1.0, seed=0) == complete_graph(6)
    assert generate("gnp", 6, p=0.0, seed=0) == empty_graph(6)


@pytest.mark.parametrize("kwargs", [
    dict(family="random_regular", n=5, d=3, seed=0),   # n*d odd
    dict(family="random_regular", n=4, d=4, seed=0),   # d >= n
    dict(family="gnp", n=4, p=1.5, seed=0),
    dict(family="gnp", n=4, p=0.5),                    # no seed
    dict(family="cycle", n=2),
    dict(family="hypercube", n=3),
])
def test_generate_rejects_bad_parameters(kwargs):
    with pytest.raises(InputError):
        generate(**kwargs)


def test_is_connected():
    assert is_connected(empty_graph(1))
    assert not is_connected(empty_graph(2))
    assert is_connected(cycle_graph(7))
    assert not is_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))
