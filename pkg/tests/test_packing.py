import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from limpack.bounds import exact_binomial, thm1_coefficient
from limpack.errors import CapacityError, InputError, UndefinedParameterError
from limpack.graph import (
    VertexSet,
    complete_graph,
    cycle_graph,
    empty_graph,
    gnp_graph,
    max_degree,
    min_degree,
    random_regular_graph,
    rook_graph,
)
from limpack.packing import (
    PackingInstance,
    compute_p,
    compute_p_rewritten,
    exact_domination_number,
    exact_ktuple_domination,
    exact_Lk,
    extend_to_maximal,
    is_maximal_packing,
    randomized_packing,
    verify_ktuple_dominating,
    verify_packing,
)

from conftest import brute_ktuple, brute_Lk, graphs

seeds = st.integers(0, 2**64 - 1)


def test_instance_rejects_k_zero():
    with pytest.raises(InputError):
        PackingInstance(cycle_graph(4), 0)


def test_verify_packing():
    k3 = complete_graph(3)
    assert verify_packing(PackingInstance(k3, 2), VertexSet(3, {0, 1}))
    assert not verify_packing(PackingInstance(k3, 1), VertexSet(3, {0, 1}))
    assert verify_packing(PackingInstance(cycle_graph(7), 1), VertexSet(7))
    with pytest.raises(InputError):
        verify_packing(PackingInstance(k3, 1), VertexSet(4))


def test_verify_ktuple():
    c4 = cycle_graph(4)
    assert verify_ktuple_dominating(PackingInstance(cycle_graph(5), 1), VertexSet.full(5))
    assert verify_ktuple_dominating(PackingInstance(c4, 2), VertexSet.full(4))
    assert not verify_ktuple_dominating(PackingInstance(c4, 2), VertexSet(4, {0}))


@given(graphs(max_n=9), st.integers(1, 4))
def test_empty_packs_and_full_dominates(g, k):
    inst = PackingInstance(g, k)
    assert verify_packing(inst, VertexSet(g.n))
    if k <= min_degree(g) + 1:
        assert verify_ktuple_dominating(inst, VertexSet.full(g.n))


def test_compute_p_examples():
    assert compute_p(1, 1) == pytest.approx(0.5, rel=1e-15)
    assert compute_p(2, 1) == pytest.approx(1 / 6, rel=1e-14)
    assert compute_p_rewritten(2, 1) == pytest.approx(1 / 6, rel=1e-14)


def test_compute_p_forty_regular():
    # the expectation bound p n (1 - p^k C(Delta+1, k+1)) recovers the lower-bound coefficient
    p = compute_p(40, 25)
    coef = p * (1 - p ** 25 * exact_binomial(41, 26))
    assert coef == pytest.approx(thm1_coefficient(40, 25), rel=1e-12)
    assert coef == pytest.approx(0.3121, abs=5e-5)


def test_compute_p_grid():
    for d in range(1, 61):
        for k in range(1, d + 1):
            p = compute_p(d, k)
            assert 0 < p < k / d <= 1
            assert p == pytest.approx(compute_p_rewritten(d, k), rel=1e-12)


@pytest.mark.parametrize("d, k", [(3, 0), (3, 4), (0, 1)])
def test_compute_p_rejects(d, k):
    with pytest.raises(InputError):
        compute_p(d, k)


def test_randomized_edgeless_short_circuit():
    for k in (1, 2, 5):
        res = randomized_packing(PackingInstance(empty_graph(5), k), seed=k)
        assert res.set.sorted() == [0, 1, 2, 3, 4] and res.size == 5


@pytest.mark.parametrize("seed", range(10))
def test_randomized_complete_graph(seed):
    assert randomized_packing(PackingInstance(complete_graph(4), 1), seed).size == 1


def test_randomized_c9_reaches_optimum():
    inst = PackingInstance(cycle_graph(9), 1)
    assert brute_Lk(cycle_graph(9), 1) == 3
    assert max(randomized_packing(inst, s).size for s in range(100)) == 3


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=14), st.integers(1, 4), seeds)
def test_randomized_output_valid_maximal_deterministic(g, k, seed):
    inst = PackingInstance(g, k)
    res = randomized_packing(inst, seed)
    assert res.size == len(res.set)
    assert verify_packing(inst, res.set)
    assert res.is_maximal and is_maximal_packing(inst, res.set)
    assert randomized_packing(inst, seed).set == res.set


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**32))
def test_randomized_on_regular_graphs(seed):
    g = random_regular_graph(40, 6, seed)
    for k in (1, 3, 6):
        inst = PackingInstance(g, k)
        assert verify_packing(inst, randomized_packing(inst, seed).set)


def test_extend_examples():
    # C_5, k=1 from the empty set: 0 is taken; every other vertex is within
    # distance two of 0, so nothing else fits (rho(C_5) = 1)
    c5 = PackingInstance(cycle_graph(5), 1)
    assert extend_to_maximal(c5, VertexSet(5)).sorted() == [0]
    assert extend_to_maximal(PackingInstance(complete_graph(6), 1), VertexSet(6)).sorted() == [0]
    c6 = PackingInstance(cycle_graph(6), 1)
    assert extend_to_maximal(c6, VertexSet(6)).sorted() == [0, 3]


def test_extend_rejects_invalid_input():
    with pytest.raises(InputError):
        extend_to_maximal(PackingInstance(complete_graph(3), 1), VertexSet(3, {0, 1}))


@given(graphs(max_n=10), st.integers(1, 3), st.data())
def test_extend_is_maximal_and_idempotent(g, k, data):
    inst = PackingInstance(g, k)
    start = VertexSet(g.n)
    for v in data.draw(st.permutations(range(g.n))):
        start.add(v)
        if not verify_packing(inst, start):
            start.discard(v)
    out = extend_to_maximal(inst, start)
    assert all(v in out for v in start)
    assert is_maximal_packing(inst, out)
    assert extend_to_maximal(inst, out) == out


def test_exact_lk_examples():
    for n in range(1, 7):
        for k in range(1, n + 1):
            assert exact_Lk(PackingInstance(complete_graph(n), k)).size == k
    assert exact_Lk(PackingInstance(cycle_graph(6), 1)).size == 2
    g = random_regular_graph(12, 3, 0)
    assert exact_Lk(PackingInstance(g, 4)).size == 12


def test_exact_ktuple_examples():
    assert exact_ktuple_domination(PackingInstance(complete_graph(5), 1)).size == 1
    assert exact_ktuple_domination(PackingInstance(cycle_graph(4), 3)).size == 4
    g = random_regular_graph(10, 3, 2)
    assert exact_ktuple_domination(PackingInstance(g, 4)).size == 10
    with pytest.raises(UndefinedParameterError):
        exact_ktuple_domination(PackingInstance(cycle_graph(5), 4))


def test_exact_capacity():
    g = cycle_graph(31)
    with pytest.raises(CapacityError):
        exact_Lk(PackingInstance(g, 1))
    with pytest.raises(CapacityError):
        exact_ktuple_domination(PackingInstance(g, 1))
    assert exact_Lk(PackingInstance(g, 1), oracle_cap=31).size == 10
    with pytest.raises(CapacityError):
        exact_Lk(PackingInstance(cycle_graph(8), 1), oracle_cap=7)


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=8), st.integers(1, 4))
def test_exact_solvers_match_enumeration(g, k):
    inst = PackingInstance(g, k)
    res = exact_Lk(inst)
    assert res.size == brute_Lk(g, k)
    assert verify_packing(inst, res.set)
    if min_degree(g) >= k - 1:
        kt = exact_ktuple_domination(inst)
        assert kt.size == brute_ktuple(g, k)
        assert verify_ktuple_dominating(inst, kt.set)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=10), st.integers(1, 4))
def test_monotone_in_k_and_sandwich(g, k):
    lk = exact_Lk(PackingInstance(g, k)).size
    assert lk <= exact_Lk(PackingInstance(g, k + 1)).size
    if min_degree(g) >= k - 1:
        assert lk <= exact_ktuple_domination(PackingInstance(g, k)).size
    assert exact_Lk(PackingInstance(g, 1)).size <= exact_domination_number(g)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_rook_gap(n):
    g = rook_graph(n)
    assert exact_Lk(PackingInstance(g, 1)).size == 1
    assert exact_domination_number(g) == n


def test_exact_medium_instance_finishes():
    g = gnp_graph(30, 0.2, 11)
    inst = PackingInstance(g, 2)
    res = exact_Lk(inst)
    assert verify_packing(inst, res.set)
    assert res.size >= max(randomized_packing(inst, s).size for s in range(20))
    if min_degree(g) >= 1:
        kt = exact_ktuple_domination(inst)
        assert verify_ktuple_dominating(inst, kt.set) and kt.size >= res.size


def test_trivial_regime_regular():
    g = random_regular_graph(12, 4, 9)
    k = max_degree(g) + 1
    assert exact_Lk(PackingInstance(g, k)).size == 12
    assert exact_ktuple_domination(PackingInstance(g, k)).size == 12
