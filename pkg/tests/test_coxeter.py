import itertools

import pytest
from hypothesis import given, settings, strategies as st

from rennerhecke.coxeter import CoxeterGraph, build_group
from rennerhecke.errors import CapExceeded, MalformedGraph

A2 = build_group(CoxeterGraph.type_a(2))
A3 = build_group(CoxeterGraph.type_a(3))
B3 = build_group(CoxeterGraph(("a", "b", "c"), {("a", "b"): 4, ("b", "c"): 3}))
H3 = build_group(CoxeterGraph(("a", "b", "c"), {("a", "b"): 5, ("b", "c"): 3}))
SMALL = [A2, A3, B3]


def w(g, text):
    return g.from_word(text.split())


def subsets(g):
    gens = range(g.rank)
    for k in range(g.rank + 1):
        yield from (frozenset(c) for c in itertools.combinations(gens, k))


def test_a1_order_two():
    g = build_group(CoxeterGraph(("s",)), cap=10)
    assert len(g) == 2
    assert g.words == [(), (0,)]


@pytest.mark.parametrize("graph,order", [
    (CoxeterGraph.type_a(2), 6),
    (CoxeterGraph.type_a(3), 24),
    (CoxeterGraph.type_a(4), 120),
    (CoxeterGraph.type_a(5), 720),
    (CoxeterGraph(("a", "b", "c"), {("a", "b"): 4, ("b", "c"): 3}), 48),
    (CoxeterGraph(("a", "b", "c"), {("a", "b"): 5, ("b", "c"): 3}), 120),
    (CoxeterGraph(("a", "b", "c", "d"), {("a", "b"): 3, ("b", "c"): 4, ("c", "d"): 3}), 1152),
    (CoxeterGraph(("a", "b", "c", "d"), {("a", "b"): 3, ("b", "c"): 3, ("b", "d"): 3}), 192),
    (CoxeterGraph(("a", "b"), {("a", "b"): 7}), 14),
])
def test_group_orders(graph, order):
    assert len(build_group(graph)) == order


def test_a2_longest_element():
    top = A2.longest_element()
    assert A2.length[top] == 3
    assert A2.format(top) == "s1 s2 s1"


def test_large_label_exceeds_cap():
    with pytest.raises(CapExceeded):
        build_group(CoxeterGraph(("s", "t"), {("s", "t"): 1000}), cap=50)


@pytest.mark.parametrize("gens,edges", [
    (("s", "s"), {}),
    (("s", "t"), {("s", "u"): 3}),
    (("s", "t"), {("s", "s"): 3}),
    (("s", "t"), {("s", "t"): 2}),
])
def test_malformed_graphs(gens, edges):
    with pytest.raises(MalformedGraph):
        CoxeterGraph(gens, edges)


def test_multiply_examples():
    assert A2.multiply(w(A2, "s1"), w(A2, "s1")) == 0
    assert A2.multiply(w(A2, "s1"), w(A2, "s2 s1")) == w(A2, "s1 s2 s1")
    assert A2.multiply(w(A2, "s1 s2 s1"), w(A2, "s1")) == w(A2, "s1 s2")


def test_descent_and_support_examples():
    s1, s2 = 0, 1
    assert A2.descent_and_support(0) == (frozenset(), frozenset(), frozenset())
    full = frozenset({s1, s2})
    assert A2.descent_and_support(w(A2, "s1 s2 s1")) == (full, full, full)
    assert A2.descent_and_support(w(A2, "s1 s2")) == ({s1}, {s2}, full)


def test_coset_reduce_examples():
    assert A2.coset_reduce(w(A2, "s1 s2"), {1}, "right") == (w(A2, "s1"), w(A2, "s2"))
    assert A2.coset_reduce(w(A2, "s1 s2 s1"), {0}, "left") == (w(A2, "s2 s1"), w(A2, "s1"))
    for x in range(len(A2)):
        assert A2.coset_reduce(x, set(), "right") == (x, 0)


def test_double_coset_reduce_examples():
    assert A2.double_coset_reduce(w(A2, "s1 s2 s1"), {0}, {0}) == (w(A2, "s1"), w(A2, "s2"), w(A2, "s1"))
    assert A2.double_coset_reduce(w(A2, "s2"), {0}, {1}) == (0, 0, w(A2, "s2"))
    for x in range(len(A2)):
        assert A2.double_coset_reduce(x, set(), set()) == (0, x, 0)


def test_is_reduced_pair_examples():
    # s2 * s2 = 1 lies in W_{s1} s2 W_{s2}, so s2 is not its minimal element
    assert A2.is_reduced_pair(w(A2, "s2"), {1}, {0}) is False
    assert A2.is_reduced_pair(w(A2, "s2"), {0}, {0}) is True
    assert A2.is_reduced_pair(0, {0, 1}, {0, 1}) is True
    assert A2.is_reduced_pair(w(A2, "s1 s2"), {1}, set()) is False


@pytest.mark.parametrize("g", SMALL)
def test_table_invariants(g):
    for s in range(g.rank):
        for x in range(len(g)):
            assert g.left_table[s][g.left_table[s][x]] == x
            assert abs(g.length[g.left_table[s][x]] - g.length[x]) == 1
            assert abs(g.length[g.right_table[s][x]] - g.length[x]) == 1
    for i in range(g.rank):
        for j in range(i + 1, g.rank):
            m = g.graph.label(i, j)
            alt = lambda a, b: g.from_word(a if k % 2 == 0 else b for k in range(m))
            assert alt(i, j) == alt(j, i)


@pytest.mark.parametrize("g", SMALL)
def test_canonical_words_are_shortlex_minimal(g):
    for x in range(len(g)):
        assert g.words[x] == min(g.reduced_words(x))


@pytest.mark.parametrize("g", SMALL)
def test_matsumoto_property(g):
    for x in range(len(g)):
        for s in range(g.rank):
            sx = g.left_table[s][x]
            for t in range(g.rank):
                xt = g.right_table[t][x]
                sxt = g.right_table[t][sx]
                if g.length[sxt] == g.length[x] and g.length[sx] == g.length[xt]:
                    assert sx == xt


@pytest.mark.parametrize("g", SMALL)
def test_support_is_word_independent(g):
    for x in range(len(g)):
        assert {frozenset(word) for word in g.reduced_words(x)} == {g.support(x)}


@pytest.mark.parametrize("g", SMALL)
def test_double_coset_reduce_contract(g):
    for left in subsets(g):
        for right in subsets(g):
            for x in range(len(g)):
                a, d, b = g.double_coset_reduce(x, left, right)
                assert g.multiply(g.multiply(a, d), b) == x
                assert g.length[a] + g.length[d] + g.length[b] == g.length[x]
                assert g.support(a) <= left and g.support(b) <= right
                assert g.is_reduced_pair(d, right, left)
                assert not (g.left_descents(g.multiply(d, b)) & left)
                coset = {g.multiply(g.multiply(u, x), v) for u in g.parabolic_elements(left) for v in g.parabolic_elements(right)}
                assert d == min(coset, key=lambda y: g.length[y])
                assert sum(g.length[y] == g.length[d] for y in coset) == 1


words = st.lists(st.integers(0, 2), max_size=12)


@given(words, words, words)
@settings(max_examples=200, deadline=None)
def test_group_law(a, b, c):
    for g in (A3, B3, H3):
        x, y, z = g.from_word(a), g.from_word(b), g.from_word(c)
        assert g.multiply(g.multiply(x, y), z) == g.multiply(x, g.multiply(y, z))
        assert g.multiply(x, g.inverse(x)) == 0
        assert (g.length[g.multiply(x, y)] - g.length[x] - g.length[y]) % 2 == 0
        assert g.length[g.multiply(x, y)] <= g.length[x] + g.length[y]


@given(words, st.sets(st.integers(0, 2)), st.sampled_from(["left", "right"]))
@settings(max_examples=200, deadline=None)
def test_coset_reduce_round_trip(word, subset, side):
    for g in (A3, B3, H3):
        x = g.from_word(word)
        u, p = g.coset_reduce(x, subset, side)
        assert (g.multiply(u, p) if side == "right" else g.multiply(p, u)) == x
        assert g.length[u] + g.length[p] == g.length[x]
        assert g.support(p) <= subset
        assert not ((g.right_descents(u) if side == "right" else g.left_descents(u)) & subset)
