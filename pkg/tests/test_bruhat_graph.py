from fractions import Fraction

import numpy as np
import pytest

import oracles
from cache import group, system
from coxcosets import bruhat_graph as bg
from coxcosets import suites
from coxcosets.errors import EmptyGraph, NotComparable
from coxcosets.orders import bruhat_lower, interval, lower_mask


def perm(g, w):
    return tuple(int(c) for c in g.format(w))


def oracle_edges(g, vertices):
    """Edges ``u -> u t`` by permutation arithmetic with transpositions."""
    n = g.rank + 1
    by_perm = {perm(g, v): v for v in vertices}
    out = set()
    for p, u in by_perm.items():
        for t in oracles.perm_reflections(n):
            q = oracles.perm_mul(p, t)
            if q in by_perm and oracles.perm_length(q) > oracles.perm_length(p):
                out.add((u, by_perm[q], oracles.perm_length(q) == oracles.perm_length(p) + 1))
    return out


@pytest.mark.parametrize("w", ["3412", "4231", "4321", "2413"])
def test_lower_interval_graph_against_permutations(w):
    g = group("A3")
    verts = bruhat_lower(g, g.parse(w))
    graph = bg.bruhat_graph(g, verts, check=True)
    assert set(graph.edges) == oracle_edges(g, verts)


@pytest.mark.parametrize("label", ["B3", "H3"])
def test_left_and_right_edges_agree(label):
    g = group(label)
    bg.bruhat_graph(g, range(g.order), check=True)


def test_irregular_interval_1324_3412():
    g = group("A3")
    u, w = g.parse("1324"), g.parse("3412")
    graph = bg.bruhat_graph(g, interval(g, u, w).members)
    assert len(graph.vertices) == 10 and len(graph.edges) == 16
    assert not graph.long_edges
    prof = bg.degree_profile(graph)
    assert [prof.out(g.parse(x)) for x in ("1324", "3124", "3214")] == [4, 2, 1]
    assert bg.is_critical(g, u, w)
    assert bg.out_eulerian_sum(g, u, w) == 2


def test_short_only_drops_long_edges():
    g = group("A3")
    verts = bruhat_lower(g, g.longest_element())
    full = bg.bruhat_graph(g, verts)
    short = bg.bruhat_graph(g, verts, short_only=True)
    assert set(short.edges) == {e for e in full.edges if e[2]}
    assert full.long_edges


@pytest.mark.parametrize("label", ["A3", "B2", "B3", "H3", "I2(5)"])
def test_coset_regularity(label):
    g = group(label)
    for X in system(label, "delta").nodes:
        assert bg.verify_coset_regularity(g, X).failure_count == 0


@pytest.mark.parametrize("label", ["A3", "B3"])
def test_degree_invariance(label):
    g = group(label)
    for w in range(g.order):
        assert bg.verify_degree_invariance(g, w).failure_count == 0


@pytest.mark.parametrize("label, noncritical", [("A3", 183), ("B3", 735)])
def test_out_eulerian_suite(label, noncritical):
    rep = suites.out_eulerian(group(label))
    assert rep.failure_count == 0
    assert rep.stats["noncritical"] == noncritical


def test_out_degree_does_not_depend_on_bottom():
    g = group("A3")
    for w in range(g.order):
        _, out_w = bg.lower_degrees(g, w)
        for u in np.flatnonzero(lower_mask(g, w)):
            _, out_local = bg.subset_degrees(g, bg.interval_mask(g, int(u), w))
            assert out_local[u] == out_w[u]


def test_lambda_and_smoothness():
    g = group("A3")
    chain = ["1234", "1324", "3124", "3142", "3412", "4312", "4321"]
    assert [bg.lam(g, g.parse(w)).value for w in chain] == [0, 1, 2, 3, 5, 5, 6]
    singular = {g.format(w) for w in range(g.order) if not bg.lam(g, w).smooth}
    assert singular == {"3412", "4231"}


def test_irregularity_stats_3412():
    g = group("A3")
    s = bg.irregularity_stats(g, g.parse("3412"))
    assert s.vertex_ratio == Fraction(1, 7)
    assert s.edge_ratio == Fraction(9, 29)
    assert s.lambda_steps == {1: 23, 2: 4, 3: 2}
    with pytest.raises(EmptyGraph):
        bg.irregularity_stats(g, 0)


def test_carrell_peterson_a3():
    g = group("A3")
    results = [bg.carrell_peterson(g, w) for w in range(g.order)]
    assert all(c.average == c.regular == c.palindromic for c in results)
    assert sum(c.regular for c in results) == 22


@pytest.mark.parametrize("label", ["A3", "B3"])
def test_deodhar_bound(label):
    g = group(label)
    for w in range(g.order):
        assert bg.deodhar_check(g, w).failure_count == 0


def test_not_comparable():
    g = group("A3")
    a, b = g.parse("2134"), g.parse("1243")
    with pytest.raises(NotComparable):
        bg.is_critical(g, a, b)
    with pytest.raises(NotComparable):
        bg.out_eulerian_sum(g, a, b)
