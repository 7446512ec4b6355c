import itertools

import numpy as np
import pytest

import oracles
from cache import group
from coxcosets.errors import NotComparable
from coxcosets.group import build_group
from coxcosets.orders import (
    OrderKind,
    bruhat_leq,
    covers,
    double_weak_covers,
    interval,
    leq,
    lifting_check,
    lower_mask,
    rel_length,
    up_covers,
    upper_mask,
)


@pytest.mark.parametrize("label", ["A2", "A3", "B3", "H3", "I2(5)", "A1xA2"])
def test_bruhat_against_reflection_closure(label):
    g = group(label)
    oracle = oracles.bruhat_closure(g)
    for u, w in itertools.product(range(g.order), repeat=2):
        assert bruhat_leq(g, u, w) == (w in oracle[u])


@pytest.mark.parametrize("label", ["A3", "A4"])
def test_bruhat_against_rank_matrices(label):
    g = group(label)
    perms = [tuple(int(c) for c in g.format(w)) for w in range(g.order)]
    for u, w in itertools.product(range(g.order), repeat=2):
        assert bruhat_leq(g, u, w) == oracles.rank_matrix_leq(perms[u], perms[w])


@pytest.mark.parametrize("label", ["B3", "H3", "D4"])
def test_descent_recursion_matches_packed_rows(label):
    cached = group(label)
    plain = build_group(label, bruhat_cache=False)
    assert plain._bruhat is None
    rng = np.random.default_rng(7)
    for _ in range(3000):
        u, w = (int(x) for x in rng.integers(0, cached.order, size=2))
        assert bruhat_leq(plain, u, w) == bruhat_leq(cached, u, w)


@pytest.mark.parametrize("label", ["A3", "B3", "H3"])
@pytest.mark.parametrize("kind, side", [(OrderKind.LEFT_WEAK, "left"), (OrderKind.RIGHT_WEAK, "right")])
def test_weak_orders_against_closure(label, kind, side):
    g = group(label)
    oracle = oracles.weak_closure(g, side)
    for u, w in itertools.product(range(g.order), repeat=2):
        assert leq(g, u, w, kind) == (w in oracle[u])


@pytest.mark.parametrize("label", ["A3", "B3"])
def test_two_sided_is_union_closure(label):
    g = group(label)
    left, right = oracles.weak_closure(g, "left"), oracles.weak_closure(g, "right")
    # closure of the union of both weak orders
    up = {u: left[u] | right[u] for u in range(g.order)}
    closure = {}
    for u in range(g.order):
        seen, stack = {u}, [u]
        while stack:
            x = stack.pop()
            for y in up[x] - seen:
                seen.add(y)
                stack.append(y)
        closure[u] = seen
    for u, w in itertools.product(range(g.order), repeat=2):
        assert leq(g, u, w, OrderKind.TWO_SIDED) == (w in closure[u])


def test_weak_is_finer_than_bruhat():
    g = group("B3")
    for u, w in itertools.product(range(g.order), repeat=2):
        if leq(g, u, w, OrderKind.TWO_SIDED):
            assert bruhat_leq(g, u, w)


@pytest.mark.parametrize("kind", list(OrderKind))
def test_covers_and_up_covers_agree(kind):
    g = group("A3")
    for w in range(g.order):
        for u in covers(g, w, kind):
            assert w in up_covers(g, u, kind)
            assert g.length[u] == g.length[w] - 1
            assert leq(g, u, w, kind)


def test_double_weak_covers():
    g = group("A3")
    for w in range(g.order):
        both = covers(g, w, OrderKind.LEFT_WEAK) & covers(g, w, OrderKind.RIGHT_WEAK)
        assert double_weak_covers(g, w) == both


def test_masks_and_intervals():
    g = group("A3")
    oracle = oracles.bruhat_closure(g)
    for w in range(g.order):
        assert set(np.flatnonzero(lower_mask(g, w))) == {u for u in range(g.order) if w in oracle[u]}
        assert set(np.flatnonzero(upper_mask(g, w))) == oracle[w]
    u, w = g.parse("1324"), g.parse("3412")
    iv = interval(g, u, w)
    assert len(iv.members) == 10 and iv.length == 3
    assert iv.members[0] == u and iv.members[-1] == w
    assert interval(g, w, u).members == ()
    assert rel_length(g, u, w) == 3


def test_weak_interval():
    g = group("A3")
    w0 = g.longest_element()
    iv = interval(g, 0, w0, OrderKind.LEFT_WEAK)
    assert len(iv.members) == 24


@pytest.mark.parametrize("label", ["A3", "B2", "I2(5)"])
def test_lifting_holds_on_comparable_pairs(label):
    g = group(label)
    for u, w in itertools.product(range(g.order), repeat=2):
        if u != w and bruhat_leq(g, u, w):
            assert lifting_check(g, u, w)


def test_lifting_rejects_incomparable():
    g = group("A3")
    with pytest.raises(NotComparable):
        lifting_check(g, g.parse("2134"), g.parse("1243"))
    with pytest.raises(NotComparable):
        lifting_check(g, 0, 0)
