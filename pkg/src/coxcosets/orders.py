"""Bruhat, left weak, right weak and two-sided orders on a built group.

``u <=_L w`` means ``w = x u`` with lengths adding, so left weak covers are
``s u``; right weak covers are ``u s``.  The two-sided order is generated
by both kinds of covers.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import NotComparable
from .group import Group


class OrderKind(str, Enum):
    BRUHAT = "bruhat"
    LEFT_WEAK = "left-weak"
    RIGHT_WEAK = "right-weak"
    TWO_SIDED = "two-sided"


@dataclass(frozen=True)
class Interval:
    bottom: int
    top: int
    order: OrderKind
    members: tuple[int, ...]  # by length, then id
    length: int  # l(bottom, top)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v) -> bool:
        return v in self.member_set

    @property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)


def rel_length(g: Group, u: int, v: int) -> int:
    """``l(u, v) = l(v) - l(u)``."""
    return int(g.length[v] - g.length[u])


# -- covers --------------------------------------------------------------


def covers(g: Group, w: int, order: OrderKind = OrderKind.BRUHAT) -> frozenset[int]:
    """Elements ``u`` with ``u`` covered by ``w``."""
    return _covers(g, w, OrderKind(order), down=True)


def up_covers(g: Group, w: int, order: OrderKind = OrderKind.BRUHAT) -> frozenset[int]:
    """Elements ``v`` covering ``w``."""
    return _covers(g, w, OrderKind(order), down=False)


def _covers(g: Group, w: int, order: OrderKind, down: bool) -> frozenset[int]:
    target = g.length[w] + (-1 if down else 1)
    if order is OrderKind.BRUHAT:
        cand = g.refl_left[:, w] if g.reflections else ()
    elif order is OrderKind.LEFT_WEAK:
        cand = g.left[:, w]
    elif order is OrderKind.RIGHT_WEAK:
        cand = g.right[:, w]
    else:
        cand = np.concatenate([g.left[:, w], g.right[:, w]])
    return frozenset(int(u) for u in cand if g.length[u] == target)


def double_weak_covers(g: Group, w: int) -> frozenset[int]:
    """``u`` covered by ``w`` in both weak orders: ``u = s w = w r``."""
    return frozenset(int(g.left[s, w]) for s, _ in g.descent_data(w).pairs)


# -- comparability -------------------------------------------------------


def bruhat_leq(g: Group, u: int, w: int) -> bool:
    if g._bruhat is not None:
        return bool((g._bruhat[w, u >> 3] >> (7 - (u & 7))) & 1)
    # for s in D_L(w): u <= w iff min(u, su) <= sw
    length, left = g.length, g.left
    while True:
        if length[u] > length[w]:
            return False
        if length[u] == length[w]:
            return u == w
        lw = length[w]
        s = next(i for i in range(g.rank) if length[left[i, w]] < lw)
        su = left[s, u]
        if length[su] < length[u]:
            u = int(su)
        w = int(left[s, w])


def _inversion_mask(g: Group, w: int, side: str) -> np.ndarray:
    table = g.refl_left if side == "left" else g.refl_right
    if not g.reflections:
        return np.zeros(0, dtype=bool)
    return g.length[table[:, w]] < g.length[w]


def _two_sided_lower(g: Group, w: int) -> np.ndarray:
    key = ("two-sided-lower", w)
    cached = g.memo.get(key)
    if cached is not None:
        return cached
    mask = np.zeros(g.order, dtype=bool)
    mask[w] = True
    frontier = [w]
    while frontier:
        nxt = []
        for x in frontier:
            for y in _covers(g, x, OrderKind.TWO_SIDED, down=True):
                if not mask[y]:
                    mask[y] = True
                    nxt.append(y)
        frontier = nxt
    g.memo[key] = mask
    return mask


def leq(g: Group, u: int, w: int, order: OrderKind = OrderKind.BRUHAT) -> bool:
    order = OrderKind(order)
    if order is OrderKind.BRUHAT:
        return bruhat_leq(g, u, w)
    if g.length[u] > g.length[w]:
        return False
    if order is OrderKind.LEFT_WEAK:
        a, b = _inversion_mask(g, u, "right"), _inversion_mask(g, w, "right")
        return bool(np.all(b[a]))
    if order is OrderKind.RIGHT_WEAK:
        a, b = _inversion_mask(g, u, "left"), _inversion_mask(g, w, "left")
        return bool(np.all(b[a]))
    return bool(_two_sided_lower(g, w)[u])


def lower_mask(g: Group, w: int, order: OrderKind = OrderKind.BRUHAT) -> np.ndarray:
    """Boolean mask of ``{v : v <= w}``."""
    order = OrderKind(order)
    if order is OrderKind.BRUHAT:
        return g.bruhat_row(w)
    if order is OrderKind.TWO_SIDED:
        return _two_sided_lower(g, w).copy()
    return np.array([leq(g, v, w, order) for v in range(g.order)], dtype=bool)


def upper_mask(g: Group, u: int, order: OrderKind = OrderKind.BRUHAT) -> np.ndarray:
    """Boolean mask of ``{v : u <= v}``."""
    order = OrderKind(order)
    if order is OrderKind.BRUHAT:
        # v >= u iff v w0 <= u w0
        return g.bruhat_row(int(g.times_longest[u]))[g.times_longest]
    return np.array([leq(g, u, v, order) for v in range(g.order)], dtype=bool)


def _sorted_ids(g: Group, mask: np.ndarray) -> tuple[int, ...]:
    ids = np.flatnonzero(mask)
    order = np.lexsort((ids, g.length[ids]))
    return tuple(int(v) for v in ids[order])


def interval(g: Group, u: int, w: int, order: OrderKind = OrderKind.BRUHAT) -> Interval:
    """``[u, w]`` under ``order``; empty when ``u`` is not below ``w``."""
    order = OrderKind(order)
    if not leq(g, u, w, order):
        return Interval(u, w, order, (), rel_length(g, u, w))
    if order is OrderKind.BRUHAT:
        mask = lower_mask(g, w) & upper_mask(g, u)
    else:
        below = lower_mask(g, w, OrderKind.BRUHAT)
        mask = np.zeros(g.order, dtype=bool)
        for v in np.flatnonzero(below):
            v = int(v)
            mask[v] = leq(g, u, v, order) and leq(g, v, w, order)
    return Interval(u, w, order, _sorted_ids(g, mask), rel_length(g, u, w))


def bruhat_lower(g: Group, w: int) -> tuple[int, ...]:
    """``[e, w]`` in Bruhat order, by length then id."""
    return _sorted_ids(g, g.bruhat_row(w))


def lifting_check(g: Group, u: int, w: int) -> bool:
    """Check both-sided lifting at ``u < w``; used as an oracle in tests."""
    if u == w or not bruhat_leq(g, u, w):
        raise NotComparable(f"{g.format(u)} is not strictly below {g.format(w)}")
    dl_w, dr_w = g.left_descents(w), g.right_descents(w)
    al_u = frozenset(range(g.rank)) - g.left_descents(u)
    ar_u = frozenset(range(g.rank)) - g.right_descents(u)
    for s in al_u & dl_w:
        if not (bruhat_leq(g, int(g.left[s, u]), w) and bruhat_leq(g, u, int(g.left[s, w]))):
            return False
    for s in ar_u & dr_w:
        if not (bruhat_leq(g, int(g.right[s, u]), w) and bruhat_leq(g, u, int(g.right[s, w]))):
            return False
    return True
