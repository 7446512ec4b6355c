"""Bruhat graphs on vertex subsets and the degree statistics built on them.

An edge ``u -> v`` joins ``u`` to ``v = u t`` (``t`` a reflection) when the
length goes up; it is short when it goes up by exactly one.  ``deg_w``,
``in_w`` and ``out_w`` refer to the graph induced on ``[e, w]``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import numpy as np

from .cosets import DoubleCoset
from .errors import EmptyGraph, NotComparable, require
from .group import Group
from .orders import bruhat_leq, lower_mask, upper_mask
from .report import Report


@dataclass(frozen=True)
class BruhatGraph:
    vertices: tuple[int, ...]  # by length, then id
    edges: tuple[tuple[int, int, bool], ...]  # (u, v, short), sorted

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def short_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u, v, s in self.edges if s)

    @property
    def long_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple((u, v) for u, v, s in self.edges if not s)


def _sort_vertices(g: Group, vertices) -> tuple[int, ...]:
    return tuple(sorted({int(v) for v in vertices}, key=lambda v: (g.length[v], v)))


def bruhat_graph(g: Group, vertices, short_only: bool = False, check: bool = False) -> BruhatGraph:
    """The Bruhat graph induced on ``vertices``.

    With ``check`` the edges are rebuilt from left multiplication ``t' u``
    and compared with the right-multiplication edge set.
    """
    verts = _sort_vertices(g, vertices)
    inside = np.zeros(g.order, dtype=bool)
    inside[list(verts)] = True
    edges = _edges(g, verts, inside, g.refl_right, short_only)
    if check:
        require(
            edges == _edges(g, verts, inside, g.refl_left, short_only),
            "left and right reflection edges disagree",
        )
    return BruhatGraph(verts, edges)


def _edges(g, verts, inside, table, short_only):
    out = set()
    for u in verts:
        lu = g.length[u]
        for v in table[:, u] if g.reflections else ():
            if inside[v] and g.length[v] > lu:
                short = bool(g.length[v] == lu + 1)
                if short or not short_only:
                    out.add((u, int(v), short))
    return tuple(sorted(out))


@dataclass(frozen=True)
class DegreeProfile:
    indeg: dict[int, int]
    outdeg: dict[int, int]

    def in_(self, v: int) -> int:
        return self.indeg.get(v, 0)

    def out(self, v: int) -> int:
        return self.outdeg.get(v, 0)

    def deg(self, v: int) -> int:
        return self.in_(v) + self.out(v)


def degree_profile(graph: BruhatGraph) -> DegreeProfile:
    indeg = {v: 0 for v in graph.vertices}
    outdeg = {v: 0 for v in graph.vertices}
    for u, v, _ in graph.edges:
        outdeg[u] += 1
        indeg[v] += 1
    require(sum(indeg.values()) == sum(outdeg.values()) == len(graph.edges), "degree sums")
    return DegreeProfile(indeg, outdeg)


def subset_degrees(g: Group, mask: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """``(in_V, out_V)`` over all of ``W`` for the vertex mask ``V`` (zero outside)."""
    indeg = np.zeros(g.order, dtype=np.int64)
    outdeg = np.zeros(g.order, dtype=np.int64)
    if not g.reflections:
        return indeg, outdeg
    ids = np.flatnonzero(mask)
    nbr = g.refl_right[:, ids]  # (|T|, |V|)
    hit = mask[nbr]
    up = g.length[nbr] > g.length[ids]
    outdeg[ids] = (hit & up).sum(axis=0)
    indeg[ids] = (hit & ~up).sum(axis=0)
    return indeg, outdeg


def lower_degrees(g: Group, w: int) -> tuple[np.ndarray, np.ndarray]:
    """``(in_w, out_w)`` arrays, cached per ``w``."""
    key = ("lower-degrees", w)
    hit = g.memo.get(key)
    if hit is None:
        hit = subset_degrees(g, lower_mask(g, w))
        g.memo[key] = hit
    return hit


def deg_w(g: Group, w: int) -> np.ndarray:
    indeg, outdeg = lower_degrees(g, w)
    return indeg + outdeg


def verify_coset_regularity(g: Group, X: DoubleCoset) -> Report:
    """Every vertex of the Bruhat graph on ``X`` has degree ``l(X)``."""
    rep = Report("regularity")
    mask = np.zeros(g.order, dtype=bool)
    mask[list(X.members)] = True
    indeg, outdeg = subset_degrees(g, mask)
    target = X.length(g)
    for v in X.members:
        d = int(indeg[v] + outdeg[v])
        rep.check(d == target, coset=[g.format(X.x0), g.format(X.x1)], vertex=g.format(v),
                  expected=target, actual=d)
    return rep


def verify_degree_invariance(g: Group, w: int) -> Report:
    """``deg_w(rv) = deg_w(v) = deg_w(vs)`` for ``r`` in ``D_L(w)``, ``s`` in ``D_R(w)``."""
    rep = Report("degree-invariance")
    deg = deg_w(g, w)
    below = lower_mask(g, w)
    dl, dr = sorted(g.left_descents(w)), sorted(g.right_descents(w))
    for v in np.flatnonzero(below):
        for r in dl:
            rv = g.left[r, v]
            rep.check(bool(below[rv]) and deg[rv] == deg[v], w=g.format(w), v=g.format(int(v)),
                      side="left", generator=f"s{r + 1}")
        for s in dr:
            vs = g.right[s, v]
            rep.check(bool(below[vs]) and deg[vs] == deg[v], w=g.format(w), v=g.format(int(v)),
                      side="right", generator=f"s{s + 1}")
    return rep


def _require_leq(g: Group, u: int, w: int) -> None:
    if not bruhat_leq(g, u, w):
        raise NotComparable(f"{g.format(u)} is not below {g.format(w)}")


def is_critical(g: Group, u: int, w: int) -> bool:
    """``D_L(w) <= D_L(u)`` and ``D_R(w) <= D_R(u)``."""
    _require_leq(g, u, w)
    return g.left_descents(w) <= g.left_descents(u) and g.right_descents(w) <= g.right_descents(u)


def interval_mask(g: Group, u: int, w: int) -> np.ndarray:
    _require_leq(g, u, w)
    return lower_mask(g, w) & upper_mask(g, u)


def out_eulerian_sum(g: Group, u: int, w: int) -> int:
    """``sum over [u, w] of (-1) ** out(v)`` in the graph induced on ``[u, w]``."""
    mask = interval_mask(g, u, w)
    _, out_local = subset_degrees(g, mask)
    _, out_w = lower_degrees(g, w)
    ids = np.flatnonzero(mask)
    require(np.array_equal(out_local[ids], out_w[ids]), "out degree depends on the bottom")
    return int(np.sum(1 - 2 * (out_local[ids] & 1)))


def length_eulerian_sum(g: Group, u: int, w: int) -> int:
    """``sum over [u, w] of (-1) ** l(v)``."""
    ids = np.flatnonzero(interval_mask(g, u, w))
    return int(np.sum(1 - 2 * (g.length[ids] & 1)))


class Lambda(NamedTuple):
    value: int
    smooth: bool


def lam(g: Group, w: int) -> Lambda:
    """``lambda(w)``, the number of reflections below ``w``; smooth iff it equals ``l(w)``."""
    below = lower_mask(g, w)
    value = int(sum(bool(below[t]) for t in g.reflections))
    return Lambda(value, value == int(g.length[w]))


@dataclass(frozen=True)
class IrregularityStats:
    vertex_ratio: Fraction
    edge_ratio: Fraction
    out_odd: tuple[tuple[int, int], ...]
    out_even: tuple[tuple[int, int], ...]
    lambda_steps: dict[int, int]  # lambda(v) - lambda(u) over edges u -> v, as counts


def irregularity_stats(g: Group, w: int) -> IrregularityStats:
    if w == 0:
        raise EmptyGraph("[e, e] has no edges")
    graph = bruhat_graph(g, np.flatnonzero(lower_mask(g, w)))
    deg = deg_w(g, w)
    _, out = lower_degrees(g, w)
    lw = int(g.length[w])
    irregular = {v for v in graph.vertices if deg[v] > lw}
    bad_edges = [e for e in graph.edges if e[0] in irregular or e[1] in irregular]
    odd = tuple((u, v) for u, v, _ in graph.edges if (out[u] - out[v]) % 2)
    even = tuple((u, v) for u, v, _ in graph.edges if not (out[u] - out[v]) % 2)
    lams = {v: lam(g, v).value for v in graph.vertices}
    steps = Counter(lams[v] - lams[u] for u, v, _ in graph.edges)
    return IrregularityStats(
        vertex_ratio=Fraction(len(irregular), len(graph.vertices)),
        edge_ratio=Fraction(len(bad_edges), len(graph.edges)),
        out_odd=odd,
        out_even=even,
        lambda_steps=dict(sorted(steps.items())),
    )


def deodhar_check(g: Group, w: int) -> Report:
    """``deg_w(v) >= l(w)`` on ``[e, w]``."""
    rep = Report("deodhar")
    deg = deg_w(g, w)
    lw = int(g.length[w])
    for v in np.flatnonzero(lower_mask(g, w)):
        rep.check(int(deg[v]) >= lw, w=g.format(w), v=g.format(int(v)), degree=int(deg[v]))
    return rep


class CarrellPeterson(NamedTuple):
    average: bool  # P'(1) / P(1) = l(w) / 2
    regular: bool  # [e, w] is l(w)-regular
    palindromic: bool  # q^l(w) P(1/q) = P(q)


def carrell_peterson(g: Group, w: int) -> CarrellPeterson:
    """The three testable clauses for the lower interval ``[e, w]``."""
    ids = np.flatnonzero(lower_mask(g, w))
    lw = int(g.length[w])
    lengths = g.length[ids]
    counts = np.bincount(lengths, minlength=lw + 1)
    average = Fraction(int(lengths.sum()), len(ids)) == Fraction(lw, 2)
    deg = deg_w(g, w)[ids]
    return CarrellPeterson(
        average=average,
        regular=bool(np.all(deg == lw)),
        palindromic=bool(np.array_equal(counts, counts[::-1])),
    )
