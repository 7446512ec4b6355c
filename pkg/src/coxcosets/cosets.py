"""Parabolic double cosets and the systems Delta, Xi and Sigma.

Every coset is generated from its maximal element: for ``w`` and subsets
``I`` of ``D_L(w)``, ``J`` of ``D_R(w)`` the coset ``W_I w W_J`` has maximum
``w``, and every coset arises this way.  Cosets are keyed by ``(x0, x1)``
since a coset is the two-sided interval between its extremes.

>>> from coxcosets.group import build_group
>>> g = build_group("A2")
>>> len(build_system(g, "delta").nodes), len(build_system(g, "xi").nodes)
(19, 33)
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum

from .errors import MaxMismatch, ResourceLimit, require
from .group import Group
from .orders import OrderKind, covers, double_weak_covers
from .report import Report

DEFAULT_NODE_CAP = 500_000


def subsets(items) -> list[frozenset[int]]:
    """All subsets, ordered by size then lexicographically."""
    items = sorted(items)
    return [
        frozenset(c) for k in range(len(items) + 1) for c in itertools.combinations(items, k)
    ]


def _bits(subset) -> int:
    return sum(1 << s for s in subset)


def parabolic(g: Group, subset) -> frozenset[int]:
    """The standard parabolic subgroup ``W_I``."""
    return double_coset(g, subset, 0, ()).member_set


@dataclass(frozen=True)
class DoubleCoset:
    members: tuple[int, ...]  # by length, then id
    x0: int
    x1: int
    M_L: frozenset[int]
    M_R: frozenset[int]
    mask: int = field(repr=False)  # bit v set iff v is a member

    @property
    def key(self) -> tuple[int, int]:
        return (self.x0, self.x1)

    @property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v) -> bool:
        return bool(self.mask >> v & 1)

    def length(self, g: Group) -> int:
        """``l(X) = l(x0, x1)``."""
        return int(g.length[self.x1] - g.length[self.x0])

    def contains(self, other: "DoubleCoset") -> bool:
        return other.mask & ~self.mask == 0


def _orbit(g: Group, left_gens, x: int, right_gens) -> list[int]:
    seen = {x}
    frontier = [x]
    while frontier:
        nxt = []
        for y in frontier:
            for s in left_gens:
                z = int(g.left[s, y])
                if z not in seen:
                    seen.add(z)
                    nxt.append(z)
            for s in right_gens:
                z = int(g.right[s, y])
                if z not in seen:
                    seen.add(z)
                    nxt.append(z)
        frontier = nxt
    return sorted(seen, key=lambda v: (g.length[v], v))


def double_coset(g: Group, I, x: int, J) -> DoubleCoset:
    """``W_I x W_J`` with its extremes and maximal presentation."""
    members = _orbit(g, sorted(I), x, sorted(J))
    x0, x1 = members[0], members[-1]
    require(
        len(members) == 1 or g.length[members[1]] > g.length[x0], "coset minimum is not unique"
    )
    require(
        len(members) == 1 or g.length[members[-2]] < g.length[x1], "coset maximum is not unique"
    )
    m_left = g.left_descents(x1) - g.left_descents(x0)
    m_right = g.right_descents(x1) - g.right_descents(x0)
    return DoubleCoset(
        members=tuple(members),
        x0=x0,
        x1=x1,
        M_L=m_left,
        M_R=m_right,
        mask=sum(1 << v for v in members),
    )


def maximal_presentation(g: Group, X: DoubleCoset, check: bool = False):
    """``(M_L, x1, M_R)``; with ``check`` also regenerate the coset from it."""
    if check:
        again = double_coset(g, X.M_L, X.x1, X.M_R)
        require(again.mask == X.mask, "maximal presentation does not regenerate the coset")
    return X.M_L, X.x1, X.M_R


def presentations(g: Group, X: DoubleCoset, minimal_only: bool = False):
    """Pairs ``(I, J)`` with ``W_I x1 W_J = X``, ``I`` in ``M_L``, ``J`` in ``M_R``."""
    found = [
        (I, J)
        for I in subsets(X.M_L)
        for J in subsets(X.M_R)
        if double_coset(g, I, X.x1, J).mask == X.mask
    ]
    if minimal_only:
        found = [
            (I, J)
            for I, J in found
            if not any((I2 <= I and J2 <= J) and (I2, J2) != (I, J) for I2, J2 in found)
        ]
    return found


@dataclass(frozen=True)
class MarkedCoset:
    I: frozenset[int]
    coset: DoubleCoset
    J: frozenset[int]

    @property
    def w(self) -> int:
        return self.coset.x1

    def dim(self, rank: int) -> int:
        """Global dimension ``|S - I| + |S - J| - 1``."""
        return (rank - len(self.I)) + (rank - len(self.J)) - 1

    def leq(self, other: "MarkedCoset") -> bool:
        """``(I, X, J) <= (I', X', J')`` iff ``I >= I'``, ``J >= J'``, ``X >= X'``."""
        return self.I >= other.I and self.J >= other.J and self.coset.contains(other.coset)


class SystemKind(str, Enum):
    DELTA = "delta"
    XI = "xi"
    SIGMA = "sigma"


@dataclass(frozen=True, eq=False)
class CosetSystem:
    kind: SystemKind
    nodes: tuple  # DoubleCoset (Delta, Sigma) or MarkedCoset (Xi)
    components: dict  # w -> tuple of node indices
    up: tuple[tuple[int, ...], ...] | None  # up[i] = nodes covering node i
    down: tuple[tuple[int, ...], ...] | None

    def __len__(self) -> int:
        return len(self.nodes)

    def coset_of(self, i: int) -> DoubleCoset:
        node = self.nodes[i]
        return node.coset if isinstance(node, MarkedCoset) else node

    def index(self) -> dict:
        """Node lookup by key: ``(x0, x1)``, or ``(x0, x1, I, J)`` for Xi."""
        out = {}
        for i, node in enumerate(self.nodes):
            if isinstance(node, MarkedCoset):
                out[node.coset.key + (node.I, node.J)] = i
            else:
                out[node.key] = i
        return out

    def maximal(self) -> tuple[int, ...]:
        require(self.up is not None, "system was built without its Hasse diagram")
        return tuple(i for i, u in enumerate(self.up) if not u)

    def minimal(self) -> tuple[int, ...]:
        require(self.down is not None, "system was built without its Hasse diagram")
        return tuple(i for i, d in enumerate(self.down) if not d)


def _less_than(kind: SystemKind, a, b) -> bool:
    """Strict order ``a < b`` in the system."""
    if kind is SystemKind.XI:
        return a.leq(b) and (a.I, a.J, a.coset.mask) != (b.I, b.J, b.coset.mask)
    # reverse containment
    return a.mask != b.mask and a.contains(b)


def hasse(kind: SystemKind, nodes) -> tuple[tuple, tuple]:
    """Covers of a finite poset by bitset elimination of transitive pairs."""
    n = len(nodes)
    above = [0] * n
    for a in range(n):
        bits = 0
        for b in range(n):
            if _less_than(kind, nodes[a], nodes[b]):
                bits |= 1 << b
        above[a] = bits
    up = []
    for a in range(n):
        reach = 0
        bits = above[a]
        b = bits
        while b:
            low = b & -b
            reach |= above[low.bit_length() - 1]
            b ^= low
        cov = bits & ~reach
        up.append(tuple(i for i in range(n) if cov >> i & 1))
    down = [[] for _ in range(n)]
    for a, cs in enumerate(up):
        for b in cs:
            down[b].append(a)
    return tuple(up), tuple(tuple(d) for d in down)


def _component_cosets(g: Group, w: int) -> dict:
    """``(I, J) -> W_I w W_J`` for ``I`` in ``D_L(w)``, ``J`` in ``D_R(w)``."""
    dl, dr = g.left_descents(w), g.right_descents(w)
    return {(I, J): double_coset(g, I, w, J) for I in subsets(dl) for J in subsets(dr)}


def build_system(
    g: Group, kind="delta", *, hasse_diagram: bool = True, cap: int = DEFAULT_NODE_CAP
) -> CosetSystem:
    kind = SystemKind(kind)
    # Delta can only be smaller than this bound, so checking it up front is safe for Xi and Sigma
    if kind is SystemKind.SIGMA:
        predicted = sum(2 ** len(g.right_descents(w)) for w in range(g.order))
    else:
        predicted = sum(2 ** g.descent_data(w).d_tilde for w in range(g.order))
    if kind is not SystemKind.DELTA and predicted > cap:
        raise ResourceLimit(f"{kind.value} system would have {predicted} nodes (cap {cap})")

    nodes = []
    for w in range(g.order):
        if kind is SystemKind.SIGMA:
            for J in subsets(g.right_descents(w)):
                nodes.append(double_coset(g, (), w, J))
            continue
        table = _component_cosets(g, w)
        if kind is SystemKind.XI:
            nodes.extend(MarkedCoset(I, X, J) for (I, J), X in table.items())
        else:
            unique = {X.key: X for X in table.values()}
            nodes.extend(unique.values())
        if len(nodes) > cap:
            raise ResourceLimit(f"{kind.value} system exceeds the cap of {cap} nodes")

    if kind is SystemKind.XI:
        nodes.sort(key=lambda F: (F.coset.key, _bits(F.I), _bits(F.J)))
    else:
        nodes.sort(key=lambda X: X.key)
        seen = {}
        for X in nodes:
            prev = seen.setdefault(X.key, X)
            require(prev.mask == X.mask, "two cosets share (x0, x1)")
    components: dict[int, list[int]] = {w: [] for w in range(g.order)}
    for i, node in enumerate(nodes):
        x1 = node.coset.x1 if isinstance(node, MarkedCoset) else node.x1
        components[x1].append(i)
    comps = {w: tuple(ix) for w, ix in components.items()}
    up = down = None
    if hasse_diagram:
        up, down = hasse(kind, nodes)
    return CosetSystem(kind, tuple(nodes), comps, up, down)


def component(system: CosetSystem, w: int) -> tuple:
    """The ``w``-component: nodes whose coset has maximum ``w``."""
    return tuple(system.nodes[i] for i in system.components.get(w, ()))


def delta(system: CosetSystem, w: int) -> int:
    """``delta(w) = |Delta(w)|``."""
    require(system.kind is SystemKind.DELTA, "delta(w) is defined on the Delta system")
    return len(system.components.get(w, ()))


def delta_upper_bound(g: Group, w: int) -> int:
    """``2 ** d_tilde(w)``, an upper bound for ``delta(w)``."""
    return 2 ** g.descent_data(w).d_tilde


@dataclass(frozen=True)
class CoatomData:
    C_X: frozenset[int]
    d_X: int
    d_tilde_X: int
    local_dim: int


def coatom_data(g: Group, X: DoubleCoset, w: int) -> CoatomData:
    """Weak coatoms of ``X`` and its local dimension in ``Delta(w)``."""
    if X.x1 != w:
        raise MaxMismatch(f"max of coset is {g.format(X.x1)}, not {g.format(w)}")
    coatoms = frozenset(v for v in covers(g, w, OrderKind.TWO_SIDED) if v in X)
    d_w = g.descent_data(w).d
    return CoatomData(
        C_X=coatoms,
        d_X=len(coatoms),
        d_tilde_X=len(X.M_L) + len(X.M_R),
        local_dim=d_w - len(coatoms) - 1,
    )


def xi_local_dim(g: Group, F: MarkedCoset) -> int:
    """``dim_Xi(w)(I, X, J) = d_tilde(w) - |I| - |J| - 1``."""
    return g.descent_data(F.w).d_tilde - len(F.I) - len(F.J) - 1


def is_boolean(elements, leq) -> tuple[bool, int]:
    """Whether a finite poset is boolean; also returns its rank (-1 if not)."""
    elements = list(elements)
    bottoms = [a for a in elements if all(leq(a, b) for b in elements)]
    if len(bottoms) != 1:
        return False, -1
    bottom = bottoms[0]
    rest = [a for a in elements if a is not bottom]
    atoms = [a for a in rest if not any(b is not a and leq(b, a) for b in rest)]
    k = len(atoms)
    if len(elements) != 2**k:
        return False, -1
    below = {id(a): frozenset(i for i, t in enumerate(atoms) if leq(t, a)) for a in elements}
    if len(set(below.values())) != len(elements):
        return False, -1
    for a in elements:
        for b in elements:
            if leq(a, b) != (below[id(a)] <= below[id(b)]):
                return False, -1
    return True, k


@dataclass(frozen=True)
class FiberData:
    coset: DoubleCoset
    fiber: tuple[MarkedCoset, ...]
    bottom_present: bool
    boolean_complex: bool
    dimension: int  # as a boolean complex: max rank - 1
    delta_local_dim: int
    projection_monotone: bool
    dimension_drop_ok: bool


def project_and_fiber(
    g: Group, xi: CosetSystem, delta_sys: CosetSystem, X: DoubleCoset
) -> FiberData:
    """Fiber of the projection ``(I, X, J) -> X`` and its boolean-complex verdict."""
    w = X.x1
    comp_idx = xi.components[w]
    fiber = tuple(xi.nodes[i] for i in comp_idx if xi.nodes[i].coset.mask == X.mask)
    bottom_present = any(F.I == X.M_L and F.J == X.M_R for F in fiber)

    # each lower interval [bottom, F] must be boolean
    ok = bottom_present
    top_rank = -1
    for F in fiber:
        lower = [G for G in fiber if G.leq(F)]
        boolean, r = is_boolean(lower, MarkedCoset.leq)
        ok = ok and boolean
        top_rank = max(top_rank, r)

    # projection checks over all Xi covers inside the component
    local = {}
    for i in comp_idx:
        Y = xi.nodes[i].coset
        if Y.key not in local:
            local[Y.key] = coatom_data(g, Y, w).local_dim
    monotone = drop_ok = True
    if xi.up is not None:
        for i in comp_idx:
            a = xi.nodes[i]
            for j in xi.up[i]:
                b = xi.nodes[j]
                if b.w != w:
                    continue
                if not b.coset.mask & ~a.coset.mask == 0:
                    monotone = False
                if local[b.coset.key] - local[a.coset.key] not in (0, 1):
                    drop_ok = False
    return FiberData(
        coset=X,
        fiber=fiber,
        bottom_present=bottom_present,
        boolean_complex=ok,
        dimension=top_rank - 1,
        delta_local_dim=local[X.key],
        projection_monotone=monotone,
        dimension_drop_ok=drop_ok,
    )


def structural_checks(g: Group, delta_sys: CosetSystem) -> Report:
    """Cover-by-two, adjacency laws, component shape and maximal elements."""
    rep = Report("structure")
    nodes = delta_sys.nodes
    index = delta_sys.index()
    up, down = delta_sys.up, delta_sys.down
    require(up is not None, "structure checks need the Hasse diagram")
    fmt = g.format

    singleton = {w: index[(w, w)] for w in range(g.order)}
    # (a) a coset covered by a maximal element has exactly two covers
    for w, i in singleton.items():
        for j in down[i]:
            rep.check(len(up[j]) == 2, check="cover-by-two", coset=_describe(g, nodes[j]),
                      covers=len(up[j]))
    # (b) left weak covers change d_R by 0 or 1
    for w in range(g.order):
        dr_w = len(g.right_descents(w))
        for v in covers(g, w, OrderKind.LEFT_WEAK):
            rep.check(dr_w - len(g.right_descents(v)) in (0, 1), check="left-cover-dR",
                      v=fmt(v), w=fmt(w))
        for v in covers(g, w, OrderKind.RIGHT_WEAK):
            rep.check(len(g.left_descents(w)) - len(g.left_descents(v)) in (0, 1),
                      check="right-cover-dL", v=fmt(v), w=fmt(w))
    # (c) double weak covers: d_tilde grows by 2; d(w) = d(v) + 1 is only tallied
    d_law_witnesses = []
    for w in range(g.order):
        dw = g.descent_data(w)
        for v in sorted(double_weak_covers(g, w)):
            dv = g.descent_data(v)
            ok = (
                dw.d_tilde == dv.d_tilde + 2
                and len(dw.left) == len(dv.left) + 1
                and len(dw.right) == len(dv.right) + 1
            )
            rep.check(ok, check="adjacent-d-tilde", v=fmt(v), w=fmt(w))
            if dw.d != dv.d + 1:
                d_law_witnesses.append({"v": fmt(v), "w": fmt(w), "d(v)": dv.d, "d(w)": dw.d})
    rep.stats["adjacent_d_plus_one_exceptions"] = len(d_law_witnesses)
    if d_law_witnesses:
        rep.stats["adjacent_d_plus_one_example"] = d_law_witnesses[0]
    # (d) shape of each component
    for w in range(g.order):
        comp = delta_sys.components[w]
        members = set(comp)
        dw = g.descent_data(w)
        seen = {comp[0]}
        stack = [comp[0]]
        while stack:
            a = stack.pop()
            for b in itertools.chain(up[a], down[a]):
                if b in members and b not in seen:
                    seen.add(b)
                    stack.append(b)
        rep.check(len(seen) == len(members), check="component-connected", w=fmt(w))
        dims = {i: coatom_data(g, nodes[i], w).local_dim for i in comp}
        bottom = index[(double_coset(g, dw.left, w, dw.right).x0, w)]
        lower = [i for i in comp if not any(j in members for j in down[i])]
        rep.check(lower == [bottom] and dims[bottom] == -1, check="unique-minimum", w=fmt(w))
        rep.check(set(dims.values()) == set(range(-1, dw.d)), check="local-dim-surjective",
                  w=fmt(w))
        for i in comp:
            for j in up[i]:
                if j in members:
                    rep.check(dims[j] >= dims[i], check="local-dim-monotone", w=fmt(w))
    # (e) maximal elements are the singletons
    maximal = delta_sys.maximal()
    rep.check(sorted(maximal) == sorted(singleton.values()), check="maximal-elements",
              count=len(maximal))
    rep.stats["nodes"] = len(nodes)
    rep.stats["maximal"] = len(maximal)
    return rep


def _describe(g: Group, X: DoubleCoset) -> dict:
    return {
        "x0": g.format(X.x0),
        "x1": g.format(X.x1),
        "M_L": g.format_subset(X.M_L),
        "M_R": g.format_subset(X.M_R),
    }


def describe(g: Group, X: DoubleCoset) -> dict:
    """JSON-friendly summary of a coset."""
    out = _describe(g, X)
    out["size"] = len(X)
    out["length"] = X.length(g)
    return out
