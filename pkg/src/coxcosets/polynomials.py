"""Integer polynomials and the Poincare-type generating functions of a group.

>>> q = MultiPoly.var("q")
>>> str((1 + q) ** 3)
'1 + 3*q + 3*q^2 + q^3'
>>> ((1 + q) ** 3).evaluate(q=-1)
0
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Number

from .errors import require
from .group import Group
from .orders import bruhat_lower


class MultiPoly:
    """Sparse polynomial with integer coefficients over named variables."""

    __slots__ = ("variables", "terms")

    def __init__(self, variables=(), terms=None):
        self.variables = tuple(variables)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            require(len(exps) == len(self.variables), "exponent vector length")
            if c:
                clean[exps] = clean.get(exps, 0) + int(c)
        self.terms = {e: c for e, c in clean.items() if c}

    # -- constructors ----------------------------------------------------

    @classmethod
    def constant(cls, c: int, variables=()) -> "MultiPoly":
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name: str, variables=None) -> "MultiPoly":
        variables = tuple(variables) if variables else (name,)
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls(variables, {exps: 1})

    @classmethod
    def monomial(cls, variables, exps, coeff: int = 1) -> "MultiPoly":
        return cls(variables, {tuple(exps): coeff})

    # -- arithmetic ------------------------------------------------------

    def _lift(self, variables) -> "MultiPoly":
        if variables == self.variables:
            return self
        pos = [variables.index(v) for v in self.variables]
        out = {}
        for exps, c in self.terms.items():
            new = [0] * len(variables)
            for p, e in zip(pos, exps):
                new[p] = e
            out[tuple(new)] = c
        return MultiPoly(variables, out)

    def _unify(self, other):
        if isinstance(other, Number):
            other = MultiPoly.constant(int(other), self.variables)
        if other.variables == self.variables:
            return self, other
        merged = self.variables + tuple(v for v in other.variables if v not in self.variables)
        return self._lift(merged), other._lift(merged)

    def __add__(self, other):
        a, b = self._unify(other)
        terms = dict(a.terms)
        for e, c in b.terms.items():
            terms[e] = terms.get(e, 0) + c
        return MultiPoly(a.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, MultiPoly) else -int(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        a, b = self._unify(other)
        terms: dict = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiPoly(a.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        require(k >= 0, "negative powers are not polynomials")
        out = MultiPoly.constant(1, self.variables)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, Number):
            other = MultiPoly.constant(int(other), self.variables)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        a, b = self._unify(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- queries ---------------------------------------------------------

    def coefficient(self, *exps) -> int:
        return self.terms.get(tuple(exps), 0)

    @property
    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def evaluate(self, *args, **kwargs):
        """Exact value at a point; ints stay ints and `Fraction`s stay exact."""
        if args:
            require(len(args) == len(self.variables), "wrong number of values")
            point = dict(zip(self.variables, args))
        else:
            point = kwargs
        missing = [v for v in self.variables if v not in point]
        require(not missing, f"no value for {missing}")
        total = 0
        for exps, c in self.terms.items():
            term = c
            for v, e in zip(self.variables, exps):
                if e:
                    term = term * point[v] ** e
            total = total + term
        if isinstance(total, Fraction) and total.denominator == 1:
            return int(total)
        return total

    def substitute(self, mapping) -> "MultiPoly":
        """Replace variables by polynomials or integers; unlisted ones stay."""
        out = MultiPoly()
        images = {}
        for v in self.variables:
            img = mapping.get(v, MultiPoly.var(v))
            if isinstance(img, str):
                img = MultiPoly.var(img)
            images[v] = img if isinstance(img, MultiPoly) else MultiPoly.constant(int(img))
        for exps, c in self.terms.items():
            term = MultiPoly.constant(c)
            for v, e in zip(self.variables, exps):
                if e:
                    term = term * images[v] ** e
            out = out + term
        return out.drop_unused()

    def drop_unused(self) -> "MultiPoly":
        keep = [i for i in range(len(self.variables)) if any(e[i] for e in self.terms)]
        return MultiPoly(
            tuple(self.variables[i] for i in keep),
            {tuple(e[i] for i in keep): c for e, c in self.terms.items()},
        )

    def is_palindromic(self) -> bool:
        """Invariant under ``e -> top - e`` with ``top`` the per-variable maximum."""
        if not self.terms:
            return True
        top = [max(e[i] for e in self.terms) for i in range(len(self.variables))]
        low = [min(e[i] for e in self.terms) for i in range(len(self.variables))]
        return all(
            self.terms.get(tuple(t + lo - x for t, lo, x in zip(top, low, e))) == c
            for e, c in self.terms.items()
        )

    # -- output ----------------------------------------------------------

    def sorted_terms(self):
        """Graded lex: total degree ascending, then exponent vectors descending."""
        return sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), tuple(-x for x in ec[0])))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, exps) if e
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"MultiPoly({self.variables}, {str(self)!r})"

    def to_json(self) -> dict:
        return {
            "variables": list(self.variables),
            "terms": {",".join(map(str, e)): c for e, c in self.sorted_terms()},
        }

    @classmethod
    def from_json(cls, data) -> "MultiPoly":
        variables = tuple(data["variables"])
        terms = {
            tuple(int(x) for x in k.split(",")) if k else (): c for k, c in data["terms"].items()
        }
        return cls(variables, terms)


def _histogram_poly(variables, rows) -> MultiPoly:
    terms: dict = {}
    for exps in rows:
        terms[exps] = terms.get(exps, 0) + 1
    return MultiPoly(variables, terms)


# -- Poincare polynomials --------------------------------------------------


@dataclass(frozen=True)
class Poincare:
    poly: MultiPoly
    average: Fraction  # P'(1) / P(1)
    palindromic: bool


def poincare(g: Group, w: int) -> Poincare:
    """``P_w(q) = sum over v <= w of q ** l(v)``."""
    lengths = [int(g.length[v]) for v in bruhat_lower(g, w)]
    poly = _histogram_poly(("q",), [(x,) for x in lengths])
    return Poincare(poly, Fraction(sum(lengths), len(lengths)), poly.is_palindromic())


T_VARS = ("t1", "t2", "t3", "t4")


def eulerian4(g: Group) -> MultiPoly:
    """``A_W = sum over w of t1^d_L1 t2^d_L2 t3^d_R2 t4^d_R1``."""
    return _histogram_poly(T_VARS, [g.descent_data(w).counts for w in range(g.order)])


def eulerian_specializations(g: Group, a: MultiPoly | None = None) -> dict[str, MultiPoly]:
    """Classical, two-sided, two-sided-descent and total specializations."""
    a = eulerian4(g) if a is None else a
    two_sided_descent = _histogram_poly(("t",), [(g.descent_data(w).d,) for w in range(g.order)])
    return {
        "classical": a.substitute({"t1": "t", "t2": "t", "t3": 1, "t4": 1}),
        "two-sided": a.substitute({"t1": "s", "t2": "s", "t3": "t", "t4": "t"}),
        # stands in for t2 = t3 = t^(1/2), using |D_L2| = |D_R2| = |D_2LR|
        "two-sided-descent": two_sided_descent,
        "total": a.substitute({v: "t" for v in T_VARS}),
    }


# -- projections -----------------------------------------------------------


@dataclass(frozen=True)
class ProjectionData:
    L: int
    Lt: int
    R: int
    Rt: int
    Cc: int
    ell_L: int
    ell_Lt: int
    ell_R: int
    ell_Rt: int
    ell_C: int
    ell_side: int


def projections(g: Group, w: int) -> ProjectionData:
    dl, dr = g.left_descents(w), g.right_descents(w)
    left = g.longest_element(dl)
    right = g.longest_element(dr)
    coleft = g.multiply(g.inverse(left), w)
    coright = g.multiply(w, g.inverse(right))
    central = _coset_min(g, dl, w, dr)
    length = g.length
    require(g.multiply(left, coleft) == w and length[w] == length[left] + length[coleft],
            "w = L(w) L~(w) is not reduced")
    require(g.multiply(coright, right) == w and length[w] == length[coright] + length[right],
            "w = R~(w) R(w) is not reduced")
    lc = int(length[central])
    return ProjectionData(
        L=left,
        Lt=coleft,
        R=right,
        Rt=coright,
        Cc=central,
        ell_L=int(length[left]),
        ell_Lt=int(length[coleft]),
        ell_R=int(length[right]),
        ell_Rt=int(length[coright]),
        ell_C=lc,
        ell_side=int(length[w]) - lc,
    )


def _coset_min(g: Group, I, w: int, J) -> int:
    """Minimum of ``W_I w W_J`` by descending greedily on both sides."""
    x = w
    moved = True
    while moved:
        moved = False
        for s in sorted(I):
            y = int(g.left[s, x])
            if g.length[y] < g.length[x]:
                x, moved = y, True
        for s in sorted(J):
            y = int(g.right[s, x])
            if g.length[y] < g.length[x]:
                x, moved = y, True
    return x


def directional_poincare(g: Group, w: int, kind: str) -> MultiPoly:
    """Left, right or central Poincare polynomial in ``q1, q2``."""
    kind = kind.upper()
    require(kind in ("L", "R", "C"), f"unknown kind {kind!r}")
    rows = []
    for v in bruhat_lower(g, w):
        p = projections(g, v)
        if kind == "L":
            rows.append((p.ell_L, p.ell_Lt))
        elif kind == "R":
            rows.append((p.ell_Rt, p.ell_R))
        else:
            rows.append((p.ell_C, p.ell_side))
    return _histogram_poly(("q1", "q2"), rows)


@dataclass(frozen=True)
class InOut:
    poly: MultiPoly  # in q1, q2
    out_poly: MultiPoly  # in q
    out_at_minus_one: int


def inout_poincare(g: Group, w: int) -> InOut:
    """``sum over v <= w of q1 ** in_w(v) * q2 ** out_w(v)`` and its out part."""
    from .bruhat_graph import lower_degrees

    indeg, outdeg = lower_degrees(g, w)
    ids = bruhat_lower(g, w)
    poly = _histogram_poly(("q1", "q2"), [(int(indeg[v]), int(outdeg[v])) for v in ids])
    out_poly = _histogram_poly(("q",), [(int(outdeg[v]),) for v in ids])
    return InOut(poly, out_poly, out_poly.evaluate(q=-1))

