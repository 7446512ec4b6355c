"""Finite Coxeter groups as Cayley tables over dense element ids.

Elements are plain ``int`` ids.  Id 0 is the identity, and ids follow BFS
by length with ties broken by the lexicographically smallest reduced word,
so every run of `build_group` assigns the same ids.

Products follow function composition, ``(xy)(k) = x(y(k))`` for permutation
models.  In type A the right descents of a one-line permutation ``w`` are
the positions ``i`` with ``w(i) > w(i+1)``.

>>> g = build_group("A3")
>>> g.format(g.multiply(g.gen(1), g.multiply(g.gen(0), g.gen(2))))
'3142'
>>> g.order, len(g.reflections), int(g.length[g.longest])
(24, 6, 6)
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .classification import (
    Classification,
    CoxeterMatrix,
    classify,
    matrix_from_label,
    standard_matrix,
)
from .errors import InvariantError, OrderMismatch, ResourceLimit, UnknownElement, require
from .models import ProductModel, factor_model

DEFAULT_CAP = 10**6
# ~26 MB of packed bits at H4; E6 (51840 elements) would need ~336 MB
BRUHAT_CACHE_LIMIT = 2**14

Subset = frozenset


@dataclass(frozen=True)
class DescentData:
    """Descent sets of one element and the derived descent numbers.

    ``*_small`` descents conjugate outside S, ``*_large`` inside it;
    ``pairs`` holds the ``(r, s)`` with ``r w = w s``.
    """

    left: Subset
    right: Subset
    left_ascents: Subset
    right_ascents: Subset
    left_small: Subset
    left_large: Subset
    right_small: Subset
    right_large: Subset
    pairs: frozenset[tuple[int, int]]

    @property
    def d(self) -> int:
        return len(self.left_small) + len(self.right_small) + len(self.pairs)

    @property
    def d_tilde(self) -> int:
        return len(self.left) + len(self.right)

    @property
    def counts(self) -> tuple[int, int, int, int]:
        """``(d_L1, d_L2, d_R2, d_R1)``, the exponents of the Eulerian polynomial."""
        return (
            len(self.left_small),
            len(self.left_large),
            len(self.right_large),
            len(self.right_small),
        )


@dataclass(frozen=True, eq=False)
class Group:
    matrix: CoxeterMatrix
    classification: Classification
    elements: tuple  # model element per id
    left: np.ndarray  # left[i, w] = s_i w
    right: np.ndarray  # right[i, w] = w s_i
    length: np.ndarray
    inverse_of: np.ndarray
    words: tuple[tuple[int, ...], ...]
    reflections: tuple[int, ...]
    longest: int
    one_line: bool
    _bruhat: np.ndarray | None = field(default=None, repr=False)

    @property
    def rank(self) -> int:
        return self.matrix.rank

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def label(self) -> str:
        return self.classification.label

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(range(self.rank))

    @property
    def identity(self) -> int:
        return 0

    def __repr__(self) -> str:
        return f"Group({self.label}, order={self.order})"

    def gen(self, i: int) -> int:
        """Id of the simple generator ``s_{i+1}``."""
        return int(self.right[i, 0])

    # -- group law -------------------------------------------------------

    def multiply(self, x: int, y: int) -> int:
        for s in self.words[y]:
            x = int(self.right[s, x])
        return x

    def product(self, *xs: int) -> int:
        out = 0
        for x in xs:
            out = self.multiply(out, x)
        return out

    def inverse(self, x: int) -> int:
        return int(self.inverse_of[x])

    def word_element(self, word) -> int:
        x = 0
        for s in word:
            x = int(self.right[s, x])
        return x

    # -- descents --------------------------------------------------------

    def left_descents(self, w: int) -> Subset:
        lw = self.length[w]
        return frozenset(i for i in range(self.rank) if self.length[self.left[i, w]] < lw)

    def right_descents(self, w: int) -> Subset:
        lw = self.length[w]
        return frozenset(i for i in range(self.rank) if self.length[self.right[i, w]] < lw)

    def descent_data(self, w: int) -> DescentData:
        dl, dr = self.left_descents(w), self.right_descents(w)
        every = frozenset(range(self.rank))
        pairs = frozenset(
            (r, s) for r in dl for s in dr if self.left[r, w] == self.right[s, w]
        )
        left_large = frozenset(r for r, _ in pairs)
        right_large = frozenset(s for _, s in pairs)
        return DescentData(
            left=dl,
            right=dr,
            left_ascents=every - dl,
            right_ascents=every - dr,
            left_small=dl - left_large,
            left_large=left_large,
            right_small=dr - right_large,
            right_large=right_large,
            pairs=pairs,
        )

    def reduced_word(self, w: int) -> tuple[int, ...]:
        """Strip the smallest left descent until the identity is reached."""
        word = []
        while w:
            s = min(self.left_descents(w))
            word.append(s)
            w = int(self.left[s, w])
        return tuple(word)

    def longest_element(self, subset=None) -> int:
        """The longest element ``w0(I)`` of the parabolic subgroup ``W_I``."""
        subset = range(self.rank) if subset is None else sorted(subset)
        w = 0
        climbing = True
        while climbing:
            climbing = False
            for s in subset:
                up = int(self.right[s, w])
                if self.length[up] > self.length[w]:
                    w, climbing = up, True
                    break
        require(self.multiply(w, w) == 0, "w0(I) is not an involution")
        return w

    # -- reflections -----------------------------------------------------

    @cached_property
    def refl_left(self) -> np.ndarray:
        """``refl_left[k, x] = t_k x`` for ``t_k = reflections[k]``."""
        out = np.empty((len(self.reflections), self.order), dtype=np.int32)
        for k, t in enumerate(self.reflections):
            arr = np.arange(self.order, dtype=np.int32)
            for s in reversed(self.words[t]):
                arr = self.left[s][arr]
            out[k] = arr
        return out

    @cached_property
    def refl_right(self) -> np.ndarray:
        """``refl_right[k, x] = x t_k``."""
        out = np.empty((len(self.reflections), self.order), dtype=np.int32)
        for k, t in enumerate(self.reflections):
            arr = np.arange(self.order, dtype=np.int32)
            for s in self.words[t]:
                arr = self.right[s][arr]
            out[k] = arr
        return out

    @cached_property
    def times_longest(self) -> np.ndarray:
        """``times_longest[x] = x w0``."""
        arr = np.arange(self.order, dtype=np.int32)
        for s in self.words[self.longest]:
            arr = self.right[s][arr]
        return arr

    @cached_property
    def reflection_set(self) -> frozenset[int]:
        return frozenset(self.reflections)

    def inversions(self, w: int, side: str = "left") -> frozenset[int]:
        """``T_L(w) = {t : l(tw) < l(w)}`` or ``T_R(w) = {t : l(wt) < l(w)}``."""
        table = self.refl_left if side == "left" else self.refl_right
        lw = self.length[w]
        return frozenset(
            t for k, t in enumerate(self.reflections) if self.length[table[k, w]] < lw
        )

    @cached_property
    def memo(self) -> dict:
        """Scratch cache for derived per-group tables (filled on first use)."""
        return {}

    # -- Bruhat cache ----------------------------------------------------

    def bruhat_row(self, w: int) -> np.ndarray:
        """Boolean mask of the lower interval ``[e, w]``."""
        if self._bruhat is not None:
            return np.unpackbits(self._bruhat[w], count=self.order).astype(bool)
        return _lower_ideal_mask(self, w)

    # -- notation --------------------------------------------------------

    def format(self, w: int) -> str:
        if self.one_line:
            perm = self.elements[w][0]
            sep = "" if len(perm) <= 9 else ","
            return sep.join(map(str, perm))
        if w == 0:
            return "e"
        return ".".join(f"s{s + 1}" for s in self.words[w])

    def format_subset(self, subset) -> str:
        return "{" + ",".join(f"s{s + 1}" for s in sorted(subset)) + "}"

    @cached_property
    def _one_line_index(self) -> dict:
        return {self.elements[w][0]: w for w in range(self.order)} if self.one_line else {}

    def parse(self, text: str) -> int:
        """Read an element as one-line notation (type A), a word, or ``id:N``."""
        s = text.strip()
        if s in ("e", ""):
            return 0
        if s.startswith("id:") or s.startswith("#"):
            k = int(s.split(":", 1)[-1].lstrip("#"))
            if not 0 <= k < self.order:
                raise UnknownElement(f"no element with id {k}")
            return k
        if self.one_line and re.fullmatch(r"\d+(,\d+)*", s):
            digits = s.split(",") if "," in s else list(s)
            perm = tuple(int(d) for d in digits)
            if perm in self._one_line_index:
                return self._one_line_index[perm]
            raise UnknownElement(f"{text!r} is not a permutation of 1..{self.rank + 1}")
        tokens = [t for t in re.split(r"[.\s*]+|(?=s)", s) if t]
        word = []
        for tok in tokens:
            tok = tok[1:] if tok.startswith("s") else tok
            if not tok.isdigit() or not 1 <= int(tok) <= self.rank:
                raise UnknownElement(f"cannot read element {text!r}")
            word.append(int(tok) - 1)
        return self.word_element(word)

    def parse_subset(self, text: str) -> Subset:
        s = text.strip().strip("{}")
        if s.lower() in ("", "-", "none", "empty", "0"):
            return frozenset()
        out = set()
        for tok in re.split(r"[,\s]+", s):
            if not tok:
                continue
            tok = tok[1:] if tok.startswith("s") else tok
            if not tok.isdigit() or not 1 <= int(tok) <= self.rank:
                raise UnknownElement(f"cannot read generator subset {text!r}")
            out.add(int(tok) - 1)
        return frozenset(out)


def _lower_ideal_mask(g: Group, w: int) -> np.ndarray:
    """``[e, w]`` by downward search along Bruhat covers ``tw``."""
    mask = np.zeros(g.order, dtype=bool)
    mask[w] = True
    frontier = [w]
    while frontier:
        nxt = []
        for x in frontier:
            lx = g.length[x]
            for y in g.refl_left[:, x]:
                if not mask[y] and g.length[y] == lx - 1:
                    mask[y] = True
                    nxt.append(int(y))
        frontier = nxt
    return mask


def _bruhat_matrix(left: np.ndarray, length: np.ndarray) -> np.ndarray:
    """Packed rows of ``[e, w]`` from ``[e, w] = B u sB`` with ``B = [e, sw]``."""
    rank, order = left.shape
    packed = np.zeros((order, (order + 7) // 8), dtype=np.uint8)
    row0 = np.zeros(order, dtype=bool)
    row0[0] = True
    packed[0] = np.packbits(row0)
    for w in range(1, order):
        lw = length[w]
        s = next(i for i in range(rank) if length[left[i, w]] < lw)
        p = left[s, w]
        base = np.unpackbits(packed[p], count=order).astype(bool)
        packed[w] = np.packbits(base | base[left[s]])
    return packed


def build_group(spec, *, cap: int = DEFAULT_CAP, bruhat_cache: bool = True) -> Group:
    """Enumerate the finite Coxeter group given by a type label or matrix."""
    if isinstance(spec, CoxeterMatrix):
        matrix = spec
    elif isinstance(spec, str):
        matrix = matrix_from_label(spec)
    else:
        from .classification import make_matrix

        matrix = make_matrix(spec)
    cls = classify(matrix)
    predicted = cls.order
    if predicted > cap:
        raise ResourceLimit(f"{cls.label} has {predicted} elements, above the cap of {cap}")

    placement = [None] * matrix.rank
    factors = []
    for c, comp in enumerate(cls.components):
        factors.append(
            factor_model(comp.family, comp.rank, comp.m, standard_matrix(comp.family, comp.rank, comp.m))
        )
        for gen, local in zip(comp.generators, comp.labeling):
            placement[gen] = (c, local)
    model = ProductModel(factors, placement)
    n = matrix.rank

    elements = [model.identity()]
    index = {model.key(elements[0]): 0}
    words: list[tuple[int, ...]] = [()]
    parent: list[tuple[int, int]] = [(-1, -1)]
    right_rows: list[list[int]] = []
    head = 0
    while head < len(elements):
        if len(elements) > predicted:
            raise OrderMismatch(f"{cls.label}: enumeration exceeded {predicted} elements")
        x = elements[head]
        row = []
        for i in range(n):
            y = model.right(x, i)
            k = model.key(y)
            j = index.get(k)
            if j is None:
                j = len(elements)
                index[k] = j
                elements.append(y)
                words.append(words[head] + (i,))
                parent.append((head, i))
            row.append(j)
        right_rows.append(row)
        head += 1
    order = len(elements)
    if order != predicted:
        raise OrderMismatch(f"{cls.label}: enumerated {order} elements, expected {predicted}")

    right = np.array(right_rows, dtype=np.int32).T.reshape(n, order)
    left = np.empty((n, order), dtype=np.int32)
    for w, x in enumerate(elements):
        for i in range(n):
            j = index.get(model.key(model.left(x, i)))
            if j is None:
                raise OrderMismatch(f"{cls.label}: left action left the enumerated set")
            left[i, w] = j
    length = np.array([len(wd) for wd in words], dtype=np.int32)
    inverse_of = np.zeros(order, dtype=np.int32)
    for w in range(1, order):
        p, i = parent[w]
        inverse_of[w] = left[i, inverse_of[p]]

    gens = [int(right[i, 0]) for i in range(n)]
    refl = set(gens)
    frontier = list(gens)
    while frontier:
        nxt = []
        for t in frontier:
            for i in range(n):
                u = int(left[i, right[i, t]])
                if u not in refl:
                    refl.add(u)
                    nxt.append(u)
        frontier = nxt
    longest = int(np.argmax(length))
    if int((length == length[longest]).sum()) != 1:
        raise InvariantError("longest element is not unique")

    one_line = (
        len(cls.components) == 1
        and cls.components[0].family == "A"
        and cls.components[0].labeling == tuple(range(n))
    )
    bruhat = _bruhat_matrix(left, length) if bruhat_cache and order <= BRUHAT_CACHE_LIMIT else None
    return Group(
        matrix=matrix,
        classification=cls,
        elements=tuple(elements),
        left=left,
        right=right,
        length=length,
        inverse_of=inverse_of,
        words=tuple(words),
        reflections=tuple(sorted(refl)),
        longest=longest,
        one_line=one_line,
        _bruhat=bruhat,
    )
