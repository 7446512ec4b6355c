"""Coxeter matrices, type labels and the finite-type classification.

A Coxeter matrix is stored as a tuple of tuples of ints with ``INF`` (0)
standing for an infinite bond.  Generators are indexed ``0..n-1``
internally and printed as ``s1..sn``.

>>> classify(matrix_from_label("A3")).label
'A3'
>>> classify(matrix_from_label("A1xI2(7)")).order
28
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass
from pathlib import Path

from .errors import BadDiagonal, BadEntry, NonSymmetric, NotFiniteType

INF = 0

_INF_MARKERS = {"inf", "infinity", "oo", "∞"}

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CoxeterMatrix:
    """A validated-for-shape Coxeter matrix (finiteness is checked by `classify`)."""

    m: Matrix

    @property
    def rank(self) -> int:
        return len(self.m)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.m[i][j]

    def to_json(self) -> dict:
        return {"rank": self.rank, "m": [list(row) for row in self.m]}


@dataclass(frozen=True)
class Component:
    """One irreducible factor: its family, rank, and the generators it uses.

    ``labeling[k]`` is the standard (Bourbaki) index of generator
    ``generators[k]`` inside the factor.
    """

    family: str  # "A", "B", "D", "E", "F", "H" or "I"
    rank: int
    generators: tuple[int, ...]
    labeling: tuple[int, ...]
    m: int = 0  # bond for I2(m)

    @property
    def label(self) -> str:
        if self.family == "I":
            return f"I2({self.m})"
        return f"{self.family}{self.rank}"

    @property
    def order(self) -> int:
        return _order(self.family, self.rank, self.m)


@dataclass(frozen=True)
class Classification:
    components: tuple[Component, ...]

    @property
    def label(self) -> str:
        if not self.components:
            return "A0"
        return "x".join(c.label for c in self.components)

    @property
    def order(self) -> int:
        return math.prod(c.order for c in self.components)


def _order(family: str, n: int, m: int = 0) -> int:
    if family == "A":
        return math.factorial(n + 1)
    if family == "B":
        return 2**n * math.factorial(n)
    if family == "D":
        return 2 ** (n - 1) * math.factorial(n)
    if family == "I":
        return 2 * m
    return {
        ("E", 6): 51840,
        ("E", 7): 2903040,
        ("E", 8): 696729600,
        ("F", 4): 1152,
        ("H", 3): 120,
        ("H", 4): 14400,
    }[family, n]


def _parse_entry(value) -> int:
    if value is None:
        return INF
    if isinstance(value, str):
        if value.strip().lower() in _INF_MARKERS:
            return INF
        try:
            value = int(value)
        except ValueError:
            raise BadEntry(f"unreadable Coxeter matrix entry {value!r}") from None
    if isinstance(value, float):
        if math.isinf(value):
            return INF
        if not value.is_integer():
            raise BadEntry(f"non-integer Coxeter matrix entry {value!r}")
        value = int(value)
    if isinstance(value, bool) or not isinstance(value, int):
        raise BadEntry(f"unreadable Coxeter matrix entry {value!r}")
    if value in (0, -1):
        return INF
    return value


def make_matrix(rows) -> CoxeterMatrix:
    """Check shape, symmetry and diagonal; return a `CoxeterMatrix`."""
    m = tuple(tuple(_parse_entry(x) for x in row) for row in rows)
    n = len(m)
    if any(len(row) != n for row in m):
        raise BadEntry("Coxeter matrix must be square")
    for i in range(n):
        if m[i][i] != 1:
            raise BadDiagonal(f"m(s{i+1},s{i+1}) = {m[i][i]}, expected 1")
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                raise NonSymmetric(f"m(s{i+1},s{j+1}) != m(s{j+1},s{i+1})")
            if m[i][j] != INF and m[i][j] < 2:
                raise BadEntry(f"m(s{i+1},s{j+1}) = {m[i][j]}, expected >= 2")
    return CoxeterMatrix(m)


def load_matrix(path: str | Path) -> CoxeterMatrix:
    """Read ``{"rank": n, "m": [[...]]}`` from a JSON file."""
    data = json.loads(Path(path).read_text())
    matrix = make_matrix(data["m"])
    if "rank" in data and data["rank"] != matrix.rank:
        raise BadEntry(f"declared rank {data['rank']} != matrix size {matrix.rank}")
    return matrix


# Standard diagrams, Bourbaki numbering (0-based).


def _standard_bonds(family: str, n: int, m: int = 0) -> dict[tuple[int, int], int]:
    path = {(i, i + 1): 3 for i in range(n - 1)}
    if family == "A":
        return path
    if family == "B":
        path[n - 2, n - 1] = 4
        return path
    if family == "D":
        del path[n - 2, n - 1]
        path[n - 3, n - 1] = 3
        return path
    if family == "E":
        bonds = {(0, 2): 3, (1, 3): 3}
        bonds.update({(i, i + 1): 3 for i in range(2, n - 1)})
        return bonds
    if family == "F":
        return {(0, 1): 3, (1, 2): 4, (2, 3): 3}
    if family == "H":
        path[0, 1] = 5
        return path
    if family == "I":
        return {(0, 1): m}
    raise NotFiniteType(f"unknown family {family!r}")


def standard_matrix(family: str, n: int, m: int = 0) -> Matrix:
    bonds = _standard_bonds(family, n, m)
    rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for (i, j), v in bonds.items():
        rows[i][j] = rows[j][i] = v
    return tuple(map(tuple, rows))


_LABEL = re.compile(r"^(?:([ABCDEFGH])(\d+)|I2\((\d+)\))$")


def _parse_factor(text: str) -> tuple[str, int, int]:
    match = _LABEL.match(text.strip())
    if not match:
        raise NotFiniteType(f"unrecognised type label {text!r}")
    if match.group(3) is not None:
        m = int(match.group(3))
        if m < 2:
            raise NotFiniteType(f"I2({m}) is not a Coxeter group")
        if m == 2:
            raise NotFiniteType("I2(2) is reducible; write A1xA1")
        return "I", 2, m
    family, n = match.group(1), int(match.group(2))
    if family == "C":
        family = "B"
    if family == "G":
        if n != 2:
            raise NotFiniteType(f"no group G{n}")
        return "I", 2, 6
    valid = {
        "A": n >= 0,
        "B": n >= 2,
        "D": n >= 4,
        "E": n in (6, 7, 8),
        "F": n == 4,
        "H": n in (3, 4),
    }[family]
    if not valid:
        raise NotFiniteType(f"no finite Coxeter group {family}{n}")
    return family, n, 0


def matrix_from_label(label: str) -> CoxeterMatrix:
    """Build the Coxeter matrix of a label such as ``"B3"`` or ``"A1xA2"``."""
    text = label.strip()
    if text.lower() in ("", "trivial"):
        return CoxeterMatrix(())
    blocks = []
    for part in re.split(r"[x×]", text):
        family, n, m = _parse_factor(part)
        if n:
            blocks.append(standard_matrix(family, n, m))
    size = sum(len(b) for b in blocks)
    rows = [[1 if i == j else 2 for j in range(size)] for i in range(size)]
    offset = 0
    for block in blocks:
        k = len(block)
        for i in range(k):
            for j in range(k):
                rows[offset + i][offset + j] = block[i][j]
        offset += k
    return CoxeterMatrix(tuple(map(tuple, rows)))


def _components(matrix: CoxeterMatrix) -> list[list[int]]:
    n = matrix.rank
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        comp, stack = [], [start]
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and matrix[i, j] != 2:
                    seen[j] = True
                    stack.append(j)
        out.append(sorted(comp))
    return out


def _identify(matrix: CoxeterMatrix, comp: list[int]) -> tuple[str, int, int]:
    """Recognise the family of one connected component of the diagram."""
    n = len(comp)
    bonds = {
        (a, b): matrix[a, b]
        for x, a in enumerate(comp)
        for b in comp[x + 1 :]
        if matrix[a, b] != 2
    }
    name = "{" + ",".join(f"s{i+1}" for i in comp) + "}"
    if any(v == INF for v in bonds.values()):
        raise NotFiniteType(f"infinite bond in sub-diagram {name}")
    if n == 1:
        return "A", 1, 0
    if len(bonds) != n - 1:
        raise NotFiniteType(f"sub-diagram {name} contains a cycle")
    if n == 2:
        (v,) = bonds.values()
        if v == 3:
            return "A", 2, 0
        if v == 4:
            return "B", 2, 0
        return "I", 2, v
    degree = {i: 0 for i in comp}
    for a, b in bonds:
        degree[a] += 1
        degree[b] += 1
    heavy = {e: v for e, v in bonds.items() if v != 3}
    if any(v > 5 for v in heavy.values()) or len(heavy) > 1:
        raise NotFiniteType(f"sub-diagram {name} is not of finite type")
    branches = [i for i in comp if degree[i] >= 3]
    if not branches:
        if not heavy:
            return "A", n, 0
        ((a, b), v) = next(iter(heavy.items()))
        at_end = degree[a] == 1 or degree[b] == 1
        if v == 4 and at_end:
            return "B", n, 0
        if v == 4 and n == 4:
            return "F", 4, 0
        if v == 5 and at_end and n in (3, 4):
            return "H", n, 0
        raise NotFiniteType(f"sub-diagram {name} is not of finite type")
    if heavy or len(branches) > 1 or degree[branches[0]] != 3:
        raise NotFiniteType(f"sub-diagram {name} is not of finite type")
    centre = branches[0]
    arms = []
    for start in comp:
        if (min(start, centre), max(start, centre)) not in bonds:
            continue
        length, prev, cur = 1, centre, start
        while True:
            nxt = [
                j
                for j in comp
                if j != prev and (min(j, cur), max(j, cur)) in bonds
            ]
            if not nxt:
                break
            length, prev, cur = length + 1, cur, nxt[0]
        arms.append(length)
    arms.sort()
    if arms[:2] == [1, 1]:
        return "D", n, 0
    if arms in ([1, 2, 2], [1, 2, 3], [1, 2, 4]):
        return "E", n, 0
    raise NotFiniteType(f"sub-diagram {name} is not of finite type")


def _isomorphism(matrix: CoxeterMatrix, comp: list[int], target: Matrix) -> tuple[int, ...]:
    """Map component vertices onto the standard diagram, preferring the identity."""
    n = len(comp)
    if all(matrix[comp[a], comp[b]] == target[a][b] for a in range(n) for b in range(n)):
        return tuple(range(n))
    # BFS order so each vertex after the first has an assigned neighbour
    order, seen = [0], {0}
    for a in order:
        for b in range(n):
            if b not in seen and matrix[comp[a], comp[b]] != 2:
                seen.add(b)
                order.append(b)
    image: dict[int, int] = {}
    used: set[int] = set()

    def extend(k: int) -> bool:
        if k == n:
            return True
        a = order[k]
        for cand in range(n):
            if cand in used:
                continue
            if all(matrix[comp[a], comp[b]] == target[cand][image[b]] for b in image):
                image[a] = cand
                used.add(cand)
                if extend(k + 1):
                    return True
                del image[a]
                used.discard(cand)
        return False

    if not extend(0):
        raise NotFiniteType("diagram does not match its recognised standard form")
    return tuple(image[a] for a in range(n))


def classify(matrix: CoxeterMatrix) -> Classification:
    """Recognise the finite type of ``matrix`` or raise `NotFiniteType`."""
    comps = []
    for comp in _components(matrix):
        family, n, m = _identify(matrix, comp)
        labeling = _isomorphism(matrix, comp, standard_matrix(family, n, m))
        comps.append(Component(family, n, tuple(comp), labeling, m))
    return Classification(tuple(comps))


def validate_matrix(rows) -> Classification:
    """Validate raw matrix rows and classify them."""
    matrix = rows if isinstance(rows, CoxeterMatrix) else make_matrix(rows)
    return classify(matrix)
