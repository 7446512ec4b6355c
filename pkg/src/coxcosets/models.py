"""Faithful element models used while enumerating a group.

Every model exposes ``identity()``, ``right(x, i)`` (``x * s_i``),
``left(x, i)`` (``s_i * x``) and ``key(x)`` (a hashable canonical form).
Generator indices are the model's own standard (Bourbaki) indices.
"""

from __future__ import annotations

import numpy as np


class PermutationModel:
    """Type A_n: one-line permutations of ``1..n+1``, ``(xy)(k) = x(y(k))``."""

    def __init__(self, n: int):
        self.rank = n

    def identity(self):
        return tuple(range(1, self.rank + 2))

    def right(self, x, i):
        x = list(x)
        x[i], x[i + 1] = x[i + 1], x[i]
        return tuple(x)

    def left(self, x, i):
        a, b = i + 1, i + 2
        return tuple(b if v == a else a if v == b else v for v in x)

    def key(self, x):
        return x


class SignedPermutationModel:
    """Types B_n and D_n as signed permutations of ``1..n``.

    ``x[k-1] = x(k)``; ``s_1..s_{n-1}`` are adjacent transpositions, and the
    last generator is the sign change ``n -> -n`` (B) or the map
    ``n-1 -> -n, n -> -(n-1)`` (D).
    """

    def __init__(self, n: int, even: bool = False):
        self.rank = n
        self.even = even

    def identity(self):
        return tuple(range(1, self.rank + 1))

    def _act(self, i, v):
        n = self.rank
        sign = -1 if v < 0 else 1
        a = abs(v)
        if i < n - 1:
            if a == i + 1:
                return sign * (i + 2)
            if a == i + 2:
                return sign * (i + 1)
            return v
        if not self.even:
            return -v if a == n else v
        if a == n - 1:
            return -sign * n
        if a == n:
            return -sign * (n - 1)
        return v

    def right(self, x, i):
        n = self.rank
        x = list(x)
        if i < n - 1:
            x[i], x[i + 1] = x[i + 1], x[i]
        elif not self.even:
            x[n - 1] = -x[n - 1]
        else:
            x[n - 2], x[n - 1] = -x[n - 1], -x[n - 2]
        return tuple(x)

    def left(self, x, i):
        return tuple(self._act(i, v) for v in x)

    def key(self, x):
        return x


class DihedralModel:
    """I2(m): ``(k, b)`` stands for ``r^k s_1^b`` with ``r = s_2 s_1``."""

    def __init__(self, m: int):
        self.rank = 2
        self.m = m

    def identity(self):
        return (0, 0)

    def _mul(self, x, y):
        (k1, b1), (k2, b2) = x, y
        k = k1 - k2 if b1 else k1 + k2
        return (k % self.m, b1 ^ b2)

    def _gen(self, i):
        return (0, 1) if i == 0 else (1, 1)

    def right(self, x, i):
        return self._mul(x, self._gen(i))

    def left(self, x, i):
        return self._mul(self._gen(i), x)

    def key(self, x):
        return x


class ReflectionModel:
    """Exact reflection representation over ``Z[phi]``, ``phi^2 = phi + 1``.

    A matrix is a pair ``(a, b)`` of integer arrays meaning ``a + b*phi``.
    Generator ``i`` maps ``v`` to ``v - (c_i . v) e_i``; ``c_ij`` is ``-phi``
    on 5-bonds and a Cartan integer elsewhere, so F4 and E_n stay integral.
    """

    def __init__(self, matrix):
        n = len(matrix)
        self.rank = n
        ca = np.zeros((n, n), dtype=np.int64)
        cb = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            for j in range(n):
                m = matrix[i][j]
                if i == j:
                    ca[i, j] = 2
                elif m == 3:
                    ca[i, j] = -1
                elif m == 4:
                    ca[i, j] = -1 if i < j else -2
                elif m == 6:
                    ca[i, j] = -1 if i < j else -3
                elif m == 5:
                    cb[i, j] = -1
                elif m != 2:
                    raise ValueError(f"no exact model for bond {m}")
        self.gens = []
        for i in range(n):
            ga, gb = np.eye(n, dtype=np.int64), np.zeros((n, n), dtype=np.int64)
            ga[i, :] -= ca[i, :]
            gb[i, :] -= cb[i, :]
            self.gens.append((ga, gb))

    @staticmethod
    def _mul(x, y):
        xa, xb = x
        ya, yb = y
        bb = xb @ yb
        return (xa @ ya + bb, xa @ yb + xb @ ya + bb)

    def identity(self):
        return (np.eye(self.rank, dtype=np.int64), np.zeros((self.rank, self.rank), dtype=np.int64))

    def right(self, x, i):
        return self._mul(x, self.gens[i])

    def left(self, x, i):
        return self._mul(self.gens[i], x)

    def key(self, x):
        return x[0].tobytes() + x[1].tobytes()


class ProductModel:
    """Direct product of irreducible factors with a global generator order."""

    def __init__(self, factors, placement):
        # placement[i] = (factor index, local standard index) of global generator i
        self.factors = factors
        self.placement = placement
        self.rank = len(placement)

    def identity(self):
        return tuple(f.identity() for f in self.factors)

    def right(self, x, i):
        c, j = self.placement[i]
        return x[:c] + (self.factors[c].right(x[c], j),) + x[c + 1 :]

    def left(self, x, i):
        c, j = self.placement[i]
        return x[:c] + (self.factors[c].left(x[c], j),) + x[c + 1 :]

    def key(self, x):
        return tuple(f.key(y) for f, y in zip(self.factors, x))


def factor_model(family: str, n: int, m: int, matrix):
    """Pick the model for one irreducible factor with standard labeling."""
    if family == "A":
        return PermutationModel(n)
    if family == "B":
        return SignedPermutationModel(n)
    if family == "D":
        return SignedPermutationModel(n, even=True)
    if family == "I":
        return DihedralModel(m)
    return ReflectionModel(matrix)
