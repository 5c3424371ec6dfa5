"""Exact inertia (i+, i-, eta) of symmetric rational matrices.

Two unrelated routes are provided so each can check the other:

* :func:`inertia_by_congruence` -- symmetric elimination (Sylvester's law).
* :func:`char_poly` + :func:`inertia_from_char_poly` -- Faddeev-LeVerrier
  coefficients and Descartes' rule of signs, which is exact for a
  real-rooted polynomial.

No floating point is involved anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from numbers import Rational
from typing import Iterable, Sequence

from .core import SignedGraph


@dataclass(frozen=True)
class Inertia:
    positive: int
    negative: int
    zero: int

    @property
    def dimension(self) -> int:
        return self.positive + self.negative + self.zero

    @property
    def rank(self) -> int:
        return self.positive + self.negative

    def __add__(self, other: "Inertia") -> "Inertia":
        return Inertia(self.positive + other.positive, self.negative + other.negative, self.zero + other.zero)

    def swapped(self) -> "Inertia":
        return Inertia(self.negative, self.positive, self.zero)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.positive, self.negative, self.zero)

    def __str__(self) -> str:
        return f"({self.positive},{self.negative},{self.zero})"


class SymmetricExactMatrix:
    """Square symmetric matrix with ``int`` / ``Fraction`` entries.

    Entries are stored row-major as a tuple of tuples and never mutated.
    """

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[Rational]]):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        for i, r in enumerate(rows):
            if len(r) != n:
                raise ValueError(f"row {i} has length {len(r)}, expected {n}")
            for x in r:
                if isinstance(x, bool) or not isinstance(x, Rational):
                    raise TypeError(f"entries must be exact rationals, got {x!r}")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i},{j})")
        self.rows = rows

    @classmethod
    def _trusted(cls, rows: tuple[tuple[Rational, ...], ...]) -> "SymmetricExactMatrix":
        m = cls.__new__(cls)
        m.rows = rows
        return m

    @property
    def dimension(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> Rational:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SymmetricExactMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"SymmetricExactMatrix({[list(r) for r in self.rows]!r})"

    def tolist(self) -> list[list[Rational]]:
        return [list(r) for r in self.rows]


def adjacency_matrix(g: SignedGraph) -> SymmetricExactMatrix:
    n = g.order
    a = [[0] * n for _ in range(n)]
    for u, v, s in g.edges:
        a[u][v] = s
        a[v][u] = s
    return SymmetricExactMatrix._trusted(tuple(tuple(r) for r in a))


def principal_submatrix(a: SymmetricExactMatrix, keep: Iterable[int]) -> SymmetricExactMatrix:
    idx = sorted(set(keep))
    n = a.dimension
    for i in idx:
        if not 0 <= i < n:
            raise ValueError(f"index {i} out of range for dimension {n}")
    return SymmetricExactMatrix._trusted(tuple(tuple(a.rows[i][j] for j in idx) for i in idx))


def _integer_rows(a: SymmetricExactMatrix) -> list[list[int]]:
    # a positive rescaling is a congruence, so clearing denominators keeps the inertia
    den = 1
    for r in a.rows:
        for x in r:
            if x.denominator != 1:
                den = lcm(den, x.denominator)
    if den == 1:
        return [[int(x) for x in r] for r in a.rows]
    return [[int(x * den) for x in r] for r in a.rows]


def _reduce(m: list[list[int]]) -> tuple[int, int, int]:
    """Inertia of an integer symmetric matrix by fraction-free elimination.

    Each step replaces the trailing block by ``|pivot| * Schur complement``,
    which is the Schur complement scaled by a positive integer and therefore
    has the same inertia. A common positive gcd is divided out after each step.
    """
    pos = neg = zero = 0
    while m:
        n = len(m)
        # zero rows are zero eigen-directions; drop them first
        live = [i for i in range(n) if any(m[i])]
        if len(live) < n:
            zero += n - len(live)
            m = [[m[i][j] for j in live] for i in live]
            n = len(m)
            if not n:
                break
        piv = next((i for i in range(n) if m[i][i]), None)
        if piv is not None:
            d = m[piv][piv]
            if d > 0:
                pos += 1
            else:
                neg += 1
            sd = 1 if d > 0 else -1
            ad = d * sd
            rest = [i for i in range(n) if i != piv]
            b = m[piv]
            new = []
            for i in rest:
                mi = m[i]
                bi = sd * b[i]
                new.append([ad * mi[j] - bi * b[j] for j in rest])
        else:
            # diagonal is all zero: pivot on the 2x2 block [[0, a], [a, 0]]
            i0 = 0
            row0 = m[i0]
            j0 = next(j for j in range(n) if row0[j])
            a = row0[j0]
            pos += 1
            neg += 1
            sa = 1 if a > 0 else -1
            aa = a * sa
            rest = [i for i in range(n) if i != i0 and i != j0]
            bi_col = m[i0]
            bj_col = m[j0]
            new = []
            for i in rest:
                mi = m[i]
                xi = sa * bi_col[i]
                yi = sa * bj_col[i]
                new.append([aa * mi[j] - xi * bj_col[j] - yi * bi_col[j] for j in rest])
        g = 0
        for r in new:
            for x in r:
                if x:
                    g = gcd(g, x)
                    if g == 1:
                        break
            if g == 1:
                break
        if g > 1:
            new = [[x // g for x in r] for r in new]
        m = new
    return pos, neg, zero


def inertia_by_congruence(a: SymmetricExactMatrix) -> Inertia:
    if not isinstance(a, SymmetricExactMatrix):
        a = SymmetricExactMatrix(a)
    return Inertia(*_reduce(_integer_rows(a)))


def graph_inertia(g: SignedGraph) -> Inertia:
    """Inertia of the signed adjacency matrix of ``g``."""
    n = g.order
    m = [[0] * n for _ in range(n)]
    for u, v, s in g.edges:
        m[u][v] = s
        m[v][u] = s
    return Inertia(*_reduce(m))


def char_poly(a: SymmetricExactMatrix) -> tuple[int, ...]:
    """Coefficients of det(xI - A), leading coefficient first.

    Faddeev-LeVerrier recurrence; every division is exact for an integer
    matrix and is checked.
    """
    if not isinstance(a, SymmetricExactMatrix):
        a = SymmetricExactMatrix(a)
    for r in a.rows:
        for x in r:
            if x.denominator != 1:
                raise ValueError("char_poly is only defined here for integer matrices")
    A = [[int(x) for x in r] for r in a.rows]
    n = len(A)
    coeffs = [1]
    M = [[0] * n for _ in range(n)]
    c = 1
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I
        AM = [[sum(A[i][t] * M[t][j] for t in range(n) if A[i][t]) for j in range(n)] for i in range(n)]
        for i in range(n):
            AM[i][i] += c
        M = AM
        tr = sum(A[i][t] * M[t][i] for i in range(n) for t in range(n) if A[i][t])
        q, r = divmod(-tr, k)
        if r:
            raise ArithmeticError("inexact division in Faddeev-LeVerrier step")
        c = q
        coeffs.append(c)
    return tuple(coeffs)


def inertia_from_char_poly(p: Sequence[int]) -> Inertia:
    """Read (i+, i-, eta) off a real-rooted polynomial (leading coefficient first).

    eta is the multiplicity of the root 0; Descartes' rule counts positive
    roots exactly when every root is real.
    """
    p = list(p)
    while p and p[0] == 0:
        p.pop(0)
    if not p:
        raise ValueError("zero polynomial has no inertia")
    deg = len(p) - 1
    eta = 0
    while p[-1] == 0:
        p.pop()
        eta += 1
    signs = [1 if c > 0 else -1 for c in p if c != 0]
    changes = sum(1 for s, t in zip(signs, signs[1:]) if s != t)
    return Inertia(changes, deg - eta - changes, eta)
