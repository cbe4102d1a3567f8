"""Exact rational vectors and matrices.

Scalars are :class:`fractions.Fraction`.  Vectors are plain tuples of
fractions; matrices are :class:`RatMat`, which carries its column count
explicitly so that ``0 x k`` and ``k x 0`` shapes survive round trips.

Pivoting is always "first nonzero entry, scanning down", so every result
(including which solution :func:`solve` returns) is reproducible.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction
RatVec = tuple  # tuple[Fraction, ...]

_RAT_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


class DimensionError(ValueError):
    pass


class SingularMatrixError(ArithmeticError):
    pass


def parse_rat(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (base 10, optional leading minus).

    Floats, exponents and ``+`` signs are rejected on purpose: defining
    data must stay exact.
    """
    if not isinstance(text, str):
        raise ValueError(f"rational literal must be a string, got {type(text).__name__}")
    match = _RAT_RE.match(text)
    if match is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rat(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def vec(values: Iterable) -> RatVec:
    return tuple(Fraction(v) for v in values)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise DimensionError(f"dot of lengths {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


@dataclass(frozen=True)
class RatMat:
    rows: tuple
    ncols: int

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.rows)
        for i, row in enumerate(rows):
            if len(row) != self.ncols:
                raise DimensionError(f"row {i} has length {len(row)}, expected {self.ncols}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], ncols: int | None = None) -> "RatMat":
        rows = [list(r) for r in rows]
        if ncols is None:
            if not rows:
                raise DimensionError("ncols is required for a matrix with no rows")
            ncols = len(rows[0])
        return cls(tuple(tuple(r) for r in rows), ncols)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RatMat":
        return cls(tuple((Fraction(0),) * ncols for _ in range(nrows)), ncols)

    @classmethod
    def identity(cls, n: int) -> "RatMat":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)), n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def row(self, i: int) -> RatVec:
        return self.rows[i]

    def col(self, j: int) -> RatVec:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "RatMat":
        return RatMat(tuple(self.col(j) for j in range(self.ncols)), self.nrows)

    T = property(transpose)

    def __matmul__(self, other):
        if isinstance(other, RatMat):
            if self.ncols != other.nrows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            cols = [other.col(j) for j in range(other.ncols)]
            return RatMat(tuple(tuple(dot(r, c) for c in cols) for r in self.rows), other.ncols)
        other = tuple(other)
        if len(other) != self.ncols:
            raise DimensionError(f"cannot multiply {self.shape} by vector of length {len(other)}")
        return tuple(dot(r, other) for r in self.rows)

    def scale(self, c) -> "RatMat":
        c = Fraction(c)
        return RatMat(tuple(tuple(c * x for x in r) for r in self.rows), self.ncols)

    def __add__(self, other: "RatMat") -> "RatMat":
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return RatMat(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)),
                      self.ncols)

    def hstack(self, column: Sequence) -> "RatMat":
        if len(column) != self.nrows:
            raise DimensionError("column length does not match row count")
        return RatMat(tuple(r + (Fraction(c),) for r, c in zip(self.rows, column)), self.ncols + 1)

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def to_float(self):
        import numpy as np
        return np.array([[float(x) for x in r] for r in self.rows], dtype=float).reshape(self.shape)

    def __str__(self) -> str:
        return "[" + ", ".join("[" + ", ".join(format_rat(x) for x in r) + "]" for r in self.rows) + "]"


def rref(M: RatMat) -> tuple[RatMat, tuple[int, ...]]:
    """Reduced row echelon form and the pivot columns."""
    A = [list(r) for r in M.rows]
    nrows, ncols = M.shape
    pivots = []
    top = 0
    for j in range(ncols):
        if top == nrows:
            break
        p = next((i for i in range(top, nrows) if A[i][j] != 0), None)
        if p is None:
            continue
        A[top], A[p] = A[p], A[top]
        piv = A[top][j]
        A[top] = [x / piv for x in A[top]]
        for i in range(nrows):
            if i != top and A[i][j] != 0:
                c = A[i][j]
                A[i] = [a - c * b for a, b in zip(A[i], A[top])]
        pivots.append(j)
        top += 1
    return RatMat(tuple(tuple(r) for r in A), ncols), tuple(pivots)


def rank(M: RatMat) -> int:
    """Dimension of the row span over the rationals."""
    return len(rref(M)[1])


def solve(A: RatMat, b: Sequence) -> RatVec | None:
    """Exact solution of ``A @ lam == b``, or ``None`` if inconsistent.

    Free variables are set to zero, so the result is deterministic when
    the solution set is an affine space of positive dimension.
    """
    b = vec(b)
    if len(b) != A.nrows:
        raise DimensionError(f"right-hand side has length {len(b)}, matrix has {A.nrows} rows")
    R, pivots = rref(A.hstack(b))
    n = A.ncols
    if n in pivots:
        return None
    lam = [Fraction(0)] * n
    for i, j in enumerate(pivots):
        lam[j] = R[i, n]
    return tuple(lam)


def inverse(M: RatMat) -> RatMat:
    n, k = M.shape
    if n != k:
        raise DimensionError(f"inverse of non-square {M.shape} matrix")
    aug = RatMat(tuple(r + e for r, e in zip(M.rows, RatMat.identity(n).rows)), 2 * n)
    R, pivots = rref(aug)
    if pivots[:n] != tuple(range(n)):
        raise SingularMatrixError("matrix is singular")
    return RatMat(tuple(r[n:] for r in R.rows), n)


def quad_form(M: RatMat, v: Sequence) -> Fraction:
    """``(M v, v)``."""
    return dot(M @ v, v)


def det(M: RatMat) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination."""
    n, k = M.shape
    if n != k:
        raise DimensionError(f"determinant of non-square {M.shape} matrix")
    A = [list(r) for r in M.rows]
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        p = next((i for i in range(k, n) if A[i][k] != 0), None)
        if p is None:
            return Fraction(0)
        if p != k:
            A[k], A[p] = A[p], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1] if n else Fraction(1)


def leading_minors(M: RatMat) -> list[Fraction]:
    return [det(RatMat(tuple(r[:k] for r in M.rows[:k]), k)) for k in range(1, M.nrows + 1)]


def is_positive_definite(M: RatMat) -> bool:
    if M != M.transpose():
        return False
    return all(d > 0 for d in leading_minors(M))
