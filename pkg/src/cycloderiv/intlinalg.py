"""Exact integer linear algebra: Bareiss determinants, adjugates, rational solves.

Everything works on arbitrary-precision integers; no floats, no modular
shortcuts. Determinants use fraction-free (Bareiss) elimination, whose
intermediate values are themselves minors and therefore integers. The unique
solution of a nonsingular square system is returned as an integer vector over
a single positive denominator, fully reduced, so integrality is decided by
``denominator == 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

IntVector = tuple[int, ...]


class SingularMatrixError(ValueError):
    pass


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]  # row-major

    def __post_init__(self) -> None:
        if self.rows < 1 or self.cols < 1:
            raise ValueError("matrix dimensions must be positive")
        object.__setattr__(self, "entries", tuple(self.entries))
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> IntMatrix:
        if not rows:
            raise ValueError("need at least one row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("rows must all have the same length")
        return cls(len(rows), width, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]]) -> IntMatrix:
        if not cols:
            raise ValueError("need at least one column")
        height = len(cols[0])
        if any(len(c) != height for c in cols):
            raise ValueError("columns must all have the same length")
        return cls(
            height, len(cols), tuple(cols[j][i] for i in range(height) for j in range(len(cols)))
        )

    @classmethod
    def identity(cls, d: int) -> IntMatrix:
        return cls(d, d, tuple(1 if i == j else 0 for i in range(d) for j in range(d)))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> IntVector:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def column(self, j: int) -> IntVector:
        return self.entries[j :: self.cols]

    def row_list(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def replace_column(self, j: int, values: Sequence[int]) -> IntMatrix:
        if len(values) != self.rows:
            raise ValueError("replacement column has the wrong length")
        es = list(self.entries)
        for i, x in enumerate(values):
            es[i * self.cols + j] = x
        return IntMatrix(self.rows, self.cols, tuple(es))

    def minor(self, i: int, j: int) -> IntMatrix:
        es = tuple(
            self.at(r, c)
            for r in range(self.rows)
            if r != i
            for c in range(self.cols)
            if c != j
        )
        return IntMatrix(self.rows - 1, self.cols - 1, es)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError("inner dimensions do not match")
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                c = other.column(j)
                out.append(sum(a * b for a, b in zip(r, c)))
        return IntMatrix(self.rows, other.cols, tuple(out))

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows}x{self.cols}, {self.entries!r})"


def det(matrix: IntMatrix) -> int:
    """Exact determinant by fraction-free elimination with row pivoting.

    Each elimination step divides by the previous pivot; Bareiss guarantees
    that division is exact, so all intermediates stay integers.
    """
    if matrix.rows != matrix.cols:
        raise ValueError(f"determinant needs a square matrix, got {matrix.rows}x{matrix.cols}")
    n = matrix.rows
    a = matrix.row_list()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def adjugate(matrix: IntMatrix) -> IntMatrix:
    """Classical adjugate via cofactor minors; satisfies A adj(A) = det(A) I."""
    if matrix.rows != matrix.cols:
        raise ValueError(f"adjugate needs a square matrix, got {matrix.rows}x{matrix.cols}")
    d = matrix.rows
    if d == 1:
        return IntMatrix.identity(1)
    out = [[0] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            c = det(matrix.minor(i, j))
            if (i + j) % 2:
                c = -c
            out[j][i] = c
    return IntMatrix.from_rows(out)


def mat_vec(matrix: IntMatrix, vector: Sequence[int]) -> IntVector:
    if len(vector) != matrix.cols:
        raise ValueError(
            f"vector length {len(vector)} does not match {matrix.cols} columns"
        )
    return tuple(
        sum(a * b for a, b in zip(matrix.row(i), vector)) for i in range(matrix.rows)
    )


@dataclass(frozen=True)
class RatVector:
    """Integer numerators over one positive denominator, fully reduced."""

    numerators: IntVector
    denominator: int

    def __post_init__(self) -> None:
        if self.denominator < 1:
            raise ValueError("denominator must be positive")
        g = reduce(gcd, self.numerators, self.denominator)
        if g != 1:
            raise ValueError("numerators and denominator must be reduced")

    @classmethod
    def reduced(cls, numerators: Iterable[int], denominator: int) -> RatVector:
        nums = tuple(numerators)
        if denominator == 0:
            raise ValueError("denominator must be nonzero")
        g = reduce(gcd, nums, abs(denominator))
        if denominator < 0:
            g = -g
        return cls(tuple(x // g for x in nums), denominator // g)

    @property
    def is_integral(self) -> bool:
        return self.denominator == 1


def solve_unique(matrix: IntMatrix, rhs: Sequence[int]) -> RatVector:
    """The unique rational solution of a nonsingular square system A X = C.

    The numerators are the column-replacement determinants det(A with column
    j swapped for C), which coincide entry-for-entry with adj(A) C, over the
    common denominator det(A); the result is reduced jointly so the solution
    is integral exactly when the denominator comes out as 1.
    """
    if matrix.rows != matrix.cols:
        raise ValueError(f"solve needs a square matrix, got {matrix.rows}x{matrix.cols}")
    if len(rhs) != matrix.rows:
        raise ValueError(
            f"right-hand side length {len(rhs)} does not match {matrix.rows} rows"
        )
    d0 = det(matrix)
    if d0 == 0:
        raise SingularMatrixError("matrix is singular (det = 0)")
    nums = (det(matrix.replace_column(j, rhs)) for j in range(matrix.cols))
    return RatVector.reduced(nums, d0)
