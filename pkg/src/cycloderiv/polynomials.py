"""Dense integer polynomials with exact arithmetic.

A polynomial is an ascending tuple of arbitrary-precision integer
coefficients: ``(1, -2, 0, 1)`` stands for ``1 - 2x + x^3``. Trailing zero
coefficients are stripped on construction, the zero polynomial is the empty
tuple, and its degree is the ``-inf`` sentinel so it can never be confused
with a degree-0 constant.
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterable

ZERO_POLY_DEGREE = float("-inf")


class Polynomial:
    """An integer polynomial; all arithmetic stays in the integers.

    >>> Polynomial((1, 0, 1))
    Polynomial((1, 0, 1))
    >>> print(Polynomial((1, 0, 1)))
    x^2 + 1
    """

    __slots__ = ("coeffs",)

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> Polynomial:
        if degree < 0:
            raise ValueError(f"monomial degree must be non-negative, got {degree}")
        return cls([0] * degree + [coeff])

    @property
    def degree(self) -> int | float:
        """Index of the leading term; ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else ZERO_POLY_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    @staticmethod
    def _coerce(other: object) -> Polynomial | None:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial((other,))
        return None

    def __add__(self, other: int | Polynomial) -> Polynomial:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return Polynomial(
            a + b for a, b in itertools.zip_longest(self.coeffs, rhs.coeffs, fillvalue=0)
        )

    __radd__ = __add__

    def __sub__(self, other: int | Polynomial) -> Polynomial:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return Polynomial(
            a - b for a, b in itertools.zip_longest(self.coeffs, rhs.coeffs, fillvalue=0)
        )

    def __rsub__(self, other: int | Polynomial) -> Polynomial:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs - self

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __mul__(self, other: int | Polynomial) -> Polynomial:
        if isinstance(other, int):
            return Polynomial(c * other for c in self.coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Polynomial:
        if exponent < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = Polynomial((1,))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __divmod__(self, den: Polynomial) -> tuple[Polynomial, Polynomial]:
        """Quotient and remainder for a monic divisor; exact in the integers.

        Only monic divisors are supported: those are the only divisions the
        cyclotomic recursion and quotient-ring reduction ever need, and they
        keep every intermediate coefficient an integer.
        """
        if not isinstance(den, Polynomial):
            return NotImplemented
        if den.is_zero():
            raise ValueError("division by the zero polynomial")
        if not den.is_monic():
            raise ValueError(
                f"divisor must be monic, got leading coefficient {den.coeffs[-1]}"
            )
        rem = list(self.coeffs)
        dlen = len(den.coeffs)
        if len(rem) < dlen:
            return Polynomial(), self
        quo = [0] * (len(rem) - dlen + 1)
        for i in range(len(quo) - 1, -1, -1):
            c = rem[i + dlen - 1]
            if c:
                quo[i] = c
                for j, dc in enumerate(den.coeffs):
                    rem[i + j] -= c * dc
        return Polynomial(quo), Polynomial(rem[: dlen - 1])

    def __call__(self, value):
        """Evaluate by Horner's rule.

        Works for plain integers, polynomials (composition) and quotient-ring
        elements, since all of those support ``+ int`` and ``* value``.
        """
        result = 0
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                term = "x" if i == 1 else f"x^{i}"
                if mag != 1:
                    term = f"{mag}{term}"
            if parts:
                parts.append(f"{'-' if c < 0 else '+'} {term}")
            else:
                parts.append(f"-{term}" if c < 0 else term)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self.coeffs!r})"


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> Polynomial:
    """The n-th cyclotomic polynomial, monic of degree phi(n).

    Computed by dividing ``x^n - 1`` by the product of the cyclotomic
    polynomials of the proper divisors of n (recursively, memoized). Every
    division is by a monic polynomial and is exact.

    >>> print(cyclotomic_poly(10))
    x^4 - x^3 + x^2 - x + 1
    """
    if n < 1:
        raise ValueError(f"cyclotomic polynomials are indexed by n >= 1, got {n}")
    poly = Polynomial([-1] + [0] * (n - 1) + [1])
    for d in range(1, n):
        if n % d == 0:
            poly, rem = divmod(poly, cyclotomic_poly(d))
            assert rem.is_zero()
    return poly
