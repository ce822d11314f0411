"""Power-basis arithmetic in quotient rings Z[x]/(f) with f monic.

Elements are coordinate vectors over the basis ``1, theta, ..., theta^(d-1)``
where ``theta`` is the class of x and d the degree of the modulus. A
precomputed table of the reductions of ``theta^k`` for ``k <= 2d - 2`` lets a
product be reduced with a single table pass instead of repeated division.

All values are immutable after construction and every operation is a pure
function, so rings and elements are safe to share across threads.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from .polynomials import Polynomial, cyclotomic_poly


class QuotientRing:
    __slots__ = ("modulus", "degree", "power_table")

    def __init__(self, modulus: Polynomial) -> None:
        if modulus.is_zero() or not modulus.is_monic():
            raise ValueError(f"ring modulus must be monic, got {modulus}")
        d = len(modulus.coeffs) - 1
        if d < 1:
            raise ValueError("ring modulus must have degree at least 1")
        self.modulus = modulus
        self.degree = d
        # theta^d = -(a_0 + a_1 theta + ... + a_{d-1} theta^{d-1})
        reduction = tuple(-c for c in modulus.coeffs[:d])
        table = [tuple(1 if i == k else 0 for i in range(d)) for k in range(d)]
        for k in range(d, 2 * d - 1):
            prev = table[k - 1]
            lead = prev[d - 1]
            shifted = (0,) + prev[: d - 1]
            table.append(tuple(s + lead * r for s, r in zip(shifted, reduction)))
        self.power_table = tuple(table)

    def element(self, coords: Sequence[int] | Iterable[int]) -> RingElement:
        cs = list(coords)
        if len(cs) > self.degree:
            raise ValueError(
                f"expected at most {self.degree} coordinates, got {len(cs)}"
            )
        cs.extend([0] * (self.degree - len(cs)))
        return RingElement(self, tuple(cs))

    def zero(self) -> RingElement:
        return RingElement(self, (0,) * self.degree)

    def one(self) -> RingElement:
        return self.element((1,))

    def generator(self) -> RingElement:
        """The class of x, i.e. theta itself."""
        return self.reduce_power(1)

    def reduce(self, poly: Polynomial) -> RingElement:
        """Coordinates of ``poly(theta)``; accepts any degree."""
        _, rem = divmod(poly, self.modulus)
        return self.element(rem.coeffs)

    def reduce_power(self, k: int) -> RingElement:
        """Coordinates of ``theta^k`` (table lookup for k <= 2d - 2)."""
        if k < 0:
            raise ValueError(f"power must be non-negative, got {k}")
        if k < len(self.power_table):
            return RingElement(self, self.power_table[k])
        return self.reduce(Polynomial.monomial(k))

    def random_element(self, rng: random.Random) -> RingElement:
        """Element with coordinates drawn uniformly from [-9, 9]."""
        return RingElement(
            self, tuple(rng.randint(-9, 9) for _ in range(self.degree))
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuotientRing):
            return NotImplemented
        return self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash(self.modulus)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.modulus})"


class CyclotomicRing(QuotientRing):
    """Z[zeta] for a primitive n-th root of unity, i.e. Z[x]/(Phi_n)."""

    __slots__ = ("n",)

    def __init__(self, n: int) -> None:
        super().__init__(cyclotomic_poly(n))
        self.n = n

    def zeta(self) -> RingElement:
        return self.generator()

    def __repr__(self) -> str:
        return f"CyclotomicRing({self.n})"


class RingElement:
    """A coordinate vector in the power basis of its ring.

    Supports ``+``, ``-``, ``*`` (including integer scalars, which embed as
    constants) and non-negative ``**``. Mixing elements of different rings
    raises; equality across rings is simply False.
    """

    __slots__ = ("ring", "coords")

    def __init__(self, ring: QuotientRing, coords: tuple[int, ...]) -> None:
        self.ring = ring
        self.coords = coords

    def is_zero(self) -> bool:
        return not any(self.coords)

    def _coerce(self, other: object) -> RingElement | None:
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise ValueError("cannot combine elements of different rings")
            return other
        if isinstance(other, int):
            return self.ring.element((other,))
        return None

    def __add__(self, other: int | RingElement) -> RingElement:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return RingElement(
            self.ring, tuple(a + b for a, b in zip(self.coords, rhs.coords))
        )

    __radd__ = __add__

    def __sub__(self, other: int | RingElement) -> RingElement:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return RingElement(
            self.ring, tuple(a - b for a, b in zip(self.coords, rhs.coords))
        )

    def __rsub__(self, other: int | RingElement) -> RingElement:
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs - self

    def __neg__(self) -> RingElement:
        return RingElement(self.ring, tuple(-c for c in self.coords))

    def __mul__(self, other: int | RingElement) -> RingElement:
        if isinstance(other, int):
            return RingElement(self.ring, tuple(c * other for c in self.coords))
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        d = self.ring.degree
        prod = [0] * (2 * d - 1)
        for i, a in enumerate(self.coords):
            if a:
                for j, b in enumerate(rhs.coords):
                    if b:
                        prod[i + j] += a * b
        table = self.ring.power_table
        out = [0] * d
        for k, c in enumerate(prod):
            if c:
                row = table[k]
                for i in range(d):
                    out[i] += c * row[i]
        return RingElement(self.ring, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> RingElement:
        if exponent < 0:
            raise ValueError("negative powers are not defined in the quotient ring")
        result = self.ring.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingElement):
            return NotImplemented
        return self.ring == other.ring and self.coords == other.coords

    def __hash__(self) -> int:
        return hash((self.ring, self.coords))

    def __repr__(self) -> str:
        return f"RingElement({self.coords!r})"
