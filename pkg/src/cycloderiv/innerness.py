"""Multiplier matrices, inner/outer classification, and determinant predictions.

A twisted derivation D on Z[zeta] is inner exactly when some beta in the ring
satisfies ``D(zeta) = beta * (tau(zeta) - sigma(zeta))``. In coordinates that
is the square integer system ``A X = C``: column j of the multiplier matrix A
holds ``theta^j * (tau(theta) - sigma(theta))``, X the coordinates of beta,
and C those of D(zeta). Because the cyclotomic modulus is irreducible, A is
nonsingular and the unique rational solution decides the question: an
integral solution is the inner witness, a fractional one certifies an outer
derivation (there is no separate "outer" computation to disagree with).

For the two ring families that carry determinant predictions the absolute
determinant of A is conjectured to depend only on the multiplicities of 2
and p (or of p alone) in ``v - u``:

* n = 2^r p (p an odd prime):  2^(2^e1 (p-1)) when 1 <= e1 <= r-1 and
  e2 >= 1;  p^(2^(r-1)) when e1 >= r and e2 = 0;  1 otherwise.
* n = p^k (k >= 2):  p^(p^e1).

Both use ``|v - u| = 2^e1 p^e2 m`` (resp. ``p^e1 m``) with m coprime to the
relevant primes; absolute values make the split independent of pair order.
Determinant signs depend on row-formation order, so every comparison here is
against ``|det|``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd

from .arith import factorize, is_prime, multiplicity
from .endomorphisms import TwistedDerivation, TwistedPair
from .intlinalg import (
    IntMatrix,
    RatVector,
    SingularMatrixError,
    mat_vec,
    solve_unique,
)


class MultiplierMatrix:
    """The matrix of ``beta -> beta * (tau(theta) - sigma(theta))``.

    Column j holds the coordinates of ``theta^j * (tau(theta) - sigma(theta))``
    in the power basis; the determinant is computed once and cached.
    """

    def __init__(self, pair: TwistedPair) -> None:
        ring = pair.ring
        theta = ring.generator()
        col = pair.theta_difference()
        columns = [col.coords]
        for _ in range(ring.degree - 1):
            col = col * theta
            columns.append(col.coords)
        self.pair = pair
        self.matrix = IntMatrix.from_columns(columns)

    @cached_property
    def det(self) -> int:
        from .intlinalg import det as _det

        return _det(self.matrix)

    @property
    def det_abs(self) -> int:
        return abs(self.det)

    def __repr__(self) -> str:
        return f"MultiplierMatrix({self.pair!r})"


@dataclass(frozen=True)
class RingForm:
    """One of the two conductor families with a determinant prediction.

    kind "2rp" is n = 2^r p with r >= 1 and p an odd prime; kind "pk" is
    n = p^k with p prime and k >= 2 (k = 1 carries no prediction here).
    """

    kind: str
    p: int
    r: int | None = None
    k: int | None = None

    def __post_init__(self) -> None:
        if self.kind == "2rp":
            if self.r is None or self.r < 1:
                raise ValueError("form 2rp requires r >= 1")
            if self.k is not None:
                raise ValueError("form 2rp does not take k")
            if self.p == 2 or not is_prime(self.p):
                raise ValueError(f"form 2rp requires an odd prime p, got {self.p}")
        elif self.kind == "pk":
            if self.k is None or self.k < 2:
                raise ValueError("form pk requires k >= 2")
            if self.r is not None:
                raise ValueError("form pk does not take r")
            if not is_prime(self.p):
                raise ValueError(f"form pk requires a prime p, got {self.p}")
        else:
            raise ValueError(f"unknown ring form kind {self.kind!r}")

    @classmethod
    def form_2rp(cls, r: int, p: int) -> RingForm:
        return cls(kind="2rp", p=p, r=r)

    @classmethod
    def form_pk(cls, p: int, k: int) -> RingForm:
        return cls(kind="pk", p=p, k=k)

    @classmethod
    def detect(cls, n: int) -> RingForm | None:
        """Match n against the two families; None when neither applies."""
        if n < 4:
            return None
        fac = factorize(n)
        if len(fac) == 1:
            ((q, e),) = fac.items()
            return cls.form_pk(q, e) if e >= 2 else None
        if len(fac) == 2 and 2 in fac:
            odd = [(q, e) for q, e in fac.items() if q != 2]
            (q, e) = odd[0]
            if e == 1:
                return cls.form_2rp(fac[2], q)
        return None

    @property
    def n(self) -> int:
        if self.kind == "2rp":
            return 2**self.r * self.p
        return self.p**self.k

    def params(self) -> dict[str, int]:
        if self.kind == "2rp":
            return {"r": self.r, "p": self.p}
        return {"p": self.p, "k": self.k}

    def label(self) -> str:
        inner = ", ".join(f"{k} = {v}" for k, v in self.params().items())
        return f"{self.kind}({inner})"


@dataclass(frozen=True)
class Valuation:
    """Multiplicities extracted from |v - u|; e2 only exists for form 2rp."""

    e1: int
    m: int
    e2: int | None = None


def valuate(form: RingForm, u: int, v: int) -> Valuation:
    """Split |v - u| into the prime multiplicities the predictions key on."""
    n = form.n
    for name, x in (("u", u), ("v", v)):
        if not 1 <= x < n or gcd(x, n) != 1:
            raise ValueError(f"{name} = {x} is not a unit modulo {n}")
    if u == v:
        raise ValueError("u and v must differ")
    diff = abs(v - u)
    if form.kind == "2rp":
        e1, rest = multiplicity(2, diff)
        e2, m = multiplicity(form.p, rest)
        return Valuation(e1=e1, m=m, e2=e2)
    e1, m = multiplicity(form.p, diff)
    return Valuation(e1=e1, m=m)


def predict_det(form: RingForm, valuation: Valuation) -> int:
    """Conjectured |det| of the multiplier matrix for the given valuation."""
    if form.kind == "2rp":
        if valuation.e2 is None:
            raise ValueError("form 2rp requires a valuation carrying e2")
        if 1 <= valuation.e1 <= form.r - 1 and valuation.e2 >= 1:
            return 2 ** (2**valuation.e1 * (form.p - 1))
        if valuation.e1 >= form.r and valuation.e2 == 0:
            return form.p ** (2 ** (form.r - 1))
        return 1
    return form.p ** (form.p**valuation.e1)


@dataclass(frozen=True)
class Classification:
    """Inner/outer verdict with the exact witness.

    The witness always satisfies ``A numerators = denominator * C``; the
    derivation is inner exactly when the denominator is 1, in which case the
    numerators are the coordinates of beta.
    """

    kind: str  # "inner" | "outer"
    witness: RatVector
    det_abs: int

    @property
    def is_inner(self) -> bool:
        return self.kind == "inner"


def classify(
    derivation: TwistedDerivation, multiplier: MultiplierMatrix | None = None
) -> Classification:
    """Decide innerness of a derivation by solving the multiplier system.

    A prebuilt ``MultiplierMatrix`` for the same pair may be passed to avoid
    rebuilding it across many classifications.
    """
    pair = derivation.pair
    if multiplier is None:
        multiplier = MultiplierMatrix(pair)
    elif (
        multiplier.pair.ring != pair.ring
        or multiplier.pair.sigma.theta_image != pair.sigma.theta_image
        or multiplier.pair.tau.theta_image != pair.tau.theta_image
    ):
        raise ValueError("multiplier matrix was built for a different pair")
    if multiplier.det == 0:
        # Cannot happen for an irreducible modulus; kept as a guard for
        # hand-built rings.
        raise SingularMatrixError("multiplier matrix is singular (det = 0)")
    c = derivation.d_theta.coords
    witness = solve_unique(multiplier.matrix, c)
    assert mat_vec(multiplier.matrix, witness.numerators) == tuple(
        witness.denominator * x for x in c
    )
    kind = "inner" if witness.is_integral else "outer"
    return Classification(kind=kind, witness=witness, det_abs=multiplier.det_abs)
