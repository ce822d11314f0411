"""Ring endomorphisms fixing Z, twisted pairs, and the maps they induce.

An endomorphism of ``Z[x]/(f)`` that fixes the integers is determined by the
image of the generator, which must itself be a root of f in the ring. A
twisted pair ``(sigma, tau)`` of two such maps with different generator
images induces, for every choice of ``D(theta)``, a Z-linear map ``D`` with
``D(1) = 0`` and

    D(theta^k) = ( sum over s + t = k - 1 of sigma(theta)^s tau(theta)^t ) D(theta)

on the rest of the power basis. Over an integral domain that linear extension
is always a twisted derivation, i.e. it satisfies

    D(a b) = D(a) tau(b) + sigma(a) D(b);

``leibniz_check`` verifies that identity on all basis pairs, which is exactly
where the extension fails in rings with zero divisors.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .quotient import CyclotomicRing, QuotientRing, RingElement


class Endomorphism:
    """A ring endomorphism fixing Z, given by the image of the generator.

    The image is validated at construction: it must be a root of the ring
    modulus, otherwise the map would not be well defined. A failed check
    reports the nonzero residue so the offending input is easy to spot.
    """

    __slots__ = ("ring", "theta_image", "exponent")

    def __init__(
        self,
        ring: QuotientRing,
        theta_image: RingElement,
        exponent: int | None = None,
    ) -> None:
        if theta_image.ring != ring:
            raise ValueError("generator image must live in the target ring")
        residue = ring.modulus(theta_image)
        if not residue.is_zero():
            raise ValueError(
                "generator image is not a root of the ring modulus; "
                f"residue has coordinates {residue.coords}"
            )
        if exponent is not None:
            n = getattr(ring, "n", None)
            if n is None:
                raise ValueError("exponents are only meaningful for cyclotomic rings")
            if not 1 <= exponent < n or gcd(exponent, n) != 1:
                raise ValueError(f"exponent {exponent} is not a unit modulo {n}")
            if theta_image != ring.reduce_power(exponent):
                raise ValueError(
                    f"image does not match the stated exponent {exponent}"
                )
        self.ring = ring
        self.theta_image = theta_image
        self.exponent = exponent

    @classmethod
    def zeta_power(cls, ring: CyclotomicRing, u: int) -> Endomorphism:
        """The endomorphism zeta -> zeta^u of a cyclotomic ring."""
        n = getattr(ring, "n", None)
        if n is None:
            raise ValueError("zeta_power requires a cyclotomic ring")
        if not 1 <= u < n or gcd(u, n) != 1:
            raise ValueError(f"exponent {u} is not a unit modulo {n}")
        return cls(ring, ring.reduce_power(u), exponent=u)

    def __call__(self, x: RingElement) -> RingElement:
        """Apply the map: coordinates of x evaluated at the generator image."""
        if x.ring != self.ring:
            raise ValueError("argument belongs to a different ring")
        result = self.ring.zero()
        for c in reversed(x.coords):
            result = result * self.theta_image + c
        return result

    def __repr__(self) -> str:
        if self.exponent is not None:
            return f"Endomorphism(zeta -> zeta^{self.exponent})"
        return f"Endomorphism(theta -> {self.theta_image.coords!r})"


class TwistedPair:
    """Two endomorphisms of the same ring with different generator images."""

    __slots__ = ("sigma", "tau")

    def __init__(self, sigma: Endomorphism, tau: Endomorphism) -> None:
        if sigma.ring != tau.ring:
            raise ValueError("both endomorphisms must act on the same ring")
        if sigma.theta_image == tau.theta_image:
            raise ValueError("the two endomorphisms must differ on the generator")
        self.sigma = sigma
        self.tau = tau

    @classmethod
    def zeta_powers(cls, ring: CyclotomicRing, u: int, v: int) -> TwistedPair:
        return cls(Endomorphism.zeta_power(ring, u), Endomorphism.zeta_power(ring, v))

    @property
    def ring(self) -> QuotientRing:
        return self.sigma.ring

    def theta_difference(self) -> RingElement:
        """tau(theta) - sigma(theta), the multiplier innerness reduces to."""
        return self.tau.theta_image - self.sigma.theta_image

    def __repr__(self) -> str:
        return f"TwistedPair({self.sigma!r}, {self.tau!r})"


def sum_powers(pair: TwistedPair, k: int) -> RingElement:
    """Sum of ``sigma(theta)^s * tau(theta)^t`` over ``s + t = k - 1``.

    For k = 1 the single (0, 0) term gives the multiplicative identity.
    Accumulated directly from two running power lists; no closed form is
    used because that would require inverting ``sigma(theta) - tau(theta)``,
    which need not be possible inside the ring.
    """
    if k < 1:
        raise ValueError(f"sum_powers requires k >= 1, got {k}")
    ring = pair.ring
    sig = pair.sigma.theta_image
    sig_pows = [ring.one()]
    for _ in range(k - 1):
        sig_pows.append(sig_pows[-1] * sig)
    tau = pair.tau.theta_image
    total = ring.zero()
    tau_pow = ring.one()
    for t in range(k):
        total = total + sig_pows[k - 1 - t] * tau_pow
        if t < k - 1:
            tau_pow = tau_pow * tau
    return total


class TwistedDerivation:
    """The Z-linear extension of a generator image D(theta) under a pair.

    Images on the power basis follow the power formula above; no validation
    happens at construction, so the object can also represent the failed
    extensions that exist over rings with zero divisors (use
    ``leibniz_check`` to tell the two cases apart).
    """

    __slots__ = ("pair", "d_theta", "_basis_images")

    def __init__(self, pair: TwistedPair, d_theta: RingElement) -> None:
        if d_theta.ring != pair.ring:
            raise ValueError("D(theta) must live in the pair's ring")
        self.pair = pair
        self.d_theta = d_theta
        self._basis_images: tuple[RingElement, ...] | None = None

    @property
    def basis_images(self) -> tuple[RingElement, ...]:
        """D on the power basis: index k holds D(theta^k), with D(1) = 0."""
        if self._basis_images is None:
            ring = self.pair.ring
            images = [ring.zero()]
            for k in range(1, ring.degree):
                images.append(sum_powers(self.pair, k) * self.d_theta)
            self._basis_images = tuple(images)
        return self._basis_images

    def __call__(self, x: RingElement) -> RingElement:
        if x.ring != self.pair.ring:
            raise ValueError("argument belongs to a different ring")
        images = self.basis_images
        total = self.pair.ring.zero()
        for k in range(1, len(images)):
            c = x.coords[k]
            if c:
                total = total + c * images[k]
        return total

    def __repr__(self) -> str:
        return f"TwistedDerivation({self.pair!r}, D(theta)={self.d_theta.coords!r})"


@dataclass(frozen=True)
class LeibnizReport:
    """Outcome of the basis-pair product-rule check."""

    ok: bool
    indices: tuple[int, int] | None = None
    lhs: RingElement | None = None
    rhs: RingElement | None = None

    def __bool__(self) -> bool:
        return self.ok


def leibniz_check(derivation: TwistedDerivation) -> LeibnizReport:
    """Check ``D(t^i t^j) = D(t^i) tau(t^j) + sigma(t^i) D(t^j)`` on all basis pairs.

    Checking every ordered pair of basis powers is equivalent to checking the
    product rule on the whole ring, by bilinearity. Returns the first failing
    pair together with both sides, or a passing report.
    """
    pair = derivation.pair
    ring = pair.ring
    d = ring.degree
    sig_pows = [ring.one()]
    tau_pows = [ring.one()]
    for _ in range(d - 1):
        sig_pows.append(sig_pows[-1] * pair.sigma.theta_image)
        tau_pows.append(tau_pows[-1] * pair.tau.theta_image)
    images = derivation.basis_images
    for i in range(d):
        for j in range(d):
            lhs = derivation(ring.reduce_power(i + j))
            rhs = images[i] * tau_pows[j] + sig_pows[i] * images[j]
            if lhs != rhs:
                return LeibnizReport(False, (i, j), lhs, rhs)
    return LeibnizReport(True)


def telescope_check(pair: TwistedPair, k: int) -> bool:
    """Whether the shifted modulus-weighted power sums collapse to zero.

    Evaluates ``sum over i = k .. k + d of a_{i-k} * sum_powers(pair, i)``
    exactly, where the a's are the modulus coefficients (monic, degree d).
    The i = 0 term is an empty sum and contributes nothing. Over an integral
    domain the result is zero for every k >= 0; that vanishing is what makes
    the power-formula extension a derivation.
    """
    if k < 0:
        raise ValueError(f"telescope_check requires k >= 0, got {k}")
    ring = pair.ring
    coeffs = ring.modulus.coeffs
    total = ring.zero()
    for i in range(k, k + len(coeffs)):
        a = coeffs[i - k]
        if a and i >= 1:
            total = total + a * sum_powers(pair, i)
    return total.is_zero()
