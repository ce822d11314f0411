"""Small integer helpers: primality, totients, unit groups, multiplicities.

Everything here runs on desk-sized inputs (a few thousand at most), so plain
trial division is the right tool.
"""

from __future__ import annotations

from math import gcd, isqrt


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f <= isqrt(n):
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` as an ordered ``{prime: exponent}`` map."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}; expected a positive integer")
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def totient(n: int) -> int:
    """Euler's phi via the factorization formula."""
    if n < 1:
        raise ValueError(f"totient undefined for {n}")
    result = n
    for p in factorize(n):
        result -= result // p
    return result


def units(n: int) -> tuple[int, ...]:
    """Exponents 1 <= x < n coprime to n, ascending."""
    return tuple(x for x in range(1, n) if gcd(x, n) == 1)


def multiplicity(base: int, value: int) -> tuple[int, int]:
    """Split ``value = base**e * cofactor`` with the cofactor coprime to base.

    Returns ``(e, cofactor)``; ``value`` must be nonzero and ``base >= 2``.
    """
    if base < 2:
        raise ValueError(f"multiplicity base must be at least 2, got {base}")
    if value == 0:
        raise ValueError("multiplicity of zero is undefined")
    e = 0
    while value % base == 0:
        value //= base
        e += 1
    return e, value
