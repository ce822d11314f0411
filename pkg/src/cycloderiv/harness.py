"""Batch drivers: pair sweeps, randomized verification, regressions, tables.

A sweep walks every unordered pair of unit exponents of a ring, builds the
multiplier matrix, compares ``|det|`` against the prediction for the ring's
form, and runs one seeded inner round-trip per pair (draw an integral beta,
rebuild the derivation it defines, confirm classification recovers beta
exactly). Reports are plain frozen dataclasses; rendering lives in
``reporting``. Identical (form, seed, version) inputs produce identical
reports; the measured elapsed time is kept on the object but never
serialized, so emitted bytes stay reproducible.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations

from ._version import __version__
from .arith import units
from .endomorphisms import Endomorphism, TwistedDerivation, TwistedPair, leibniz_check
from .innerness import (
    Classification,
    MultiplierMatrix,
    RingForm,
    classify,
    predict_det,
    valuate,
)
from .intlinalg import IntMatrix, RatVector, adjugate
from .polynomials import Polynomial
from .quotient import CyclotomicRing, QuotientRing, RingElement

DEFAULT_DEGREE_CAP = 64


@dataclass(frozen=True)
class PairRecord:
    u: int
    v: int
    e1: int
    e2: int | None
    m: int
    det_abs: int
    predicted: int
    match: bool
    roundtrip: bool


@dataclass(frozen=True)
class SweepReport:
    form: RingForm
    records: tuple[PairRecord, ...]
    seed: int
    version: str
    elapsed: float = 0.0  # informational only; excluded from serialization

    @property
    def n(self) -> int:
        return self.form.n

    @property
    def matches(self) -> int:
        return sum(1 for r in self.records if r.match)

    @property
    def all_ok(self) -> bool:
        return all(r.match and r.roundtrip for r in self.records)


def _inner_roundtrip(
    ring: CyclotomicRing,
    pair: TwistedPair,
    multiplier: MultiplierMatrix,
    beta: RingElement,
) -> bool:
    d_theta = beta * pair.theta_difference()
    verdict: Classification = classify(TwistedDerivation(pair, d_theta), multiplier)
    return (
        verdict.is_inner
        and verdict.witness.numerators == beta.coords
        and verdict.witness.denominator == 1
    )


def sweep(form: RingForm, seed: int = 0, cap: int = DEFAULT_DEGREE_CAP) -> SweepReport:
    """Score the determinant prediction over all unordered pairs of a ring."""
    started = time.perf_counter()
    n = form.n
    ring = CyclotomicRing(n)
    if ring.degree < 2:
        raise ValueError(f"n = {n} is degenerate: fewer than two unit exponents")
    if ring.degree > cap:
        raise ValueError(
            f"ring degree {ring.degree} exceeds the cap {cap}; raise the cap to proceed"
        )
    rng = random.Random(seed)
    records = []
    for u, v in combinations(units(n), 2):
        pair = TwistedPair.zeta_powers(ring, u, v)
        multiplier = MultiplierMatrix(pair)
        valuation = valuate(form, u, v)
        predicted = predict_det(form, valuation)
        det_abs = multiplier.det_abs
        beta = ring.random_element(rng)
        records.append(
            PairRecord(
                u=u,
                v=v,
                e1=valuation.e1,
                e2=valuation.e2,
                m=valuation.m,
                det_abs=det_abs,
                predicted=predicted,
                match=det_abs == predicted,
                roundtrip=_inner_roundtrip(ring, pair, multiplier, beta),
            )
        )
    elapsed = time.perf_counter() - started
    return SweepReport(
        form=form,
        records=tuple(records),
        seed=seed,
        version=__version__,
        elapsed=elapsed,
    )


@dataclass(frozen=True)
class TheoremVerdict:
    n: int
    u: int
    v: int
    trials: int
    passes: int
    seed: int

    @property
    def all_pass(self) -> bool:
        return self.passes == self.trials


def verify_theorem(n: int, u: int, v: int, trials: int = 100, seed: int = 0) -> TheoremVerdict:
    """Leibniz-check the power-formula extension for random D(theta) draws.

    Over a cyclotomic ring every draw must pass; the expected verdict is
    trials/trials.
    """
    if trials < 1:
        raise ValueError(f"trials must be at least 1, got {trials}")
    ring = CyclotomicRing(n)
    pair = TwistedPair.zeta_powers(ring, u, v)
    rng = random.Random(seed)
    passes = 0
    for _ in range(trials):
        derivation = TwistedDerivation(pair, ring.random_element(rng))
        if leibniz_check(derivation).ok:
            passes += 1
    return TheoremVerdict(n=n, u=u, v=v, trials=trials, passes=passes, seed=seed)


@dataclass(frozen=True)
class CounterexampleCase:
    """One regression case: a power-formula extension and its expected verdict."""

    name: str
    modulus: str
    sigma: str
    tau: str
    d_theta: str
    expects_derivation: bool
    leibniz_ok: bool
    failing_pair: tuple[int, int] | None

    @property
    def ok(self) -> bool:
        return self.leibniz_ok == self.expects_derivation


def _run_case(
    name: str,
    pair: TwistedPair,
    d_theta: RingElement,
    expects_derivation: bool,
    sigma_desc: str,
    tau_desc: str,
) -> CounterexampleCase:
    report = leibniz_check(TwistedDerivation(pair, d_theta))
    return CounterexampleCase(
        name=name,
        modulus=str(pair.ring.modulus),
        sigma=sigma_desc,
        tau=tau_desc,
        d_theta=str(d_theta.coords),
        expects_derivation=expects_derivation,
        leibniz_ok=report.ok,
        failing_pair=report.indices,
    )


def counterexample_suite() -> tuple[CounterexampleCase, ...]:
    """Extensions over non-domains that fail the product rule, plus controls.

    Two families with zero divisors: truncated rings Z[x]/(x^r) where the
    second map rescales the nilpotent generator, and Z[x]/(x^6 - 1) with the
    squaring twist. In both, the power-formula extension of a well-chosen
    D(theta) is not a derivation; the zero map always is, which pins the
    failure on the construction rather than the ring.
    """
    cases = []
    for r in (2, 3, 4):
        for m in (2, 3):
            ring = QuotientRing(Polynomial.monomial(r))
            theta = ring.generator()
            pair = TwistedPair(
                Endomorphism(ring, theta), Endomorphism(ring, m * theta)
            )
            cases.append(
                _run_case(
                    f"truncated-x^{r}-scale-{m}",
                    pair,
                    ring.one(),
                    expects_derivation=False,
                    sigma_desc="theta -> theta",
                    tau_desc=f"theta -> {m}*theta",
                )
            )
    control_ring = QuotientRing(Polynomial.monomial(3))
    control_theta = control_ring.generator()
    control_pair = TwistedPair(
        Endomorphism(control_ring, control_theta),
        Endomorphism(control_ring, 2 * control_theta),
    )
    cases.append(
        _run_case(
            "truncated-x^3-scale-2-zero-map",
            control_pair,
            control_ring.zero(),
            expects_derivation=True,
            sigma_desc="theta -> theta",
            tau_desc="theta -> 2*theta",
        )
    )
    ring6 = QuotientRing(Polynomial((-1, 0, 0, 0, 0, 0, 1)))
    pair6 = TwistedPair(
        Endomorphism(ring6, ring6.generator()),
        Endomorphism(ring6, ring6.reduce_power(2)),
    )
    cases.append(
        _run_case(
            "sixth-roots-square-twist",
            pair6,
            ring6.generator(),
            expects_derivation=False,
            sigma_desc="x -> x",
            tau_desc="x -> x^2",
        )
    )
    return tuple(cases)


@dataclass(frozen=True)
class TableBlock:
    u: int
    v: int
    matrix: IntMatrix
    det: int
    solution_rows: tuple[RatVector, ...]


@dataclass(frozen=True)
class TableArtifact:
    n: int
    blocks: tuple[TableBlock, ...]
    version: str


def reproduce_tables(n: int, cap: int = DEFAULT_DEGREE_CAP) -> TableArtifact:
    """Per-pair multiplier matrix, determinant, and exact solution template.

    Solution row i gives the coefficients of ``c_0 .. c_{d-1}`` over a
    positive denominator such that row . C is the i-th coordinate of the
    unique solution of ``A X = C``; each row is the corresponding adjugate
    row over det(A), reduced. Deterministic: no randomness is involved.
    """
    ring = CyclotomicRing(n)
    us = units(n)
    if len(us) < 2:
        raise ValueError(f"n = {n} is unsupported: fewer than two unit exponents")
    if ring.degree > cap:
        raise ValueError(
            f"ring degree {ring.degree} exceeds the cap {cap}; raise the cap to proceed"
        )
    blocks = []
    for u, v in combinations(us, 2):
        pair = TwistedPair.zeta_powers(ring, u, v)
        multiplier = MultiplierMatrix(pair)
        adj = adjugate(multiplier.matrix)
        rows = tuple(
            RatVector.reduced(adj.row(i), multiplier.det) for i in range(ring.degree)
        )
        blocks.append(
            TableBlock(
                u=u,
                v=v,
                matrix=multiplier.matrix,
                det=multiplier.det,
                solution_rows=rows,
            )
        )
    return TableArtifact(n=n, blocks=tuple(blocks), version=__version__)
