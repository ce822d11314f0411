"""Exact-arithmetic toolkit for twisted derivations of cyclotomic integer rings.

Everything runs over arbitrary-precision integers: polynomial and power-basis
arithmetic, endomorphism pairs and the derivations they induce, fraction-free
linear algebra, inner/outer classification with exact witnesses, and batch
sweep drivers with deterministic serialized reports.
"""

from ._version import __version__
from .arith import is_prime, totient, units
from .endomorphisms import (
    Endomorphism,
    LeibnizReport,
    TwistedDerivation,
    TwistedPair,
    leibniz_check,
    sum_powers,
    telescope_check,
)
from .harness import (
    CounterexampleCase,
    PairRecord,
    SweepReport,
    TableArtifact,
    TableBlock,
    TheoremVerdict,
    counterexample_suite,
    reproduce_tables,
    sweep,
    verify_theorem,
)
from .innerness import (
    Classification,
    MultiplierMatrix,
    RingForm,
    Valuation,
    classify,
    predict_det,
    valuate,
)
from .intlinalg import (
    IntMatrix,
    IntVector,
    RatVector,
    SingularMatrixError,
    adjugate,
    det,
    mat_vec,
    solve_unique,
)
from .polynomials import Polynomial, cyclotomic_poly
from .quotient import CyclotomicRing, QuotientRing, RingElement
from .reporting import render, write_report

__all__ = [
    "__version__",
    "is_prime",
    "totient",
    "units",
    "Polynomial",
    "cyclotomic_poly",
    "QuotientRing",
    "CyclotomicRing",
    "RingElement",
    "Endomorphism",
    "TwistedPair",
    "TwistedDerivation",
    "LeibnizReport",
    "sum_powers",
    "leibniz_check",
    "telescope_check",
    "IntMatrix",
    "IntVector",
    "RatVector",
    "SingularMatrixError",
    "det",
    "adjugate",
    "mat_vec",
    "solve_unique",
    "MultiplierMatrix",
    "RingForm",
    "Valuation",
    "valuate",
    "predict_det",
    "Classification",
    "classify",
    "sweep",
    "SweepReport",
    "PairRecord",
    "verify_theorem",
    "TheoremVerdict",
    "counterexample_suite",
    "CounterexampleCase",
    "reproduce_tables",
    "TableArtifact",
    "TableBlock",
    "render",
    "write_report",
]
