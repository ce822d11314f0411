"""Command-line interface.

Subcommands mirror the library surface: phi-poly, matrix, classify, sweep,
verify-theorem, tables, counterexamples. Output goes to stdout by default
(always UTF-8, integers as decimal strings in JSON); ``--output`` writes to a
file instead, and a relative ``--output`` path is resolved against the
``CYCLODERIV_OUTPUT_DIR`` environment variable when that is set.

Exit codes: 0 on success or all-pass, 1 on an assertion-style failure
(prediction mismatch, failed round-trip, a Leibniz failure where a pass was
expected), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from ._version import __version__
from .arith import totient
from .endomorphisms import TwistedDerivation, TwistedPair
from .harness import (
    DEFAULT_DEGREE_CAP,
    counterexample_suite,
    reproduce_tables,
    sweep,
    verify_theorem,
)
from .innerness import MultiplierMatrix, RingForm, classify, predict_det, valuate
from .polynomials import cyclotomic_poly
from .quotient import CyclotomicRing
from .reporting import csv_text, json_text, markdown_table, render, write_text


def _emit(text: str, args: argparse.Namespace) -> None:
    dest = args.output
    if dest is not None and dest != "-":
        path = Path(dest)
        base = os.environ.get("CYCLODERIV_OUTPUT_DIR")
        if base and not path.is_absolute():
            path = Path(base) / path
        dest = path
    write_text(text, dest)


def _render_rows(title: str, columns, rows, fmt: str, payload) -> str:
    if fmt == "json":
        return json_text(payload)
    if fmt == "csv":
        return csv_text(columns, rows)
    lines = [f"# {title}", ""]
    lines.extend(markdown_table(columns, rows))
    return "\n".join(lines) + "\n"


def _cmd_phi_poly(args: argparse.Namespace) -> int:
    poly = cyclotomic_poly(args.n)
    coeffs = [str(c) for c in poly.coeffs]
    payload = {"n": str(args.n), "degree": str(len(coeffs) - 1), "coefficients": coeffs}
    rows = [{"n": str(args.n), "degree": str(len(coeffs) - 1), "coefficients": " ".join(coeffs)}]
    text = _render_rows(
        f"Cyclotomic polynomial, n = {args.n}",
        ("n", "degree", "coefficients"),
        rows,
        args.format,
        payload,
    )
    _emit(text, args)
    return 0


def _prediction_fields(n: int, u: int, v: int, det_abs: int) -> dict:
    form = RingForm.detect(n)
    if form is None:
        return {"e1": None, "e2": None, "m": None, "predicted": None, "match": None}
    val = valuate(form, u, v)
    predicted = predict_det(form, val)
    return {
        "e1": str(val.e1),
        "e2": None if val.e2 is None else str(val.e2),
        "m": str(val.m),
        "predicted": str(predicted),
        "match": det_abs == predicted,
    }


def _cmd_matrix(args: argparse.Namespace) -> int:
    ring = CyclotomicRing(args.n)
    pair = TwistedPair.zeta_powers(ring, args.u, args.v)
    multiplier = MultiplierMatrix(pair)
    pred = _prediction_fields(args.n, args.u, args.v, multiplier.det_abs)
    matrix_rows = [
        [str(x) for x in multiplier.matrix.row(i)] for i in range(ring.degree)
    ]
    payload = {
        "n": str(args.n),
        "u": str(args.u),
        "v": str(args.v),
        "matrix": matrix_rows,
        "det": str(multiplier.det),
        "det_abs": str(multiplier.det_abs),
        **pred,
    }
    rows = [
        {
            "n": str(args.n),
            "u": str(args.u),
            "v": str(args.v),
            "row": str(i),
            "entries": " ".join(r),
            "det": str(multiplier.det),
            "det_abs": str(multiplier.det_abs),
            **pred,
        }
        for i, r in enumerate(matrix_rows)
    ]
    columns = ("n", "u", "v", "row", "entries", "det", "det_abs",
               "e1", "e2", "m", "predicted", "match")
    text = _render_rows(
        f"Multiplier matrix: n = {args.n}, pair ({args.u}, {args.v})",
        columns,
        rows,
        args.format,
        payload,
    )
    _emit(text, args)
    if pred["match"] is False:
        return 1
    return 0


def _parse_coords(text: str, expected: int) -> tuple[int, ...]:
    parts = [p.strip() for p in text.split(",")]
    try:
        coords = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise ValueError(f"invalid coordinate list {text!r}: {exc}") from exc
    if len(coords) != expected:
        raise ValueError(
            f"expected exactly {expected} comma-separated coordinates, got {len(coords)}"
        )
    return coords


def _cmd_classify(args: argparse.Namespace) -> int:
    ring = CyclotomicRing(args.n)
    pair = TwistedPair.zeta_powers(ring, args.u, args.v)
    coords = _parse_coords(args.dzeta, totient(args.n))
    derivation = TwistedDerivation(pair, ring.element(coords))
    verdict = classify(derivation)
    payload = {
        "n": str(args.n),
        "u": str(args.u),
        "v": str(args.v),
        "d_zeta": [str(c) for c in coords],
        "kind": verdict.kind,
        "witness_numerators": [str(x) for x in verdict.witness.numerators],
        "witness_denominator": str(verdict.witness.denominator),
        "det_abs": str(verdict.det_abs),
    }
    rows = [
        {
            "n": str(args.n),
            "u": str(args.u),
            "v": str(args.v),
            "d_zeta": " ".join(str(c) for c in coords),
            "kind": verdict.kind,
            "witness_numerators": " ".join(str(x) for x in verdict.witness.numerators),
            "witness_denominator": str(verdict.witness.denominator),
            "det_abs": str(verdict.det_abs),
        }
    ]
    columns = ("n", "u", "v", "d_zeta", "kind",
               "witness_numerators", "witness_denominator", "det_abs")
    text = _render_rows(
        f"Classification: n = {args.n}, pair ({args.u}, {args.v})",
        columns,
        rows,
        args.format,
        payload,
    )
    _emit(text, args)
    return 0


def _build_form(args: argparse.Namespace) -> RingForm:
    if args.form == "2rp":
        if args.r is None or args.p is None:
            raise ValueError("form 2rp requires --r and --p")
        return RingForm.form_2rp(args.r, args.p)
    if args.p is None or args.k is None:
        raise ValueError("form pk requires --p and --k")
    return RingForm.form_pk(args.p, args.k)


def _cmd_sweep(args: argparse.Namespace) -> int:
    form = _build_form(args)
    report = sweep(form, seed=args.seed, cap=args.cap)
    _emit(render(report, args.format), args)
    return 0 if report.all_ok else 1


def _cmd_verify_theorem(args: argparse.Namespace) -> int:
    verdict = verify_theorem(args.n, args.u, args.v, trials=args.trials, seed=args.seed)
    payload = {
        "n": str(verdict.n),
        "u": str(verdict.u),
        "v": str(verdict.v),
        "trials": str(verdict.trials),
        "passes": str(verdict.passes),
        "seed": str(verdict.seed),
        "all_pass": verdict.all_pass,
    }
    rows = [dict(payload)]
    columns = ("n", "u", "v", "trials", "passes", "seed", "all_pass")
    text = _render_rows(
        f"Derivation construction check: n = {verdict.n}, pair ({verdict.u}, {verdict.v})",
        columns,
        rows,
        args.format,
        payload,
    )
    _emit(text, args)
    return 0 if verdict.all_pass else 1


def _cmd_tables(args: argparse.Namespace) -> int:
    artifact = reproduce_tables(args.n, cap=args.cap)
    _emit(render(artifact, args.format), args)
    return 0


def _cmd_counterexamples(args: argparse.Namespace) -> int:
    cases = counterexample_suite()
    rows = [
        {
            "name": c.name,
            "modulus": c.modulus,
            "sigma": c.sigma,
            "tau": c.tau,
            "d_theta": c.d_theta,
            "expects_derivation": c.expects_derivation,
            "leibniz_ok": c.leibniz_ok,
            "ok": c.ok,
        }
        for c in cases
    ]
    payload = {"cases": rows, "all_ok": all(c.ok for c in cases)}
    columns = ("name", "modulus", "sigma", "tau", "d_theta",
               "expects_derivation", "leibniz_ok", "ok")
    text = _render_rows("Counterexample regressions", columns, rows, args.format, payload)
    _emit(text, args)
    return 0 if all(c.ok for c in cases) else 1


def _add_output_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument(
        "--format", choices=("json", "csv", "markdown"), default="json",
        help="output format (default json)",
    )
    sp.add_argument(
        "--output", default=None, metavar="PATH",
        help="write to PATH instead of stdout ('-' keeps stdout)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycloderiv",
        description="Exact twisted-derivation toolkit for cyclotomic integer rings",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("phi-poly", help="coefficients of the n-th cyclotomic polynomial")
    p.add_argument("n", type=int)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_phi_poly)

    p = sub.add_parser("matrix", help="multiplier matrix and determinant for a pair")
    p.add_argument("n", type=int)
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_matrix)

    p = sub.add_parser("classify", help="inner/outer classification of D(zeta)")
    p.add_argument("n", type=int)
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.add_argument(
        "--dzeta", required=True, metavar="c0,c1,...",
        help="coordinates of D(zeta), ascending powers, exactly phi(n) entries",
    )
    _add_output_flags(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("sweep", help="score the determinant prediction over all pairs")
    p.add_argument("--form", choices=("2rp", "pk"), required=True)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cap", type=int, default=DEFAULT_DEGREE_CAP,
                   help="maximum ring degree (default 64)")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("verify-theorem", help="randomized derivation-construction check")
    p.add_argument("n", type=int)
    p.add_argument("u", type=int)
    p.add_argument("v", type=int)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_verify_theorem)

    p = sub.add_parser("tables", help="per-pair matrices, determinants, solution templates")
    p.add_argument("n", type=int)
    p.add_argument("--cap", type=int, default=DEFAULT_DEGREE_CAP)
    _add_output_flags(p)
    p.set_defaults(func=_cmd_tables)

    p = sub.add_parser("counterexamples", help="regression suite over non-domain rings")
    _add_output_flags(p)
    p.set_defaults(func=_cmd_counterexamples)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
