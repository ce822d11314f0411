"""Deterministic rendering of reports to JSON, CSV and Markdown.

Every integer is serialized as a decimal string so downstream consumers never
face 64-bit overflow; booleans are JSON booleans (the strings "true"/"false"
in CSV and Markdown). The same report rendered twice yields identical bytes.

Sweep JSON schema:

    {"ring": {"n", "form", "params"},
     "pairs": [{"u", "v", "e1", "e2", "m", "det_abs", "predicted",
                "match", "roundtrip"}],
     "summary": {"pairs", "matches", "seed", "version"}}

``e2`` is null for prime-power rings. CSV carries the same pair columns, one
row per pair; Markdown renders the pairs as a table plus a summary line.
"""

from __future__ import annotations

import csv
import io
import json
import sys
from pathlib import Path

from .harness import SweepReport, TableArtifact

FORMATS = ("json", "csv", "markdown")

SWEEP_COLUMNS = (
    "u", "v", "e1", "e2", "m", "det_abs", "predicted", "match", "roundtrip",
)


def json_text(payload) -> str:
    return json.dumps(payload, indent=2) + "\n"


def csv_text(columns, rows) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _csv_cell(row.get(k)) for k in columns})
    return buf.getvalue()


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def markdown_table(columns, rows) -> list[str]:
    lines = [
        "| " + " | ".join(columns) + " |",
        "|" + "|".join(" --- " for _ in columns) + "|",
    ]
    for row in rows:
        lines.append("| " + " | ".join(_csv_cell(row.get(k)) for k in columns) + " |")
    return lines


def _sweep_rows(report: SweepReport) -> list[dict]:
    rows = []
    for rec in report.records:
        rows.append(
            {
                "u": str(rec.u),
                "v": str(rec.v),
                "e1": str(rec.e1),
                "e2": None if rec.e2 is None else str(rec.e2),
                "m": str(rec.m),
                "det_abs": str(rec.det_abs),
                "predicted": str(rec.predicted),
                "match": rec.match,
                "roundtrip": rec.roundtrip,
            }
        )
    return rows


def sweep_to_json(report: SweepReport) -> str:
    payload = {
        "ring": {
            "n": str(report.form.n),
            "form": report.form.kind,
            "params": {k: str(v) for k, v in report.form.params().items()},
        },
        "pairs": _sweep_rows(report),
        "summary": {
            "pairs": str(len(report.records)),
            "matches": str(report.matches),
            "seed": str(report.seed),
            "version": report.version,
        },
    }
    return json_text(payload)


def sweep_to_csv(report: SweepReport) -> str:
    return csv_text(SWEEP_COLUMNS, _sweep_rows(report))


def sweep_to_markdown(report: SweepReport) -> str:
    lines = [f"# Sweep: n = {report.form.n}, form {report.form.label()}", ""]
    lines.extend(markdown_table(SWEEP_COLUMNS, _sweep_rows(report)))
    lines.append("")
    lines.append(
        f"{len(report.records)} pairs, {report.matches} matches, "
        f"seed {report.seed}, version {report.version}"
    )
    return "\n".join(lines) + "\n"


TABLE_COLUMNS = ("n", "u", "v", "det", "det_abs", "matrix", "solution")


def _matrix_rows_str(block) -> list[list[str]]:
    return [[str(x) for x in block.matrix.row(i)] for i in range(block.matrix.rows)]


def _solution_str(block) -> str:
    parts = []
    for row in block.solution_rows:
        parts.append(" ".join(str(x) for x in row.numerators) + f" / {row.denominator}")
    return " | ".join(parts)


def tables_to_json(artifact: TableArtifact) -> str:
    payload = {
        "n": str(artifact.n),
        "version": artifact.version,
        "blocks": [
            {
                "u": str(b.u),
                "v": str(b.v),
                "det": str(b.det),
                "det_abs": str(abs(b.det)),
                "matrix": _matrix_rows_str(b),
                "solution": [
                    {
                        "coeffs": [str(x) for x in row.numerators],
                        "denominator": str(row.denominator),
                    }
                    for row in b.solution_rows
                ],
            }
            for b in artifact.blocks
        ],
    }
    return json_text(payload)


def tables_to_csv(artifact: TableArtifact) -> str:
    rows = []
    for b in artifact.blocks:
        rows.append(
            {
                "n": str(artifact.n),
                "u": str(b.u),
                "v": str(b.v),
                "det": str(b.det),
                "det_abs": str(abs(b.det)),
                "matrix": " ; ".join(" ".join(r) for r in _matrix_rows_str(b)),
                "solution": _solution_str(b),
            }
        )
    return csv_text(TABLE_COLUMNS, rows)


def tables_to_markdown(artifact: TableArtifact) -> str:
    lines = [f"# Multiplier tables: n = {artifact.n}", ""]
    for b in artifact.blocks:
        lines.append(f"## pair ({b.u}, {b.v})")
        lines.append("")
        lines.append(f"det = {b.det} (|det| = {abs(b.det)})")
        lines.append("")
        lines.append("matrix rows:")
        for r in _matrix_rows_str(b):
            lines.append("    " + " ".join(f"{x:>4}" for x in r))
        lines.append("")
        lines.append("solution template (coefficients of c_0..c_{d-1} over denominator):")
        for row in b.solution_rows:
            nums = " ".join(f"{x:>4}" for x in (str(v) for v in row.numerators))
            lines.append(f"    ( {nums} ) / {row.denominator}")
        lines.append("")
    lines.append(f"version {artifact.version}")
    return "\n".join(lines) + "\n"


def render(artifact, fmt: str) -> str:
    """Render a SweepReport or TableArtifact in the requested format."""
    if fmt not in FORMATS:
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    if isinstance(artifact, SweepReport):
        return {
            "json": sweep_to_json,
            "csv": sweep_to_csv,
            "markdown": sweep_to_markdown,
        }[fmt](artifact)
    if isinstance(artifact, TableArtifact):
        return {
            "json": tables_to_json,
            "csv": tables_to_csv,
            "markdown": tables_to_markdown,
        }[fmt](artifact)
    raise TypeError(f"cannot render objects of type {type(artifact).__name__}")


def write_text(text: str, destination: str | Path | None) -> None:
    """Write to a file, or to stdout when destination is None or '-'."""
    if destination is None or destination == "-":
        sys.stdout.write(text)
        return
    path = Path(destination)
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as exc:
        raise OSError(f"failed writing report to {path}: {exc}") from exc


def write_report(artifact, fmt: str, destination: str | Path | None) -> None:
    write_text(render(artifact, fmt), destination)
