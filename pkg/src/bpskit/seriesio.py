"""Reading and writing the line-oriented series file format, plus table
emission.

A series file is human-writable ``key = value`` text; ``#`` starts a
comment and blank lines are ignored::

    kind = local_gw
    w = 3
    coeffs = 3, -45/8, 244/9

``kind`` is one of local_gw, local_bps, relative_gw, relative_bps, euler.
``w`` (tangency, >= 1) is required for the four vector kinds; ``m`` (loop
count, >= 0) is required for euler and forbidden otherwise.  Coefficients
are exact rationals matching ``sign? digits (/ digits)?`` with a nonzero
denominator, and index from d = 1 (from n = 0 for euler).  Rationals never
travel as floats: every identity this package checks is exact and floats
would silently break round trips.

Emission is deterministic (fixed key order, fixed rendering), so
parse -> emit -> parse is the identity on valid files.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .bps import BpsVector, GeometryParams, GwVector, LOCAL, RELATIVE
from .correspondence import CorrespondenceMatrix, IntegralityReport
from .pipeline import PipelineReport
from .quiver import DtTable, EulerSeries

VECTOR_KINDS = ("local_gw", "local_bps", "relative_gw", "relative_bps")
KINDS = VECTOR_KINDS + ("euler",)

_RATIONAL_RE = re.compile(r"[+-]?[0-9]+(?:/[0-9]+)?")


class SeriesFileError(ValueError):
    """Malformed series file; the message carries line/field context."""


def parse_rational(text: str) -> Fraction:
    """Parse 'p' or 'p/q' exactly; zero denominators are rejected."""
    token = text.strip()
    if not _RATIONAL_RE.fullmatch(token):
        raise SeriesFileError(f"malformed rational {token!r}")
    if "/" in token:
        num, den = token.split("/")
        if int(den) == 0:
            raise SeriesFileError(f"zero denominator in {token!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(token))


def format_rational(x) -> str:
    """Render 'p/q', omitting '/q' when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _parse_fields(text: str) -> dict[str, tuple[int, str]]:
    """Split key = value lines; returns key -> (line number, raw value)."""
    fields: dict[str, tuple[int, str]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise SeriesFileError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, value = line.split("=", 1)
        key = key.strip()
        if key in fields:
            raise SeriesFileError(f"line {lineno}: duplicate field {key!r}")
        fields[key] = (lineno, value.strip())
    return fields


def _parse_int_field(fields, name: str, minimum: int) -> int:
    lineno, raw = fields.pop(name)
    if not re.fullmatch(r"[+-]?[0-9]+", raw) or int(raw) < minimum:
        raise SeriesFileError(
            f"line {lineno}: field {name!r} must be an integer >= {minimum}, got {raw!r}"
        )
    return int(raw)


def parse_series_text(text: str):
    """Parse series file text into a GwVector, BpsVector, or EulerSeries."""
    fields = _parse_fields(text)
    if "kind" not in fields:
        raise SeriesFileError("missing field 'kind'")
    kind_line, kind = fields.pop("kind")
    if kind not in KINDS:
        raise SeriesFileError(
            f"line {kind_line}: unknown kind {kind!r}; expected one of {', '.join(KINDS)}"
        )

    if "coeffs" not in fields:
        raise SeriesFileError("missing field 'coeffs'")
    coeffs_line, coeffs_raw = fields.pop("coeffs")
    tokens = [tok.strip() for tok in coeffs_raw.split(",")] if coeffs_raw else []
    if not tokens or any(not tok for tok in tokens):
        raise SeriesFileError(f"line {coeffs_line}: coeffs needs comma-separated values")
    try:
        values = [parse_rational(tok) for tok in tokens]
    except SeriesFileError as exc:
        raise SeriesFileError(f"line {coeffs_line}: {exc}") from None

    if kind == "euler":
        if "w" in fields:
            raise SeriesFileError(f"line {fields['w'][0]}: field 'w' is not allowed for kind euler")
        if "m" not in fields:
            raise SeriesFileError("missing field 'm' (required for kind euler)")
        m = _parse_int_field(fields, "m", 0)
        _reject_unknown(fields)
        for i, v in enumerate(values):
            if v.denominator != 1:
                raise SeriesFileError(
                    f"line {coeffs_line}: euler coefficient {i} must be an integer, got {format_rational(v)}"
                )
        if values[0] != 1:
            raise SeriesFileError(f"line {coeffs_line}: euler series must start with 1")
        return EulerSeries(m, tuple(int(v) for v in values))

    if "m" in fields:
        raise SeriesFileError(f"line {fields['m'][0]}: field 'm' is only allowed for kind euler")
    if "w" not in fields:
        raise SeriesFileError(f"missing field 'w' (required for kind {kind})")
    w = _parse_int_field(fields, "w", 1)
    _reject_unknown(fields)
    geometry = GeometryParams(w)
    role = LOCAL if kind.startswith("local") else RELATIVE
    cls = GwVector if kind.endswith("_gw") else BpsVector
    return cls(role, geometry, tuple(values))


def _reject_unknown(fields: dict) -> None:
    if fields:
        name = next(iter(fields))
        raise SeriesFileError(f"line {fields[name][0]}: unknown field {name!r}")


def parse_series_file(path):
    """Parse a series file from disk."""
    with open(path, "r", encoding="utf-8") as handle:
        text = handle.read()
    return parse_series_text(text)


def file_kind(obj) -> str:
    """The series-file kind string for a vector or Euler series."""
    if isinstance(obj, EulerSeries):
        return "euler"
    if isinstance(obj, GwVector):
        return f"{obj.kind}_gw"
    if isinstance(obj, BpsVector):
        return f"{obj.kind}_bps"
    raise TypeError(f"no series-file kind for {type(obj).__name__}")


def _coeff_line(values) -> str:
    return ", ".join(format_rational(v) for v in values)


def emit_series(obj) -> str:
    """Structured text for a vector or Euler series; round-trips exactly."""
    kind = file_kind(obj)
    if kind == "euler":
        lines = [f"kind = euler", f"m = {obj.m}", f"coeffs = {_coeff_line(obj.chi)}"]
    else:
        lines = [
            f"kind = {kind}",
            f"w = {obj.geometry.w}",
            f"coeffs = {_coeff_line(obj.entries)}",
        ]
    return "\n".join(lines) + "\n"


def emit_table(data, fmt: str = "structured", label: str | None = None, meta=None) -> str:
    """Deterministic text for any of the package's tabular values.

    ``fmt`` is 'structured' (key = value lines, series files re-parseable)
    or 'csv' (one header row, comma-separated).  ``label`` and ``meta``
    override the kind line and header fields for plain matrices (nested
    sequences).
    """
    if fmt not in ("structured", "csv"):
        raise ValueError(f"format must be 'structured' or 'csv', got {fmt!r}")
    if isinstance(data, DtTable):
        return _emit_dt_table(data, fmt)
    if isinstance(data, CorrespondenceMatrix):
        return _emit_matrix(
            data.rows, fmt, label or "correspondence_matrix", [("w", data.w), ("n", data.size)]
        )
    if isinstance(data, (GwVector, BpsVector, EulerSeries)):
        if fmt == "structured":
            return emit_series(data)
        if isinstance(data, EulerSeries):
            header = [f"n={i}" for i in range(len(data.chi))]
            values = data.chi
        else:
            header = [f"d={d}" for d in range(1, len(data.entries) + 1)]
            values = data.entries
        return _csv([header, [format_rational(v) for v in values]])
    if isinstance(data, IntegralityReport):
        return _emit_integrality(data, fmt)
    if isinstance(data, PipelineReport):
        return _emit_pipeline(data, fmt)
    if isinstance(data, Sequence) and data and isinstance(data[0], Sequence):
        return _emit_matrix(data, fmt, label or "matrix", meta or [("n", len(data))])
    raise TypeError(f"emit_table cannot render {type(data).__name__}")


def _csv(rows) -> str:
    return "\n".join(",".join(str(c) for c in row) for row in rows) + "\n"


def _emit_dt_table(table: DtTable, fmt: str) -> str:
    if fmt == "csv":
        rows = [["m"] + [f"n={n}" for n in range(1, table.n_max + 1)]]
        for m in range(table.m_max + 1):
            rows.append([m] + table.row(m))
        return _csv(rows)
    lines = [
        "kind = dt_table",
        f"m_max = {table.m_max}",
        f"n_max = {table.n_max}",
    ]
    for m in range(table.m_max + 1):
        lines.append(f"row_m{m} = " + ", ".join(str(v) for v in table.row(m)))
    return "\n".join(lines) + "\n"


def _emit_matrix(rows, fmt: str, label: str, meta) -> str:
    if fmt == "csv":
        out = [["s"] + [f"t={t}" for t in range(1, len(rows) + 1)]]
        for s, row in enumerate(rows, start=1):
            out.append([s] + list(row))
        return _csv(out)
    lines = [f"kind = {label}"] + [f"{k} = {v}" for k, v in meta]
    for s, row in enumerate(rows, start=1):
        lines.append(f"row_{s} = " + ", ".join(str(v) for v in row))
    return "\n".join(lines) + "\n"


def _emit_integrality(report: IntegralityReport, fmt: str) -> str:
    if fmt == "csv":
        return _csv([["index"]] + [[i] for i in report.nonintegral_indices])
    indices_line = "nonintegral_indices ="
    if report.nonintegral_indices:
        indices_line += " " + ", ".join(str(i) for i in report.nonintegral_indices)
    verdict = "pass" if report.passed else "fail"
    return f"kind = integrality_report\nverdict = {verdict}\n{indices_line}\n"


def _emit_pipeline(report: PipelineReport, fmt: str) -> str:
    if fmt == "csv":
        rows = [["d", "local_gw", "local_bps", "relative_bps", "relative_gw"]]
        for d in range(1, len(report.local_gw.entries) + 1):
            rows.append(
                [d]
                + [
                    format_rational(vec.entries[d - 1])
                    for vec in (
                        report.local_gw,
                        report.local_bps,
                        report.relative_bps,
                        report.relative_gw,
                    )
                ]
            )
        return _csv(rows)
    lines = [
        "kind = pipeline_report",
        f"w = {report.local_gw.geometry.w}",
        f"primitive = {'true' if report.local_gw.geometry.primitive else 'false'}",
        f"local_gw = {_coeff_line(report.local_gw.entries)}",
        f"local_bps = {_coeff_line(report.local_bps.entries)}",
        f"relative_bps = {_coeff_line(report.relative_bps.entries)}",
        f"relative_gw = {_coeff_line(report.relative_gw.entries)}",
        f"local_bps_integrality = {'pass' if report.local_integrality.passed else 'fail'}",
        f"relative_bps_integrality = {'pass' if report.relative_integrality.passed else 'fail'}",
    ]
    return "\n".join(lines) + "\n"
