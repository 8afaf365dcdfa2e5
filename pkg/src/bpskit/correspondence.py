"""The change of basis between local and relative BPS vectors.

The correspondence matrix C has entries C_{st} = DT_{s/t} of the quiver
with tw - 1 loops when t divides s, and 0 otherwise.  It is unit lower
triangular with divisor-support sparsity, so it has determinant 1 and an
exact integer inverse.  The transform solves

    C . [relative BPS]_d = [(-1)^(dw+1) dw (local BPS)_d]_d

by forward substitution, exactly; the reverse direction multiplies by C
and unscales.  Because both C and its inverse are integer matrices, an
integer local BPS vector always yields an integer relative BPS vector and
vice versa.

The matrix is infinite; materializing the N x N corner is exact for the
first N outputs because each row has finitely many nonzero entries, all
within the corner.

Note: on the bundled degree-3 sample, chaining these transforms with the
GW/BPS dictionaries makes the relative GW invariants equal
(-1)^(dw+1) dw times the local GW invariants.  That identity is only an
observation on the sample; it is checked there as an experimental
cross-check and asserted nowhere else.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bps import RELATIVE, LOCAL, BpsVector, GeometryParams
from .quiver import dt_closed


@dataclass(frozen=True)
class CorrespondenceMatrix:
    """N x N corner of the correspondence matrix for tangency w."""

    w: int
    size: int
    rows: tuple[tuple[int, ...], ...]

    def __getitem__(self, st: tuple[int, int]) -> int:
        """Entry (s, t), 1-indexed."""
        s, t = st
        return self.rows[s - 1][t - 1]


@dataclass(frozen=True)
class IntegralityReport:
    """Verdict of an entrywise integrality check, with failing 1-based indices."""

    passed: bool
    nonintegral_indices: tuple[int, ...]


def build_matrix(w: int, size: int) -> CorrespondenceMatrix:
    """Entry (s, t) is dt_closed(tw - 1, s/t) when t | s, else 0."""
    if w < 1 or size < 1:
        raise ValueError("build_matrix needs w >= 1 and size >= 1")
    rows = tuple(
        tuple(
            dt_closed(t * w - 1, s // t) if s % t == 0 else 0
            for t in range(1, size + 1)
        )
        for s in range(1, size + 1)
    )
    return CorrespondenceMatrix(w, size, rows)


def invert_unit_lower_triangular(matrix) -> list[list[int]]:
    """Exact integer inverse of a unit lower triangular matrix.

    Forward substitution column by column; accepts a
    :class:`CorrespondenceMatrix` or plain nested sequences.
    """
    rows = getattr(matrix, "rows", matrix)
    n = len(rows)
    for s, row in enumerate(rows):
        if len(row) != n:
            raise ValueError("matrix is not square")
        if row[s] != 1:
            raise ValueError(f"diagonal entry ({s + 1}, {s + 1}) is {row[s]}, not 1")
        if any(row[t] for t in range(s + 1, n)):
            raise ValueError(f"row {s + 1} has entries above the diagonal")
    inv = [[0] * n for _ in range(n)]
    for t in range(n):
        inv[t][t] = 1
        for s in range(t + 1, n):
            inv[s][t] = -sum(rows[s][j] * inv[j][t] for j in range(t, s))
    return inv


def _scaling_factor(d: int, w: int) -> int:
    return (1 if (d * w + 1) % 2 == 0 else -1) * d * w


def _resolve_w(vec: BpsVector, w: int | None) -> int:
    if w is None:
        return vec.geometry.w
    if w != vec.geometry.w:
        raise ValueError(
            f"explicit w = {w} disagrees with the vector's geometry w = {vec.geometry.w}"
        )
    return w


def local_scaling_vector(n_local: BpsVector, w: int | None = None) -> list[Fraction]:
    """Entry d of the right-hand side: (-1)^(dw+1) d w n_d."""
    if n_local.kind != LOCAL:
        raise ValueError(f"local_scaling_vector needs a local vector, got {n_local.kind!r}")
    w = _resolve_w(n_local, w)
    return [
        _scaling_factor(d, w) * x for d, x in enumerate(n_local.entries, start=1)
    ]


def local_to_relative_bps(
    n_local: BpsVector, w: int | None = None, size: int | None = None
) -> BpsVector:
    """Solve C . x = local scaling vector for the relative BPS vector x.

    Forward substitution against the divisor-sparse rows of C; entry d of
    the result depends only on entries 1..d of the input.
    """
    if n_local.kind != LOCAL:
        raise ValueError(f"local_to_relative_bps needs a local vector, got {n_local.kind!r}")
    if not n_local.entries:
        raise ValueError("local_to_relative_bps: empty input")
    w = _resolve_w(n_local, w)
    if size is None:
        size = len(n_local)
    if size > len(n_local):
        raise ValueError(f"need {size} input entries, have {len(n_local)}")
    rhs = local_scaling_vector(n_local.truncated(size))
    matrix = build_matrix(w, size)
    out: list[Fraction] = []
    for s in range(1, size + 1):
        acc = rhs[s - 1]
        row = matrix.rows[s - 1]
        for t in range(1, s):
            if row[t - 1]:
                acc -= row[t - 1] * out[t - 1]
        out.append(acc)  # diagonal entry is 1
    return BpsVector(RELATIVE, GeometryParams(w, n_local.geometry.primitive), tuple(out))


def relative_to_local_bps(
    n_rel: BpsVector, w: int | None = None, size: int | None = None
) -> BpsVector:
    """Multiply by C and unscale: n_d = (-1)^(dw+1) (C . n_rel)_d / (dw)."""
    if n_rel.kind != RELATIVE:
        raise ValueError(f"relative_to_local_bps needs a relative vector, got {n_rel.kind!r}")
    if not n_rel.entries:
        raise ValueError("relative_to_local_bps: empty input")
    w = _resolve_w(n_rel, w)
    if size is None:
        size = len(n_rel)
    if size > len(n_rel):
        raise ValueError(f"need {size} input entries, have {len(n_rel)}")
    matrix = build_matrix(w, size)
    out = []
    for s in range(1, size + 1):
        row = matrix.rows[s - 1]
        acc = sum(
            (row[t - 1] * n_rel.entries[t - 1] for t in range(1, s + 1) if row[t - 1]),
            Fraction(0),
        )
        out.append(acc / _scaling_factor(s, w))
    return BpsVector(LOCAL, GeometryParams(w, n_rel.geometry.primitive), tuple(out))


def integrality_report(v) -> IntegralityReport:
    """Entrywise integrality check; accepts a vector object or raw entries."""
    entries = getattr(v, "entries", v)
    bad = tuple(
        d for d, x in enumerate(entries, start=1) if Fraction(x).denominator != 1
    )
    return IntegralityReport(not bad, bad)
