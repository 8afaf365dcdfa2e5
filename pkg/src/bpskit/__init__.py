"""Exact-arithmetic toolkit for BPS state counts.

Computes local and relative BPS state counts from Gromov-Witten generating
series, generalized Donaldson-Thomas invariants of loop quivers, and the
unit-lower-triangular integer matrix that transforms local BPS vectors
into relative ones.  All arithmetic is exact over arbitrary-precision
rationals; there is no floating point anywhere.
"""

from fractions import Fraction

from .numtheory import divisors, gen_binom, mobius
from .series import (
    TruncatedSeries,
    product_compose,
    product_decompose,
    series_log,
    series_mul,
)
from .bps import (
    BpsVector,
    GeometryParams,
    GwVector,
    LOCAL,
    RELATIVE,
    local_bps,
    local_bps_from_gw,
    local_gw,
    local_gw_from_bps,
    multiple_cover_contribution,
    relative_bps,
    relative_bps_from_gw,
    relative_gw,
    relative_gw_from_bps,
)
from .quiver import (
    DtTable,
    EulerSeries,
    FormulaIntegrityError,
    dt_closed,
    dt_from_euler,
    dt_table,
    euler_from_dt,
)
from .correspondence import (
    CorrespondenceMatrix,
    IntegralityReport,
    build_matrix,
    integrality_report,
    invert_unit_lower_triangular,
    local_scaling_vector,
    local_to_relative_bps,
    relative_to_local_bps,
)
from .pipeline import PipelineError, PipelineReport, run_pipeline
from .seriesio import (
    SeriesFileError,
    emit_series,
    emit_table,
    format_rational,
    parse_rational,
    parse_series_file,
    parse_series_text,
)

__all__ = [
    "Fraction",
    "mobius",
    "divisors",
    "gen_binom",
    "TruncatedSeries",
    "series_mul",
    "series_log",
    "product_decompose",
    "product_compose",
    "LOCAL",
    "RELATIVE",
    "GeometryParams",
    "GwVector",
    "BpsVector",
    "local_gw",
    "local_bps",
    "relative_gw",
    "relative_bps",
    "multiple_cover_contribution",
    "local_gw_from_bps",
    "local_bps_from_gw",
    "relative_gw_from_bps",
    "relative_bps_from_gw",
    "DtTable",
    "EulerSeries",
    "FormulaIntegrityError",
    "dt_closed",
    "dt_table",
    "dt_from_euler",
    "euler_from_dt",
    "CorrespondenceMatrix",
    "IntegralityReport",
    "build_matrix",
    "invert_unit_lower_triangular",
    "local_scaling_vector",
    "local_to_relative_bps",
    "relative_to_local_bps",
    "integrality_report",
    "PipelineError",
    "PipelineReport",
    "run_pipeline",
    "SeriesFileError",
    "parse_rational",
    "format_rational",
    "parse_series_file",
    "parse_series_text",
    "emit_series",
    "emit_table",
]

__version__ = "0.1.0"
