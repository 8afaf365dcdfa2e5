"""Command-line surface: one subcommand per construct, composable via files.

Every command is deterministic (identical inputs and flags give
byte-identical output) and exact.  Exit codes: 0 success, 1 input error
(including a failing check-integrality verdict), 2 internal consistency
failure such as the DT divisibility tripwire.
"""

from __future__ import annotations

import argparse
import sys

from .bps import (
    BpsVector,
    GwVector,
    LOCAL,
    RELATIVE,
    local_gw_from_bps,
    local_bps_from_gw,
    relative_gw_from_bps,
    relative_bps_from_gw,
)
from .correspondence import (
    build_matrix,
    integrality_report,
    invert_unit_lower_triangular,
    local_to_relative_bps,
    relative_to_local_bps,
)
from .pipeline import PipelineError, run_pipeline
from .quiver import EulerSeries, FormulaIntegrityError, dt_table
from .seriesio import SeriesFileError, emit_table, file_kind, parse_series_file


class CliInputError(Exception):
    """Bad command line or bad input file; exits with code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise CliInputError(f"{self.prog}: {message}")


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="bpskit",
        description=(
            "Exact computations with BPS state counts, loop-quiver DT "
            "invariants, and the correspondence matrix between them."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument(
            "--format",
            choices=("structured", "csv"),
            default="structured",
            help="output format (default: structured)",
        )
        p.add_argument("--output", metavar="PATH", help="write output to PATH instead of stdout")
        return p

    p = add("dt", "table of DT invariants of the m-loop quivers")
    p.add_argument("--loops", type=int, required=True, metavar="M", help="largest loop count m")
    p.add_argument("--upto", type=int, required=True, metavar="N", help="largest rank n")

    p = add("local-bps", "local BPS counts from a local GW file (or back with --inverse)")
    p.add_argument("--input", required=True, metavar="F", help="series file")
    p.add_argument("--inverse", action="store_true", help="map local BPS back to local GW")

    p = add("relative-bps", "relative BPS counts from a relative GW file (or back with --inverse)")
    p.add_argument("--input", required=True, metavar="F", help="series file")
    p.add_argument("--inverse", action="store_true", help="map relative BPS back to relative GW")

    p = add("matrix", "the correspondence matrix (or its integer inverse)")
    p.add_argument("--w", type=int, required=True, metavar="W", help="tangency w >= 1")
    p.add_argument("--upto", type=int, required=True, metavar="N", help="matrix dimension")
    p.add_argument("--inverse", action="store_true", help="emit the exact inverse instead")

    p = add("transform", "transform a BPS vector between local and relative")
    p.add_argument("--input", required=True, metavar="F", help="series file (local_bps or relative_bps)")
    p.add_argument(
        "--direction",
        choices=("local-to-relative", "relative-to-local"),
        required=True,
    )

    p = add("pipeline", "local GW file in, every derived quantity out")
    p.add_argument("--input", required=True, metavar="F", help="series file of kind local_gw")

    p = add("check-integrality", "entrywise integrality verdict for a series file")
    p.add_argument("--input", required=True, metavar="F", help="series file")

    return parser


def _load(path, want_cls, want_kind, command):
    try:
        data = parse_series_file(path)
    except OSError as exc:
        raise CliInputError(f"{command}: cannot read {path}: {exc.strerror or exc}") from exc
    if not isinstance(data, want_cls) or data.kind != want_kind:
        want = f"{want_kind}_{'gw' if want_cls is GwVector else 'bps'}"
        raise CliInputError(
            f"{command}: input must have kind {want}, got {file_kind(data)}"
        )
    return data


def _run(args) -> tuple[str, int]:
    """Execute one subcommand; returns (output text, exit code)."""
    fmt = args.format
    if args.command == "dt":
        if args.loops < 0 or args.upto < 1:
            raise CliInputError("dt: needs --loops >= 0 and --upto >= 1")
        return emit_table(dt_table(args.loops, args.upto), fmt), 0

    if args.command == "local-bps":
        if args.inverse:
            vec = _load(args.input, BpsVector, LOCAL, "local-bps")
            return emit_table(local_gw_from_bps(vec), fmt), 0
        vec = _load(args.input, GwVector, LOCAL, "local-bps")
        return emit_table(local_bps_from_gw(vec), fmt), 0

    if args.command == "relative-bps":
        if args.inverse:
            vec = _load(args.input, BpsVector, RELATIVE, "relative-bps")
            return emit_table(relative_gw_from_bps(vec), fmt), 0
        vec = _load(args.input, GwVector, RELATIVE, "relative-bps")
        return emit_table(relative_bps_from_gw(vec), fmt), 0

    if args.command == "matrix":
        if args.w < 1 or args.upto < 1:
            raise CliInputError("matrix: needs --w >= 1 and --upto >= 1")
        matrix = build_matrix(args.w, args.upto)
        if args.inverse:
            inverse = invert_unit_lower_triangular(matrix)
            return (
                emit_table(
                    inverse,
                    fmt,
                    label="correspondence_matrix_inverse",
                    meta=[("w", matrix.w), ("n", matrix.size)],
                ),
                0,
            )
        return emit_table(matrix, fmt), 0

    if args.command == "transform":
        if args.direction == "local-to-relative":
            vec = _load(args.input, BpsVector, LOCAL, "transform")
            return emit_table(local_to_relative_bps(vec), fmt), 0
        vec = _load(args.input, BpsVector, RELATIVE, "transform")
        return emit_table(relative_to_local_bps(vec), fmt), 0

    if args.command == "pipeline":
        vec = _load(args.input, GwVector, LOCAL, "pipeline")
        return emit_table(run_pipeline(vec), fmt), 0

    if args.command == "check-integrality":
        try:
            data = parse_series_file(args.input)
        except OSError as exc:
            raise CliInputError(
                f"check-integrality: cannot read {args.input}: {exc.strerror or exc}"
            ) from exc
        entries = data.chi if isinstance(data, EulerSeries) else data.entries
        report = integrality_report(entries)
        return emit_table(report, fmt), 0 if report.passed else 1

    raise CliInputError(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        text, code = _run(args)
    except (CliInputError, SeriesFileError, ValueError, PipelineError) as exc:
        cause = getattr(exc, "__cause__", None)
        if isinstance(exc, FormulaIntegrityError) or isinstance(cause, FormulaIntegrityError):
            print(f"bpskit: internal consistency failure: {exc}", file=sys.stderr)
            return 2
        print(f"bpskit: {exc}", file=sys.stderr)
        return 1
    except FormulaIntegrityError as exc:
        print(f"bpskit: internal consistency failure: {exc}", file=sys.stderr)
        return 2

    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as handle:
                handle.write(text)
        except OSError as exc:
            print(f"bpskit: cannot write {args.output}: {exc.strerror or exc}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
