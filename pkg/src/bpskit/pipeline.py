"""End-to-end pipeline: local GW series in, every derived quantity out.

Chains the exact stages

    local GW -> local BPS -> relative BPS -> relative GW

and attaches integrality verdicts for both BPS vectors.  Any stage failure
is re-raised with the stage's label prefixed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bps import (
    BpsVector,
    GwVector,
    LOCAL,
    local_bps_from_gw,
    relative_gw_from_bps,
)
from .correspondence import IntegralityReport, integrality_report, local_to_relative_bps


class PipelineError(RuntimeError):
    """A pipeline stage failed; the message names the stage."""


@dataclass(frozen=True)
class PipelineReport:
    """All stages of one pipeline run, plus both integrality verdicts."""

    local_gw: GwVector
    local_bps: BpsVector
    relative_bps: BpsVector
    relative_gw: GwVector
    local_integrality: IntegralityReport
    relative_integrality: IntegralityReport


def run_pipeline(gw: GwVector, size: int | None = None) -> PipelineReport:
    """Run every stage on a local GW vector; all arithmetic exact.

    ``size`` truncates the computation to the first ``size`` degrees
    (default: the full input).
    """
    if not isinstance(gw, GwVector) or gw.kind != LOCAL:
        raise PipelineError("input: expected a local GW vector")
    if not gw.entries:
        raise PipelineError("input: empty vector")
    if size is not None:
        if not 1 <= size <= len(gw):
            raise PipelineError(
                f"input: size {size} out of range for {len(gw)} entries"
            )
        gw = gw.truncated(size)

    def stage(label, fn, *args):
        try:
            return fn(*args)
        except Exception as exc:
            raise PipelineError(f"{label}: {exc}") from exc

    n_local = stage("local-bps", local_bps_from_gw, gw)
    n_rel = stage("relative-bps", local_to_relative_bps, n_local)
    gw_rel = stage("relative-gw", relative_gw_from_bps, n_rel)
    return PipelineReport(
        local_gw=gw,
        local_bps=n_local,
        relative_bps=n_rel,
        relative_gw=gw_rel,
        local_integrality=integrality_report(n_local),
        relative_integrality=integrality_report(n_rel),
    )
