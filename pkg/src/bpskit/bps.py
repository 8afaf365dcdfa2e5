"""Local and relative BPS state counts from Gromov-Witten series.

Two exact dictionaries between generating functions, both lower triangular
in the degree and therefore invertible by recursion:

* local:     I_l = sum_{dk=l} n_d / k^3
* relative:  N_l = sum_{dk=l} n_d * (1/k^2) binom(k(dw-1)-1, k-1)

where w is the total intersection multiplicity of the curve class with the
divisor.  The relative kernel is the k-fold multiple cover contribution of
a rigid curve of tangency dw; at w = 1 the generalized binomial makes it
(-1)^(k-1)/k^2, so degenerate geometries work uniformly.

GW invariants are always inputs here; nothing is computed from moduli
spaces.  Vectors are tagged local/relative and the transforms reject a
vector of the wrong kind, so the wrong kernel can never be applied
silently.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .numtheory import divisors, gen_binom

LOCAL = "local"
RELATIVE = "relative"


@dataclass(frozen=True)
class GeometryParams:
    """Geometry attached to a curve class: tangency w = D.beta >= 1.

    ``primitive`` records the user's assertion that the class is primitive;
    it cannot be verified from series data and is only carried through to
    outputs.
    """

    w: int
    primitive: bool = True

    def __post_init__(self):
        if self.w < 1:
            raise ValueError(f"w must be >= 1, got {self.w}")


@dataclass(frozen=True)
class _IndexedVector:
    """Exact rational entries indexed by curve-class multiple d = 1..N."""

    kind: str
    geometry: GeometryParams
    entries: tuple[Fraction, ...] = field(default=())

    def __post_init__(self):
        if self.kind not in (LOCAL, RELATIVE):
            raise ValueError(f"kind must be 'local' or 'relative', got {self.kind!r}")
        object.__setattr__(
            self, "entries", tuple(Fraction(x) for x in self.entries)
        )

    def __len__(self) -> int:
        return len(self.entries)

    def truncated(self, length: int):
        """Same vector restricted to entries 1..length."""
        return type(self)(self.kind, self.geometry, self.entries[:length])


class GwVector(_IndexedVector):
    """Gromov-Witten invariants, entry d holding degree-d values."""


class BpsVector(_IndexedVector):
    """BPS state counts, entry d holding the degree-d count."""


def local_gw(entries: Sequence, w: int = 1, primitive: bool = True) -> GwVector:
    return GwVector(LOCAL, GeometryParams(w, primitive), tuple(entries))


def local_bps(entries: Sequence, w: int = 1, primitive: bool = True) -> BpsVector:
    return BpsVector(LOCAL, GeometryParams(w, primitive), tuple(entries))


def relative_gw(entries: Sequence, w: int, primitive: bool = True) -> GwVector:
    return GwVector(RELATIVE, GeometryParams(w, primitive), tuple(entries))


def relative_bps(entries: Sequence, w: int, primitive: bool = True) -> BpsVector:
    return BpsVector(RELATIVE, GeometryParams(w, primitive), tuple(entries))


def _require(vec: _IndexedVector, cls: type, kind: str, op: str) -> None:
    if not isinstance(vec, cls):
        raise TypeError(f"{op} needs a {cls.__name__}, got {type(vec).__name__}")
    if vec.kind != kind:
        raise ValueError(f"{op} needs a {kind} vector, got kind {vec.kind!r}")
    if not vec.entries:
        raise ValueError(f"{op}: empty input")


def multiple_cover_contribution(w: int, d: int, k: int) -> Fraction:
    """Contribution of a k-fold cover of a rigid curve of tangency d*w.

    Equals (1/k^2) binom(k(dw-1)-1, k-1); generalized binomial, so w = 1
    gives (-1)^(k-1)/k^2.
    """
    if w < 1 or d < 1 or k < 1:
        raise ValueError("multiple_cover_contribution needs w, d, k >= 1")
    return Fraction(gen_binom(k * (d * w - 1) - 1, k - 1), k * k)


def local_gw_from_bps(n: BpsVector) -> GwVector:
    """I_l = sum over dk = l of n_d / k^3."""
    _require(n, BpsVector, LOCAL, "local_gw_from_bps")
    out = []
    for l in range(1, len(n) + 1):
        acc = Fraction(0)
        for k in divisors(l):
            nd = n.entries[l // k - 1]
            if nd:
                acc += Fraction(nd, k**3)
        out.append(acc)
    return GwVector(LOCAL, n.geometry, tuple(out))


def local_bps_from_gw(gw: GwVector) -> BpsVector:
    """Triangular inversion: n_l = I_l - sum_{k|l, k>1} n_{l/k} / k^3."""
    _require(gw, GwVector, LOCAL, "local_bps_from_gw")
    out: list[Fraction] = []
    for l in range(1, len(gw) + 1):
        acc = gw.entries[l - 1]
        for k in divisors(l):
            if k > 1:
                nd = out[l // k - 1]
                if nd:
                    acc -= Fraction(nd, k**3)
        out.append(acc)
    return BpsVector(LOCAL, gw.geometry, tuple(out))


def relative_gw_from_bps(n: BpsVector) -> GwVector:
    """N_l = sum over dk = l of n_d * multiple_cover_contribution(w, d, k)."""
    _require(n, BpsVector, RELATIVE, "relative_gw_from_bps")
    w = n.geometry.w
    out = []
    for l in range(1, len(n) + 1):
        acc = Fraction(0)
        for k in divisors(l):
            nd = n.entries[l // k - 1]
            if nd:
                acc += nd * multiple_cover_contribution(w, l // k, k)
        out.append(acc)
    return GwVector(RELATIVE, n.geometry, tuple(out))


def relative_bps_from_gw(gw: GwVector) -> BpsVector:
    """The unique vector that relative_gw_from_bps maps onto the input.

    The k = 1 kernel value is always 1, so the same triangular recursion as
    in the local case applies.
    """
    _require(gw, GwVector, RELATIVE, "relative_bps_from_gw")
    w = gw.geometry.w
    out: list[Fraction] = []
    for l in range(1, len(gw) + 1):
        acc = gw.entries[l - 1]
        for k in divisors(l):
            if k > 1:
                nd = out[l // k - 1]
                if nd:
                    acc -= nd * multiple_cover_contribution(w, l // k, k)
        out.append(acc)
    return BpsVector(RELATIVE, gw.geometry, tuple(out))
