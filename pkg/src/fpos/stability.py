"""Degree-of-contact arithmetic for Chow stability of embedded varieties.

A one-parameter subgroup acting on the ambient projective space induces a
weighted filtration; each subvariety T then has a degree of contact e(T),
and the numerical criterion compares the normalized slope
e(T) / ((dim T + 1) deg T) with the average weight.  Strictly below is
stable, equal is the semistable boundary, strictly above is unstable -- all
relative to the one supplied filtration (the full criterion quantifies over
every filtration; this module checks supplied witnesses only, and never
computes contact degrees from equations).

For properly intersecting Y and Z the contact degree of the intersection
cycle obeys a Bezout-type formula, from which semistability propagates to
intersections; propagation_check replays that inequality chain with exact
rationals.  instability_report applies the contrapositive bridge to the
fibres of a relative complete intersection whose slope condition fails.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .chowring import CompleteIntersectionSpec
from .errors import InconsistencyError
from .positivity import (
    PositivityMargin,
    asymptotic_threshold,
    f_positive_at,
    slope_condition,
)


class StabilityVerdict(enum.Enum):
    STABLE = "stable"
    BOUNDARY = "semistable-boundary"
    UNSTABLE = "unstable"

    @property
    def non_unstable(self) -> bool:
        return self is not StabilityVerdict.UNSTABLE


@dataclass(frozen=True)
class WeightedFiltration:
    """Weights r_0..r_n of a one-parameter subgroup acting on P^n."""

    ambient_dim: int
    weights: tuple[Fraction, ...]

    def __post_init__(self):
        if isinstance(self.ambient_dim, bool) or not isinstance(self.ambient_dim, int):
            raise ValueError(f"ambient dimension must be an integer, got {self.ambient_dim!r}")
        if self.ambient_dim < 1:
            raise ValueError(f"ambient dimension must be >= 1, got {self.ambient_dim}")
        weights = []
        for w in self.weights:
            if isinstance(w, (bool, float)):
                raise ValueError(f"weights must be exact rationals, got {w!r}")
            weights.append(Fraction(w))
        object.__setattr__(self, "weights", tuple(weights))
        if len(self.weights) != self.ambient_dim + 1:
            raise ValueError(
                f"expected {self.ambient_dim + 1} weights, got {len(self.weights)}"
            )

    @property
    def weight_total(self) -> Fraction:
        return sum(self.weights, Fraction(0))


@dataclass(frozen=True)
class ContactDatum:
    """(dimension, degree, degree of contact) of one subvariety of P^n."""

    dim: int
    deg: int
    contact: Fraction

    def __post_init__(self):
        if isinstance(self.dim, bool) or not isinstance(self.dim, int) or self.dim < 0:
            raise ValueError(f"dimension must be a non-negative integer, got {self.dim!r}")
        if isinstance(self.deg, bool) or not isinstance(self.deg, int) or self.deg < 1:
            raise ValueError(f"degree must be a positive integer, got {self.deg!r}")
        if isinstance(self.contact, (bool, float)):
            raise ValueError(f"contact degree must be an exact rational, got {self.contact!r}")
        object.__setattr__(self, "contact", Fraction(self.contact))


def hm_slope(datum: ContactDatum) -> Fraction:
    """Normalized contact slope e / ((dim + 1) * deg)."""
    return datum.contact / ((datum.dim + 1) * datum.deg)


def hm_bound(filtration: WeightedFiltration) -> Fraction:
    """Average weight sum(r_i) / (n + 1), the comparison bound."""
    return filtration.weight_total / (filtration.ambient_dim + 1)


def is_semistable(datum: ContactDatum, filtration: WeightedFiltration) -> StabilityVerdict:
    """Verdict for this single filtration (a witness, not the full criterion)."""
    slope, bound = hm_slope(datum), hm_bound(filtration)
    if slope < bound:
        return StabilityVerdict.STABLE
    if slope == bound:
        return StabilityVerdict.BOUNDARY
    return StabilityVerdict.UNSTABLE


def bezout_contact(
    yd: ContactDatum, zd: ContactDatum, filtration: WeightedFiltration
) -> ContactDatum:
    """Contact datum of the proper intersection cycle Y . Z.

    dim = dim Y + dim Z - n, deg = deg Y * deg Z, and
    e = deg(Y) e(Z) + deg(Z) e(Y) - deg(Y) deg(Z) * sum(r_i).
    """
    n = filtration.ambient_dim
    if yd.dim > n or zd.dim > n:
        raise ValueError("subvariety dimension exceeds the ambient dimension")
    new_dim = yd.dim + zd.dim - n
    if new_dim < 0:
        raise ValueError(
            f"improper intersection: expected dimension {new_dim} is negative"
        )
    contact = (
        yd.deg * zd.contact
        + zd.deg * yd.contact
        - yd.deg * zd.deg * filtration.weight_total
    )
    return ContactDatum(dim=new_dim, deg=yd.deg * zd.deg, contact=contact)


@dataclass(frozen=True)
class PropagationReport:
    """Step-by-step replay of the semistability-propagation inequality chain."""

    bound: Fraction
    first_verdict: StabilityVerdict
    second_verdict: StabilityVerdict
    intersection: ContactDatum
    intersection_verdict: StabilityVerdict
    # the intersection slope decomposes as term_first + term_second - term_weights
    term_first: Fraction
    term_second: Fraction
    term_weights: Fraction
    applicable: bool
    expect_stable: bool


def propagation_check(
    yd: ContactDatum, zd: ContactDatum, filtration: WeightedFiltration
) -> PropagationReport:
    """Check that non-unstable inputs give a non-unstable proper intersection.

    When both inputs are non-unstable for the filtration, the intersection
    must be too, and strictly stable if at least one input is; either failing
    raises, since the chain is pure arithmetic.  Unstable inputs make the
    report not applicable and nothing is asserted.
    """
    intersection = bezout_contact(yd, zd, filtration)
    n = filtration.ambient_dim
    denom = yd.dim + zd.dim - n + 1
    term_first = yd.contact / (denom * yd.deg)
    term_second = zd.contact / (denom * zd.deg)
    term_weights = filtration.weight_total / denom
    if hm_slope(intersection) != term_first + term_second - term_weights:
        raise InconsistencyError("contact slope decomposition failed to balance")

    first = is_semistable(yd, filtration)
    second = is_semistable(zd, filtration)
    result = is_semistable(intersection, filtration)
    applicable = first.non_unstable and second.non_unstable
    expect_stable = applicable and StabilityVerdict.STABLE in (first, second)
    if applicable and not result.non_unstable:
        raise InconsistencyError(
            "semistable inputs produced an unstable intersection"
        )
    if expect_stable and result is not StabilityVerdict.STABLE:
        raise InconsistencyError(
            "a strictly stable input must force a strictly stable intersection"
        )
    return PropagationReport(
        bound=hm_bound(filtration),
        first_verdict=first,
        second_verdict=second,
        intersection=intersection,
        intersection_verdict=result,
        term_first=term_first,
        term_second=term_second,
        term_weights=term_weights,
        applicable=applicable,
        expect_stable=expect_stable,
    )


@dataclass(frozen=True)
class InstabilityReport:
    """Where the fibres of a slope-condition-failing fibration are Chow unstable.

    applies is False when the slope condition holds (boundary included); then
    no instability conclusion can be drawn.  Otherwise the fibres are unstable
    in O(h) for every listed low h and for every h >= unstable_from, the
    certified threshold, with the exact margins recorded.
    """

    slope_holds: bool
    slope_margin: Fraction
    applies: bool
    unstable_low_hs: tuple[int, ...]
    low_margins: tuple[PositivityMargin, ...]
    unstable_from: int | None


def instability_report(
    spec: CompleteIntersectionSpec,
    r: int,
    d: int,
    *,
    max_scan: int | None = None,
) -> InstabilityReport:
    """Apply the instability bridge to a relative complete intersection."""
    holds, margin = slope_condition(spec, r, d)
    if holds:
        return InstabilityReport(
            slope_holds=True,
            slope_margin=margin,
            applies=False,
            unstable_low_hs=(),
            low_margins=(),
            unstable_from=None,
        )
    low_hs = tuple(range(1, spec.min_degree))
    low_margins = tuple(f_positive_at(spec, r, d, h) for h in low_hs)
    # strict failure means a strictly negative leading coefficient, so the
    # threshold always exists here
    threshold = asymptotic_threshold(spec, r, d, max_scan=max_scan)
    return InstabilityReport(
        slope_holds=False,
        slope_margin=margin,
        applies=True,
        unstable_low_hs=low_hs,
        low_margins=low_margins,
        unstable_from=threshold,
    )
