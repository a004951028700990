"""Cones of codimension-c cycle classes on the bundle, from slope data.

The codimension-c cycle space of the bundle is two-dimensional, spanned by
H^c and H^(c-1)*S, and the three cones of interest -- nef, the positivity
cone characterising slope-positive complete intersections, and
pseudoeffective -- are each spanned by H^(c-1)*S together with
H^c - nu * H^(c-1)*S for a single rational nu.  Larger nu means a larger
cone, so the chain nef <= positivity <= pseff is the chain of the three nu
values.  The outer two come from the Harder-Narasimhan slopes of the bundle
via the virtual-slope multiset; the middle one is c times the bundle slope.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chowring import AmbientData, CompleteIntersectionSpec, HomogeneousClass, class_of_ci
from .errors import InconsistencyError
from .positivity import slope_condition

Rational = int | Fraction


@dataclass(frozen=True)
class HNData:
    """Harder-Narasimhan pieces of the bundle as (rank, slope) pairs.

    Slopes must be strictly decreasing; a single piece means semistable.
    """

    pieces: tuple[tuple[int, Fraction], ...]

    def __post_init__(self):
        normalized = []
        for rank, slope in self.pieces:
            if isinstance(rank, bool) or not isinstance(rank, int) or rank < 1:
                raise ValueError(f"piece ranks must be positive integers, got {rank!r}")
            if isinstance(slope, (bool, float)):
                raise ValueError(f"piece slopes must be exact rationals, got {slope!r}")
            normalized.append((rank, Fraction(slope)))
        object.__setattr__(self, "pieces", tuple(normalized))
        if not self.pieces:
            raise ValueError("at least one piece is required")
        slopes = [s for _, s in self.pieces]
        if any(a <= b for a, b in zip(slopes[1:], slopes[:-1])):
            raise ValueError(f"slopes must be strictly decreasing, got {slopes}")

    @classmethod
    def from_rank_degree_pairs(cls, pairs) -> HNData:
        return cls(tuple((rank, Fraction(deg, rank)) for rank, deg in pairs))

    @classmethod
    def semistable(cls, rank: int, degree: int) -> HNData:
        return cls(((rank, Fraction(degree, rank)),))

    @property
    def length(self) -> int:
        return len(self.pieces)

    @property
    def is_semistable(self) -> bool:
        return self.length == 1

    @property
    def rank(self) -> int:
        return sum(rank for rank, _ in self.pieces)

    @property
    def degree(self) -> Fraction:
        return sum((rank * slope for rank, slope in self.pieces), Fraction(0))


def virtual_slopes(hn: HNData) -> tuple[Fraction, ...]:
    """Each piece slope repeated with multiplicity its rank, largest first."""
    out: list[Fraction] = []
    for rank, slope in hn.pieces:
        out.extend([slope] * rank)
    return tuple(out)


@dataclass(frozen=True)
class ConeSpec:
    """A 2-dimensional cone spanned by H^(c-1)*S and H^c - nu*H^(c-1)*S."""

    codim: int
    nu: Fraction
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "nu", Fraction(self.nu))

    def generator_sigma(self, ambient: AmbientData) -> HomogeneousClass:
        return HomogeneousClass(ambient, self.codim, Fraction(0), Fraction(1))

    def generator_mixed(self, ambient: AmbientData) -> HomogeneousClass:
        return HomogeneousClass(ambient, self.codim, Fraction(1), -self.nu)

    def contains(self, cls: HomogeneousClass) -> bool:
        return in_cone(cls, self)


def _check_codim(c: int, r: int) -> None:
    if not 1 <= c <= r - 1:
        raise ValueError(f"codimension must lie in [1, {r - 1}], got {c}")


def pseff_cone(hn: HNData, c: int) -> ConeSpec:
    """Pseudoeffective cone: nu is the sum of the c largest virtual slopes."""
    _check_codim(c, hn.rank)
    slopes = virtual_slopes(hn)
    return ConeSpec(c, sum(slopes[:c], Fraction(0)), "pseff")


def nef_cone(hn: HNData, c: int) -> ConeSpec:
    """Nef cone: nu is the sum of the c smallest virtual slopes."""
    _check_codim(c, hn.rank)
    slopes = virtual_slopes(hn)
    return ConeSpec(c, sum(slopes[-c:], Fraction(0)), "nef")


def b_cone(r: int, d: Rational, c: int) -> ConeSpec:
    """The positivity cone: nu = c * d / r, i.e. c times the bundle slope."""
    _check_codim(c, r)
    return ConeSpec(c, Fraction(c) * Fraction(d) / r, "b")


def in_cone(cls: HomogeneousClass, cone: ConeSpec) -> bool:
    """Membership of a*H^c + b*H^(c-1)*S: a >= 0 and b + a*nu >= 0.

    These are the coordinates of the class in the cone's generator basis.
    """
    if cls.codim != cone.codim:
        raise ValueError(
            f"class has codimension {cls.codim}, cone has {cone.codim}"
        )
    return cls.h_coeff >= 0 and cls.sigma_coeff + cls.h_coeff * cone.nu >= 0


@dataclass(frozen=True)
class ConeChainReport:
    """The three nu values in codimension c and the strictness of the chain."""

    codim: int
    nu_nef: Fraction
    nu_b: Fraction
    nu_pseff: Fraction
    nef_strict: bool
    pseff_strict: bool
    semistable: bool


def cone_chain_report(hn: HNData, c: int) -> ConeChainReport:
    """Verify nef <= positivity <= pseff in codimension c, strict iff non-semistable."""
    nu_nef = nef_cone(hn, c).nu
    nu_b = b_cone(hn.rank, hn.degree, c).nu
    nu_pseff = pseff_cone(hn, c).nu
    if not nu_nef <= nu_b <= nu_pseff:
        raise InconsistencyError(
            f"cone chain out of order: {nu_nef}, {nu_b}, {nu_pseff}"
        )
    nef_strict = nu_nef < nu_b
    pseff_strict = nu_b < nu_pseff
    if (nef_strict and pseff_strict) == hn.is_semistable:
        raise InconsistencyError(
            "cone chain strictness must hold exactly for non-semistable bundles"
        )
    return ConeChainReport(
        codim=c,
        nu_nef=nu_nef,
        nu_b=nu_b,
        nu_pseff=nu_pseff,
        nef_strict=nef_strict,
        pseff_strict=pseff_strict,
        semistable=hn.is_semistable,
    )


def membership_equivalence_check(
    spec: CompleteIntersectionSpec, r: int, d: int
) -> bool:
    """Class of X lies in the positivity cone iff the slope condition holds.

    The two sides are computed by unrelated routes (cone coordinates vs
    rational slope sums); disagreement raises, since it can only be a bug.
    """
    ambient = AmbientData(r, d)
    by_cone = in_cone(class_of_ci(spec, ambient), b_cone(r, d, spec.codim))
    by_slope, _ = slope_condition(spec, r, d)
    if by_cone != by_slope:
        raise InconsistencyError(
            f"cone membership ({by_cone}) disagrees with slope condition "
            f"({by_slope}) for spec={spec.pairs}, r={r}, d={d}"
        )
    return by_cone
