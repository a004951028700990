"""Exact intersection arithmetic on a projective bundle over a curve.

The ambient space is the projectivisation of a rank-r, degree-d vector bundle
on a smooth curve.  Its rational intersection ring is

    Q[H, S] / (S^2,  H^r - d * H^(r-1) * S)

where H is the tautological hyperplane class and S the class of a fibre of
the projection to the curve.  Every graded piece in codimension j is spanned
by H^j and H^(j-1)*S, so a homogeneous class is a pair of exact rational
coefficients.  Reduction in this ring is the ground truth all closed-form
intersection numbers elsewhere in the package are checked against; floating
point is deliberately never used here.

All values are immutable and all operations are pure functions, so everything
is safe to share between threads or workers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import prod

Rational = int | Fraction


def _as_fraction(value, what: str) -> Fraction:
    # bool is an int subclass; floats are banned outright in this module
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise ValueError(f"{what} must be an integer or Fraction, got {value!r}")
    return Fraction(value)


def _as_int(value, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{what} must be an integer, got {value!r}")
    return value


@dataclass(frozen=True)
class AmbientData:
    """Rank, degree and base genus of the bundle defining the ambient space.

    The genus is carried along for provenance only; it enters no formula.
    """

    rank: int
    degree: int
    genus: int = 0

    def __post_init__(self):
        _as_int(self.rank, "rank")
        _as_int(self.degree, "degree")
        _as_int(self.genus, "genus")
        if self.rank < 3:
            raise ValueError(f"bundle rank must be >= 3, got {self.rank}")

    @property
    def slope(self) -> Fraction:
        return Fraction(self.degree, self.rank)


@dataclass(frozen=True)
class CompleteIntersectionSpec:
    """The (k_i, y_i) data of the c relative hypersurfaces cutting out X.

    Each hypersurface has fibrewise degree k_i >= 2 and is twisted by the
    pullback of a base divisor of degree y_i (any sign).
    """

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple(
            (_as_int(k, "k"), _as_int(y, "y")) for k, y in self.pairs
        )
        object.__setattr__(self, "pairs", pairs)
        if len(pairs) < 1:
            raise ValueError("at least one hypersurface is required")
        for k, _ in pairs:
            if k < 2:
                raise ValueError(f"fibrewise degrees must be >= 2, got {k}")

    @property
    def codim(self) -> int:
        return len(self.pairs)

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.pairs)

    @property
    def twists(self) -> tuple[int, ...]:
        return tuple(y for _, y in self.pairs)

    @property
    def degree_product(self) -> int:
        return prod(self.degrees)

    @property
    def degree_sum(self) -> int:
        return sum(self.degrees)

    @property
    def twist_sum(self) -> int:
        return sum(self.twists)

    @property
    def min_degree(self) -> int:
        return min(self.degrees)

    @property
    def weighted_twist_sum(self) -> int:
        """sum_i y_i * prod_{j != i} k_j, the S-coefficient drop of the class of X."""
        total = 0
        for i, (_, y) in enumerate(self.pairs):
            total += y * prod(k for j, (k, _) in enumerate(self.pairs) if j != i)
        return total

    @property
    def slope_sum(self) -> Fraction:
        """sum_i y_i / k_i."""
        return sum((Fraction(y, k) for k, y in self.pairs), Fraction(0))


@dataclass(frozen=True)
class HomogeneousClass:
    """a*H^j + b*H^(j-1)*S in codimension j, exact rational coefficients.

    Codimension-r classes are kept fully reduced: H^r is rewritten as
    d*H^(r-1)*S on construction, so their h_coeff is always 0.  The canonical
    zero class (products that exceed the ring's top degree) sits in
    codimension r with both coefficients 0.
    """

    ambient: AmbientData
    codim: int
    h_coeff: Fraction
    sigma_coeff: Fraction = field(default=Fraction(0))

    def __post_init__(self):
        _as_int(self.codim, "codim")
        r = self.ambient.rank
        if not 0 <= self.codim <= r:
            raise ValueError(f"codimension must lie in [0, {r}], got {self.codim}")
        h = _as_fraction(self.h_coeff, "h_coeff")
        s = _as_fraction(self.sigma_coeff, "sigma_coeff")
        if self.codim == 0 and s != 0:
            raise ValueError("codimension-0 classes are multiples of the unit")
        if self.codim == r and h != 0:
            s += self.ambient.degree * h
            h = Fraction(0)
        object.__setattr__(self, "h_coeff", h)
        object.__setattr__(self, "sigma_coeff", s)

    @property
    def is_zero(self) -> bool:
        return self.h_coeff == 0 and self.sigma_coeff == 0

    def __add__(self, other: HomogeneousClass) -> HomogeneousClass:
        if not isinstance(other, HomogeneousClass):
            return NotImplemented
        if self.ambient != other.ambient or self.codim != other.codim:
            raise ValueError("can only add classes of equal ambient and codimension")
        return HomogeneousClass(
            self.ambient,
            self.codim,
            self.h_coeff + other.h_coeff,
            self.sigma_coeff + other.sigma_coeff,
        )

    def __neg__(self) -> HomogeneousClass:
        return HomogeneousClass(self.ambient, self.codim, -self.h_coeff, -self.sigma_coeff)

    def __sub__(self, other: HomogeneousClass) -> HomogeneousClass:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, HomogeneousClass):
            return multiply(self, other)
        if isinstance(other, bool) or not isinstance(other, (int, Fraction)):
            return NotImplemented
        return HomogeneousClass(
            self.ambient, self.codim, other * self.h_coeff, other * self.sigma_coeff
        )

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> HomogeneousClass:
        if exponent < 0:
            raise ValueError("negative powers are not defined")
        result = unit_class(self.ambient)
        for _ in range(exponent):
            result = multiply(result, self)
        return result

    def __repr__(self) -> str:
        j = self.codim
        h_mon = "1" if j == 0 else f"H^{j}" if j > 1 else "H"
        s_mon = "S" if j <= 1 else f"H^{j - 1}*S" if j > 2 else "H*S"
        return f"({self.h_coeff})*{h_mon} + ({self.sigma_coeff})*{s_mon}"


def unit_class(ambient: AmbientData) -> HomogeneousClass:
    return HomogeneousClass(ambient, 0, Fraction(1))


def hyperplane_class(ambient: AmbientData) -> HomogeneousClass:
    """H, the tautological hyperplane class."""
    return HomogeneousClass(ambient, 1, Fraction(1))


def fiber_class(ambient: AmbientData) -> HomogeneousClass:
    """S, the class of a fibre of the projection to the curve."""
    return HomogeneousClass(ambient, 1, Fraction(0), Fraction(1))


def zero_class(ambient: AmbientData) -> HomogeneousClass:
    """The canonical zero class (top codimension, both coefficients 0)."""
    return HomogeneousClass(ambient, ambient.rank, Fraction(0))


def multiply(x: HomogeneousClass, y: HomogeneousClass) -> HomogeneousClass:
    """Product in the ring; S^2 = 0, and H^r reduces to d*H^(r-1)*S.

    Products whose codimension exceeds r are the canonical zero class.
    """
    if x.ambient != y.ambient:
        raise ValueError("ambient data mismatch")
    total = x.codim + y.codim
    if total > x.ambient.rank:
        return zero_class(x.ambient)
    return HomogeneousClass(
        x.ambient,
        total,
        x.h_coeff * y.h_coeff,
        x.h_coeff * y.sigma_coeff + y.h_coeff * x.sigma_coeff,
    )


def degree(x: HomogeneousClass) -> Fraction:
    """Topological degree of a zero-cycle: the coefficient of H^(r-1)*S."""
    if x.codim != x.ambient.rank:
        raise ValueError(
            f"degree needs a codimension-{x.ambient.rank} class, got {x.codim}"
        )
    return x.sigma_coeff


def class_of_ci(
    spec: CompleteIntersectionSpec, ambient: AmbientData
) -> HomogeneousClass:
    """Class of the complete intersection: prod_i (k_i*H - y_i*S).

    Expanding with S^2 = 0 gives
    (prod k_i) H^c - (sum_i y_i prod_{j != i} k_j) H^(c-1) S.
    """
    if spec.codim > ambient.rank - 1:
        raise ValueError(
            f"codimension {spec.codim} exceeds fibre dimension {ambient.rank - 1}"
        )
    return HomogeneousClass(
        ambient,
        spec.codim,
        Fraction(spec.degree_product),
        Fraction(-spec.weighted_twist_sum),
    )
