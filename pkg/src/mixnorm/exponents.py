"""Exact arithmetic on Lebesgue exponents and sharp Fourier constants.

Exponents live in [1, inf] and are stored through their reciprocals in
[0, 1], so that inf is representable exactly (reciprocal 0) and conjugacy
``1/a + 1/a' = 1`` is closed under the arithmetic. Exponents built from
integers, fractions, or decimal strings keep exact rational reciprocals;
only exponents built from floats fall back to floating point, in which
case relational checks use a 1e-12 tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Union

__all__ = [
    "Exponent",
    "ExponentTuple",
    "DimensionPair",
    "Admissibility",
    "as_exponent",
    "conjugate",
    "beckner_constant",
    "beckner_power",
    "admissible",
    "holder_exponents",
]

ExponentLike = Union["Exponent", int, float, str, Fraction]

#: Tolerance for relational checks on non-rational reciprocals.
REL_TOL = 1e-12


class Exponent:
    """A Lebesgue exponent in [1, inf], held through its reciprocal."""

    __slots__ = ("_recip",)

    def __init__(self, value: ExponentLike):
        if isinstance(value, Exponent):
            self._recip = value._recip
            return
        if isinstance(value, str):
            text = value.strip()
            if text.lower() in ("inf", "infinity", "oo"):
                self._recip = Fraction(0)
                return
            value = Fraction(text)  # handles "4/3", "2", "1.5"
        if isinstance(value, bool):
            raise TypeError("booleans are not exponents")
        if isinstance(value, int):
            value = Fraction(value)
        if isinstance(value, Fraction):
            if value < 1:
                raise ValueError(f"exponent must be >= 1, got {value}")
            self._recip = Fraction(1) / value
            return
        if isinstance(value, float):
            if math.isinf(value):
                self._recip = Fraction(0)
                return
            if math.isnan(value) or value < 1.0:
                raise ValueError(f"exponent must be >= 1, got {value}")
            self._recip = 1.0 / value
            return
        raise TypeError(f"cannot build an exponent from {value!r}")

    @classmethod
    def from_reciprocal(cls, recip: Fraction | float) -> "Exponent":
        """Build from a reciprocal in [0, 1], keeping its exactness."""
        if not 0 <= recip <= 1:
            raise ValueError(f"reciprocal must lie in [0, 1], got {recip}")
        e = cls.__new__(cls)
        e._recip = recip
        return e

    @property
    def reciprocal(self) -> Fraction | float:
        return self._recip

    @property
    def value(self) -> Fraction | float:
        if self._recip == 0:
            return math.inf
        if isinstance(self._recip, Fraction):
            return Fraction(1) / self._recip
        return 1.0 / self._recip

    @property
    def is_rational(self) -> bool:
        return isinstance(self._recip, Fraction)

    @property
    def is_infinite(self) -> bool:
        return self._recip == 0

    def conjugate(self) -> "Exponent":
        """The exponent a' with 1/a + 1/a' = 1 (conjugate of 1 is inf)."""
        if isinstance(self._recip, Fraction):
            return Exponent.from_reciprocal(Fraction(1) - self._recip)
        return Exponent.from_reciprocal(1.0 - self._recip)

    def __float__(self) -> float:
        return float(self.value)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, float, Fraction, str)):
            other = Exponent(other)
        if not isinstance(other, Exponent):
            return NotImplemented
        return self._recip == other._recip

    def __hash__(self) -> int:
        return hash(self._recip)

    # Reciprocals reverse the order: larger exponent, smaller reciprocal.
    def __lt__(self, other) -> bool:
        return self._recip > as_exponent(other)._recip

    def __le__(self, other) -> bool:
        return self._recip >= as_exponent(other)._recip

    def __gt__(self, other) -> bool:
        return self._recip < as_exponent(other)._recip

    def __ge__(self, other) -> bool:
        return self._recip <= as_exponent(other)._recip

    def __str__(self) -> str:
        if self._recip == 0:
            return "inf"
        v = self.value
        if isinstance(v, Fraction):
            return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        return repr(v)

    def __repr__(self) -> str:
        return f"Exponent({str(self)!r})"


def as_exponent(x: ExponentLike) -> Exponent:
    return x if isinstance(x, Exponent) else Exponent(x)


def conjugate(e: ExponentLike) -> Exponent:
    return as_exponent(e).conjugate()


@dataclass(frozen=True)
class DimensionPair:
    """Dimensions of the two Euclidean factors of a product domain.

    ``d2 == 0`` denotes a single-factor domain, used for one-group
    functions such as marginals, hyperplane slices, and plain
    Hausdorff-Young checks.
    """

    d1: int
    d2: int = 0

    def __post_init__(self):
        if self.d1 < 1:
            raise ValueError(f"first factor dimension must be >= 1, got {self.d1}")
        if self.d2 < 0:
            raise ValueError(f"second factor dimension must be >= 0, got {self.d2}")

    @property
    def total(self) -> int:
        return self.d1 + self.d2


@dataclass(frozen=True)
class ExponentTuple:
    """The exponent quintuple of the bilinear restriction inequality.

    Roles: ``p`` and ``s`` are the outer/inner exponents of the first
    factor function, ``q`` and ``t`` of the second, and ``r`` is the
    target exponent of the restricted transform norm.
    """

    p: Exponent
    s: Exponent
    q: Exponent
    t: Exponent
    r: Exponent

    def __post_init__(self):
        for name in ("p", "s", "q", "t", "r"):
            object.__setattr__(self, name, as_exponent(getattr(self, name)))

    def as_dict(self) -> dict[str, str]:
        return {name: str(getattr(self, name)) for name in ("p", "s", "q", "t", "r")}

    def __str__(self) -> str:
        return "(p={p}, s={s}, q={q}, t={t}, r={r})".format(**self.as_dict())


class Admissibility(NamedTuple):
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


class InadmissibleExponents(ValueError):
    """Raised when an operation requires an admissible exponent tuple."""

    def __init__(self, reason: str, exponents: ExponentTuple):
        self.reason = reason
        self.exponents = exponents
        super().__init__(f"inadmissible exponents {exponents}: violates {reason}")


def _reciprocals_equal(x: Fraction | float, y: Fraction | float) -> bool:
    if isinstance(x, Fraction) and isinstance(y, Fraction):
        return x == y
    return abs(float(x) - float(y)) <= REL_TOL


def admissible(exponents: ExponentTuple) -> Admissibility:
    """Decide the two exponent relations plus the r >= 2 range gate.

    Checks, in order: 1/s + 1/t = 1 ("s-t-relation"), then
    1/r = 1 - 1/p - 1/q ("r-relation"), then r >= 2 ("r-range").
    The reason names the first violated relation.
    """
    e = exponents
    if not _reciprocals_equal(e.s.reciprocal + e.t.reciprocal, Fraction(1)):
        return Admissibility(False, "s-t-relation")
    target = 1 - e.p.reciprocal - e.q.reciprocal
    if not _reciprocals_equal(e.r.reciprocal, target):
        return Admissibility(False, "r-relation")
    half = Fraction(1, 2)
    rr = e.r.reciprocal
    r_ok = rr <= half if isinstance(rr, Fraction) else float(rr) <= 0.5 + REL_TOL
    if not r_ok:
        return Admissibility(False, "r-range")
    return Admissibility(True, None)


def beckner_constant(r: ExponentLike) -> float:
    """Sharp per-dimension Hausdorff-Young constant for r in [1, 2].

    Equals ``r**(1/2r) * (r')**(-1/2r')`` with ``r'`` the conjugate
    exponent; Gaussians attain it. The value is below 1 strictly inside
    (1, 2) and exactly 1 at both endpoints, which are returned in closed
    form to avoid evaluating the limit expressions.
    """
    e = as_exponent(r)
    recip = e.reciprocal
    in_range = (
        Fraction(1, 2) <= recip <= 1
        if isinstance(recip, Fraction)
        else 0.5 - REL_TOL <= float(recip) <= 1.0 + REL_TOL
    )
    if not in_range:
        raise ValueError(f"sharp constant is defined for exponents in [1, 2], got {e}")
    if recip == 1 or recip == Fraction(1, 2) or float(recip) in (0.5, 1.0):
        return 1.0
    rv = float(e.value)
    tv = rv / (rv - 1.0)
    return rv ** (1.0 / (2.0 * rv)) * tv ** (-1.0 / (2.0 * tv))


def beckner_power(r: ExponentLike, dims: int | DimensionPair) -> float:
    """``beckner_constant(r)`` raised to an integer dimension count.

    A ``DimensionPair`` argument uses its first-factor dimension, the
    power appearing in the hyperplane restriction bound.
    """
    n = dims.d1 if isinstance(dims, DimensionPair) else int(dims)
    if n < 0:
        raise ValueError(f"dimension power must be >= 0, got {n}")
    if n == 0:
        return 1.0
    return beckner_constant(r) ** n


def holder_exponents(
    p: ExponentLike, q: ExponentLike, s: ExponentLike, t: ExponentLike
) -> tuple[Exponent, Exponent]:
    """Exponents (u, v) of a product: 1/u = 1/p + 1/q, 1/v = 1/s + 1/t.

    Rejects reciprocal sums above 1, where no Lebesgue exponent exists.
    """
    u_recip = _added_reciprocal(as_exponent(p), as_exponent(q), "1/p + 1/q")
    v_recip = _added_reciprocal(as_exponent(s), as_exponent(t), "1/s + 1/t")
    return Exponent.from_reciprocal(u_recip), Exponent.from_reciprocal(v_recip)


def _added_reciprocal(a: Exponent, b: Exponent, label: str) -> Fraction | float:
    total = a.reciprocal + b.reciprocal
    if isinstance(total, Fraction):
        if total > 1:
            raise ValueError(f"{label} = {total} exceeds 1")
        return total
    if total > 1.0 + REL_TOL:
        raise ValueError(f"{label} = {total} exceeds 1")
    return min(float(total), 1.0)
