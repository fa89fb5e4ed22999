"""Closed-form Gaussian mixtures used as analytic test functions.

Every generated family reduces to terms of the shape

    c * exp(-pi * a * (x - mu)**2) * exp(2j * pi * beta * x)

which are closed under the Fourier transform (convention
``F f(xi) = integral exp(-2 pi i x xi) f(x) dx``), under dilation, and
under multiplication. That closure gives exact re-evaluation of dilated
and sheared families and closed-form norms and tail bounds, which the
numerical pipeline is checked against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import erfc

__all__ = ["GaussianTerm", "GaussianMix", "SeparableSum", "unit_gaussian"]


@dataclass(frozen=True)
class GaussianTerm:
    """One modulated Gaussian, ``c e^{-pi a (x-mu)^2} e^{2 pi i beta x}``."""

    amplitude: complex = 1.0
    scale: float = 1.0
    center: float = 0.0
    modulation: float = 0.0

    def __post_init__(self):
        if not self.scale > 0:
            raise ValueError(f"scale must be positive, got {self.scale}")

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        envelope = np.exp(-math.pi * self.scale * (x - self.center) ** 2)
        if self.modulation == 0.0:
            return self.amplitude * envelope.astype(np.complex128)
        return self.amplitude * envelope * np.exp(2j * math.pi * self.modulation * x)

    def fourier(self) -> "GaussianTerm":
        """Exact transform; a width-a Gaussian maps to width 1/a.

        Modulation and center trade places (up to sign) and the constant
        ``a**-1/2 e^{2 pi i mu beta}`` folds into the amplitude.
        """
        amp = (
            self.amplitude
            / math.sqrt(self.scale)
            * np.exp(2j * math.pi * self.center * self.modulation)
        )
        return GaussianTerm(complex(amp), 1.0 / self.scale, self.modulation, -self.center)

    def dilate(self, t: float, norm_reciprocal: float = 0.0) -> "GaussianTerm":
        """Map f to ``t**(1/p) f(t x)``; ``norm_reciprocal`` is 1/p.

        With 1/p = 0 this is the plain substitution x -> t x.
        """
        if not t > 0:
            raise ValueError(f"dilation parameter must be positive, got {t}")
        return GaussianTerm(
            self.amplitude * t**norm_reciprocal,
            self.scale * t * t,
            self.center / t,
            self.modulation * t,
        )

    def lp_norm(self, p: float) -> float:
        """Continuum L^p norm: ``|c| (p a)^(-1/2p)``; sup norm at p=inf."""
        if math.isinf(p):
            return abs(self.amplitude)
        return abs(self.amplitude) * (p * self.scale) ** (-0.5 / p)

    def half_width(self, tail: float = 1e-15) -> float:
        """Distance from the center at which |f| falls to tail * |c|."""
        return math.sqrt(math.log(1.0 / tail) / (math.pi * self.scale))

    def support_radius(self, tail: float = 1e-15) -> float:
        return abs(self.center) + self.half_width(tail)

    def mass_fraction_outside(self, radius: float) -> float:
        """Fraction of the L^2 mass outside [-radius, radius]."""
        c = math.sqrt(2.0 * math.pi * self.scale)
        return 0.5 * (erfc(c * (radius - self.center)) + erfc(c * (radius + self.center)))

    def inner(self, other: "GaussianTerm") -> complex:
        """Continuum L^2 inner product with another term, closed form."""
        a = math.pi * (self.scale + other.scale)
        b = 2.0 * math.pi * (self.scale * self.center + other.scale * other.center) + 2j * math.pi * (
            self.modulation - other.modulation
        )
        const = -math.pi * (self.scale * self.center**2 + other.scale * other.center**2)
        gauss = math.sqrt(math.pi / a) * np.exp(b * b / (4.0 * a) + const)
        return complex(self.amplitude * np.conj(other.amplitude) * gauss)


@dataclass(frozen=True)
class GaussianMix:
    """A finite sum of one-dimensional Gaussian terms."""

    terms: tuple[GaussianTerm, ...]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("a mixture needs at least one term")

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        out = self.terms[0].evaluate(x)
        for term in self.terms[1:]:
            out = out + term.evaluate(x)
        return out

    def fourier(self) -> "GaussianMix":
        return GaussianMix(tuple(t.fourier() for t in self.terms))

    def dilate(self, t: float, norm_reciprocal: float = 0.0) -> "GaussianMix":
        return GaussianMix(tuple(term.dilate(t, norm_reciprocal) for term in self.terms))

    def scaled(self, c: complex) -> "GaussianMix":
        return GaussianMix(
            tuple(
                GaussianTerm(term.amplitude * c, term.scale, term.center, term.modulation)
                for term in self.terms
            )
        )

    def lp_norm(self, p: float) -> float:
        if len(self.terms) != 1:
            raise ValueError("closed-form L^p norms are available for single terms only")
        return self.terms[0].lp_norm(p)

    def l2_norm(self) -> float:
        """Continuum L^2 norm of the full sum via the Gram matrix."""
        total = 0.0
        for a in self.terms:
            for b in self.terms:
                total += a.inner(b).real
        return math.sqrt(max(total, 0.0))

    def support_radius(self, tail: float = 1e-15) -> float:
        return max(term.support_radius(tail) for term in self.terms)

    def bandwidth_radius(self, tail: float = 1e-15) -> float:
        return self.fourier().support_radius(tail)

    def max_mass_fraction_outside(self, radius: float) -> float:
        return max(term.mass_fraction_outside(radius) for term in self.terms)


@dataclass(frozen=True)
class SeparableSum:
    """A sum of products of per-axis Gaussian terms on R^ndim.

    Each entry of ``terms`` holds one Gaussian term per axis; the value of
    the entry at a point is the product of its factors. Transforms apply
    factor by factor, so the object is closed under the full and partial
    Fourier transforms.
    """

    terms: tuple[tuple[GaussianTerm, ...], ...]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("a separable sum needs at least one term")
        ndim = len(self.terms[0])
        if ndim < 1 or any(len(t) != ndim for t in self.terms):
            raise ValueError("every term needs the same positive number of axis factors")

    @property
    def ndim(self) -> int:
        return len(self.terms[0])

    def evaluate_grid(self, axis_coords: list[np.ndarray] | tuple[np.ndarray, ...]) -> np.ndarray:
        if len(axis_coords) != self.ndim:
            raise ValueError(f"expected {self.ndim} coordinate axes, got {len(axis_coords)}")
        shape = tuple(len(c) for c in axis_coords)
        out = np.zeros(shape, dtype=np.complex128)
        for factors in self.terms:
            term_values = factors[0].evaluate(axis_coords[0])
            for axis in range(1, self.ndim):
                term_values = np.multiply.outer(term_values, factors[axis].evaluate(axis_coords[axis]))
            out += term_values
        return out

    def fourier(self, axes: tuple[int, ...] | None = None) -> "SeparableSum":
        selected = set(range(self.ndim) if axes is None else axes)
        return SeparableSum(
            tuple(
                tuple(f.fourier() if axis in selected else f for axis, f in enumerate(factors))
                for factors in self.terms
            )
        )

    def axis_terms(self, axis: int) -> tuple[GaussianTerm, ...]:
        return tuple(factors[axis] for factors in self.terms)

    def as_mix(self) -> GaussianMix:
        """Flatten a one-axis sum into a plain mixture."""
        if self.ndim != 1:
            raise ValueError("only one-axis sums flatten to a mixture")
        return GaussianMix(tuple(factors[0] for factors in self.terms))

    @classmethod
    def from_mix(cls, mix: GaussianMix) -> "SeparableSum":
        return cls(tuple((term,) for term in mix.terms))


def unit_gaussian() -> GaussianMix:
    """The standard Gaussian ``e^{-pi x^2}``, fixed point of the transform."""
    return GaussianMix((GaussianTerm(),))
