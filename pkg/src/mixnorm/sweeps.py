"""Scaling-law sweeps: where the mixed-norm bounds break, and how fast.

Three parameter sweeps, each summarized by a log-log slope fit:

* ``blowup_sweep`` drives the dilation-shear family toward small t and
  watches the same-order norm ratio diverge like t^(1/s' - 1/p').
* ``delta_divergence_demo`` shrinks a sheared near-delta and watches the
  s = 1 ratio climb without bound.
* ``necessity_sweep`` dilates one coordinate group of a bilinear trial;
  the ratio drifts with a slope equal to the exponent-relation mismatch,
  so an admissible tuple gives slope zero.

Every sweep evaluates analytic Gaussian data, so a closed-form transform
is available as an independent oracle for the DFT pipeline at each
point.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
import scipy.fft

from .exponents import (
    Exponent,
    ExponentLike,
    ExponentTuple,
    as_exponent,
    beckner_power,
)
from .gaussians import GaussianMix, GaussianTerm, SeparableSum, unit_gaussian
from .grids import FREQUENCY, SPACE, DimensionPair, GridSpec, SampledFunction
from .mixed_norms import MixedNormSpec, mixed_norm, plain_norm
from .sampling import TAIL, GenerationError, near_delta_family, shear_product
from .transform import fourier, slice_second_zero

__all__ = [
    "SweepReport",
    "closed_form_transform",
    "blowup_sweep",
    "delta_divergence_demo",
    "necessity_sweep",
    "default_t_values",
    "default_epsilon_values",
    "default_lambda_values",
]

#: Safety factor between a family's essential radius and the grid edge
#: when a sweep chooses its own grid.
MARGIN = 1.15

SLOPE_TOL = 0.05
FLAT_TOL = 0.02


@dataclass(frozen=True)
class SweepReport:
    """One sweep: parameters, observations, and the fitted power law."""

    kind: str
    parameter_values: tuple[float, ...]
    observed: tuple[float, ...]
    fitted_slope: float
    expected_slope: float
    residual: float
    passed: bool
    criterion: str
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        diffs = np.diff(self.parameter_values)
        if not (np.all(diffs > 0) or np.all(diffs < 0)):
            raise ValueError("parameter values must be strictly monotone")
        if any(v <= 0 for v in self.observed):
            raise ValueError("observed values must be strictly positive")

    def footer(self) -> dict:
        return {
            "fitted_slope": self.fitted_slope,
            "expected_slope": self.expected_slope,
            "residual": self.residual,
            "kind": self.kind,
            "passed": self.passed,
            "criterion": self.criterion,
        }

    def to_csv(self) -> str:
        lines = ["parameter,observed,log_parameter,log_observed"]
        for x, y in zip(self.parameter_values, self.observed):
            lines.append(f"{x!r},{y!r},{math.log(x)!r},{math.log(y)!r}")
        lines.append("# " + json.dumps(self.footer(), sort_keys=True))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = self.footer()
        payload["parameter_values"] = list(self.parameter_values)
        payload["observed"] = list(self.observed)
        payload["details"] = self.details
        return json.dumps(payload, sort_keys=True)


def _fit_loglog(parameters: Sequence[float], observed: Sequence[float]) -> tuple[float, float]:
    """Least-squares slope in log-log, plus the max absolute deviation."""
    logx = np.log(np.asarray(parameters, dtype=float))
    logy = np.log(np.asarray(observed, dtype=float))
    slope, intercept = np.polyfit(logx, logy, 1)
    residual = float(np.max(np.abs(logy - (slope * logx + intercept))))
    return float(slope), residual


def default_t_values(count: int = 6) -> tuple[float, ...]:
    """Dilations 1, 1/2, ..., halving each step."""
    return tuple(0.5**k for k in range(count))


def default_epsilon_values(grid: GridSpec | None = None, count: int = 5) -> tuple[float, ...]:
    """Widths spanning 16:1, stopping above the resolvability floor."""
    grid = grid if grid is not None else GridSpec.default()
    top = grid.extent / 8.0
    values = tuple(top * 0.5**k for k in range(count))
    if values[-1] < 2.0 * grid.spacing:
        raise GenerationError(
            f"epsilon range reaches {values[-1]:.4g}, below the floor "
            f"{2.0 * grid.spacing:.4g}; refine the grid"
        )
    return values


def default_lambda_values(count: int = 5) -> tuple[float, ...]:
    """Geometric dilation scales centered at 1 (1/2 up to 2)."""
    half = (count - 1) // 2
    return tuple(2.0 ** (k / max(half, 1)) for k in range(-half, count - half))


def closed_form_transform(
    f: GaussianMix,
    g: GaussianMix,
    t: float,
    grid: GridSpec,
    p: ExponentLike = 2,
) -> SampledFunction:
    """The transform of the dilation-shear family, without any DFT.

    For F(x, y) = f_t(x) g(y - x) with f_t(x) = t^{1/p} f(t x), the
    transform is ghat(eta) * t^{-1/p'} * fhat((xi + eta) / t), evaluated
    here directly on the frequency grid. The sweep uses it as an
    independent oracle for ``fourier(shear_product(...))``.
    """
    if not t > 0:
        raise ValueError(f"dilation parameter must be positive, got {t}")
    if grid.dims.d1 != 1 or grid.dims.d2 != 1:
        raise ValueError("the closed form is for the 1+1 dimensional family")
    p = as_exponent(p)
    fhat = f.fourier()
    ridge_width = t * fhat.support_radius(TAIL)
    if ridge_width < 2.0 * grid.freq_spacing:
        raise GenerationError(
            f"dilation t={t:.4g} concentrates the transform below the "
            "frequency resolution",
            required_extent=2.0 / ridge_width,
        )
    ghat = g.fourier()
    xi = grid.freq_coords()
    conj_recip = 1.0 - float(p.reciprocal)
    scale = t ** (-conj_recip)
    values = ghat.evaluate(xi)[None, :] * scale * fhat.evaluate((xi[:, None] + xi[None, :]) / t)
    return SampledFunction(grid, values, (FREQUENCY, FREQUENCY))


def _auto_grid(fm: GaussianMix, gm: GaussianMix) -> GridSpec:
    """Smallest even fast-FFT grid containing the sheared pair."""
    radius = fm.support_radius(TAIL) + gm.support_radius(TAIL)
    bandwidth = fm.bandwidth_radius(TAIL) + gm.bandwidth_radius(TAIL)
    extent = 2.0 * MARGIN * radius
    n = int(math.ceil(extent * 2.0 * MARGIN * bandwidth))
    n = scipy.fft.next_fast_len(max(n, 16))
    while n % 2:
        n = scipy.fft.next_fast_len(n + 1)
    return GridSpec(DimensionPair(1, 1), n, extent)


def blowup_sweep(
    p: ExponentLike,
    s: ExponentLike,
    t_values: Sequence[float] | None = None,
    grid: GridSpec | None = None,
) -> SweepReport:
    """Ratio of the same-order norms on the dilation-shear family.

    Expected growth t^(1/s' - 1/p'): negative slope, hence blowup as
    t -> 0, whenever s < p; flat at s = p. The right side is invariant
    in t by construction, and each point cross-checks the DFT against
    the closed-form transform.
    """
    p, s = as_exponent(p), as_exponent(s)
    one, two = Exponent(1), Exponent(2)
    if not (one < s <= p <= two):
        raise ValueError(f"blowup sweep needs 1 < s <= p <= 2, got p={p}, s={s}")
    t_values = tuple(t_values) if t_values is not None else default_t_values()
    f = unit_gaussian()
    g = unit_gaussian()
    p_recip = float(p.reciprocal)

    observed = []
    rhs_values = []
    oracle_errors = []
    grids = []
    lhs_spec = MixedNormSpec.standard(p.conjugate(), s.conjugate())
    rhs_spec = MixedNormSpec.standard(p, s)
    for t in t_values:
        f_t = f.dilate(t, p_recip)
        point_grid = grid if grid is not None else _auto_grid(f_t, g)
        F = shear_product(f_t, g, point_grid)
        Fhat = fourier(F)
        oracle = closed_form_transform(f, g, t, point_grid, p)
        oracle_errors.append(float(np.max(np.abs(Fhat.values - oracle.values))))
        lhs = mixed_norm(Fhat, lhs_spec)
        rhs = mixed_norm(F, rhs_spec)
        observed.append(lhs / rhs)
        rhs_values.append(rhs)
        grids.append({"n": point_grid.n, "extent": point_grid.extent})

    expected = float(s.conjugate().reciprocal - p.conjugate().reciprocal)
    slope, residual = _fit_loglog(t_values, observed)
    tol = FLAT_TOL if s == p else SLOPE_TOL
    passed = abs(slope - expected) <= tol
    return SweepReport(
        kind="blowup",
        parameter_values=t_values,
        observed=tuple(observed),
        fitted_slope=slope,
        expected_slope=expected,
        residual=residual,
        passed=passed,
        criterion=f"|fitted_slope - expected_slope| <= {tol}",
        details={
            "p": str(p),
            "s": str(s),
            "rhs": rhs_values,
            "oracle_max_error": oracle_errors,
            "grids": grids,
        },
    )


def delta_divergence_demo(
    p: ExponentLike,
    epsilon_values: Sequence[float] | None = None,
    grid: GridSpec | None = None,
    shear: bool = True,
) -> SweepReport:
    """The s = 1 ratio under a shrinking sheared near-delta.

    With the shear on, the ratio grows without bound as epsilon shrinks;
    the pass criterion is strict growth plus at least doubling across a
    16:1 range. With the shear off the same ratio stays below the
    restriction bound, which is the control criterion.
    """
    p = as_exponent(p)
    if not (Exponent(1) < p <= Exponent(2)):
        raise ValueError(f"the divergence regime needs p in (1, 2], got {p}")
    grid = grid if grid is not None else GridSpec.default()
    epsilon_values = (
        tuple(epsilon_values) if epsilon_values is not None else default_epsilon_values(grid)
    )
    f = unit_gaussian()
    lhs_spec = MixedNormSpec.standard(p.conjugate(), "inf")
    rhs_spec = MixedNormSpec.standard(p, 1)
    observed = []
    for epsilon in epsilon_values:
        F = near_delta_family(grid, f, epsilon, shear=shear)
        lhs = mixed_norm(fourier(F), lhs_spec)
        rhs = mixed_norm(F, rhs_spec)
        observed.append(lhs / rhs)
    slope, residual = _fit_loglog(epsilon_values, observed)

    if shear:
        increasing = all(b > a for a, b in zip(observed, observed[1:]))
        doubled = observed[-1] >= 2.0 * observed[0]
        passed = increasing and doubled
        criterion = "ratios strictly increase as epsilon shrinks and at least double"
        expected = -(1.0 - float(p.reciprocal))  # asymptotic exponent -1/p'
    else:
        ceiling = beckner_power(p, grid.dims.d1) * 1.01
        passed = max(observed) <= ceiling
        criterion = f"ratios stay below the restriction bound {ceiling:.6g}"
        expected = 0.0
    return SweepReport(
        kind="delta",
        parameter_values=epsilon_values,
        observed=tuple(observed),
        fitted_slope=slope,
        expected_slope=expected,
        residual=residual,
        passed=passed,
        criterion=criterion,
        details={"p": str(p), "shear": shear, "grid": {"n": grid.n, "extent": grid.extent}},
    )


def _dilated_product(scale: float, axis: int) -> SeparableSum:
    """Standard 2-d product Gaussian with one axis dilated by ``scale``."""
    factors = [GaussianTerm(1.0, 1.0), GaussianTerm(1.0, 1.0)]
    factors[axis] = GaussianTerm(1.0, scale**2)
    return SeparableSum((tuple(factors),))


def necessity_sweep(
    exponents: ExponentTuple,
    lambda_values: Sequence[float] | None = None,
    grid: GridSpec | None = None,
    axis: str = "first",
) -> SweepReport:
    """Drift of the bilinear ratio under one-group dilations.

    Dilating the first group by lambda scales the ratio like
    lambda^(1/r - (1 - 1/p - 1/q)); dilating the second group, like
    lambda^(1/s + 1/t - 1). Either exponent vanishes exactly when the
    corresponding relation holds, so admissible tuples sweep flat and a
    violated relation shows up as the predicted slope. The tuple is
    deliberately not gated on admissibility; only r >= 2 is required so
    the bound's constant stays defined.
    """
    if axis not in ("first", "second"):
        raise ValueError(f"axis must be 'first' or 'second', got {axis!r}")
    if exponents.r < Exponent(2):
        raise ValueError("necessity sweeps need r >= 2 so the constant is defined")
    grid = grid if grid is not None else GridSpec.default()
    if grid.dims.d1 != 1 or grid.dims.d2 != 1:
        raise ValueError("necessity sweeps run on the 1+1 dimensional grid")
    lambda_values = (
        tuple(lambda_values) if lambda_values is not None else default_lambda_values()
    )
    axis_index = 0 if axis == "first" else 1
    constant = beckner_power(exponents.r.conjugate(), grid.dims.d1)
    x = grid.space_coords()
    f_spec = MixedNormSpec.standard(exponents.p, exponents.s)
    g_spec = MixedNormSpec.standard(exponents.q, exponents.t)

    observed = []
    for lam in lambda_values:
        separable = _dilated_product(lam, axis_index)
        for ax in range(2):
            term = separable.axis_terms(ax)[0]
            if term.mass_fraction_outside(grid.extent / 2.0) > 1e-8:
                raise GenerationError(
                    f"lambda={lam:.4g} pushes the family off the grid",
                    required_extent=2.0 * term.support_radius(TAIL),
                )
            if term.fourier().mass_fraction_outside(grid.freq_extent / 2.0) > 1e-8:
                raise GenerationError(
                    f"lambda={lam:.4g} pushes the bandwidth past the frequency extent; "
                    "refine the grid"
                )
        values = separable.evaluate_grid([x, x])
        F = SampledFunction(grid, values, (SPACE, SPACE), analytic=separable)
        product = F.with_values(F.values * F.values)
        lhs = plain_norm(slice_second_zero(fourier(product)), exponents.r)
        bound = constant * mixed_norm(F, f_spec) * mixed_norm(F, g_spec)
        observed.append(lhs / bound)

    if axis == "first":
        mismatch = exponents.r.reciprocal - (
            1 - exponents.p.reciprocal - exponents.q.reciprocal
        )
    else:
        mismatch = exponents.s.reciprocal + exponents.t.reciprocal - 1
    expected = float(grid.dims.d1 if axis == "first" else grid.dims.d2) * float(mismatch)
    slope, residual = _fit_loglog(lambda_values, observed)
    tol = FLAT_TOL if expected == 0.0 else SLOPE_TOL
    passed = abs(slope - expected) <= tol
    return SweepReport(
        kind="necessity",
        parameter_values=lambda_values,
        observed=tuple(observed),
        fitted_slope=slope,
        expected_slope=expected,
        residual=residual,
        passed=passed,
        criterion=f"|fitted_slope - expected_slope| <= {tol}",
        details={
            "axis": axis,
            "exponents": {k: str(v) for k, v in exponents.as_dict().items()},
            "grid": {"n": grid.n, "extent": grid.extent},
        },
    )
