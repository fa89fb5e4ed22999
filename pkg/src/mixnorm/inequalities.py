"""Ratio harnesses for the mixed-norm Fourier inequalities.

Each check evaluates one inequality as lhs / bound on a concrete sampled
function and wraps the outcome in a ``RatioReport``. A report passes
exactly when the ratio is at most 1 + tolerance; a zero or non-finite
bound marks the trial degenerate, which never counts as a pass.

Default tolerances follow the discretization error budget: 1e-2 for
random-ensemble suites, with tighter values passed explicitly for
Gaussian sharpness (1e-3) and pure-Plancherel cases (1e-6).
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .exponents import (
    Exponent,
    ExponentLike,
    ExponentTuple,
    InadmissibleExponents,
    admissible,
    as_exponent,
    beckner_power,
)
from .grids import GridSpec, SampledFunction
from .mixed_norms import MixedNormSpec, mixed_norm, plain_norm
from .sampling import random_ensemble
from .transform import fourier, slice_second_zero

__all__ = [
    "RatioReport",
    "INEQUALITY_IDS",
    "SUITE_TOL",
    "GAUSSIAN_TOL",
    "PLANCHEREL_TOL",
    "check_restriction",
    "check_bilinear",
    "check_variant",
    "check_same_order",
    "check_hausdorff_young",
    "random_admissible_tuples",
    "ensemble_trials",
    "run_suite",
    "reports_to_jsonl",
    "reports_to_csv",
]

INEQUALITY_IDS = ("restriction", "bilinear", "variant", "same_order", "hausdorff_young")

SUITE_TOL = 1e-2
GAUSSIAN_TOL = 1e-3
PLANCHEREL_TOL = 1e-6

_ONE = Exponent(1)
_TWO = Exponent(2)


@dataclass(frozen=True)
class RatioReport:
    """One inequality trial: left side, bound, and the verdict."""

    inequality_id: str
    lhs: float
    bound: float
    ratio: float | None
    tolerance: float
    passed: bool
    degenerate: bool = False
    descriptors: dict = field(default_factory=dict)

    def json_dict(self) -> dict:
        return {
            "inequality_id": self.inequality_id,
            "lhs": self.lhs,
            "bound": self.bound,
            "ratio": self.ratio,
            "tolerance": self.tolerance,
            "pass": self.passed,
            "degenerate": self.degenerate,
            "descriptors": self.descriptors,
        }

    def json_line(self) -> str:
        return json.dumps(self.json_dict(), sort_keys=True)


def _exponent_cell(report: RatioReport) -> str:
    exps = report.descriptors.get("exponents", {})
    return " ".join(f"{k}={v}" for k, v in exps.items())


def reports_to_jsonl(reports: Iterable[RatioReport]) -> str:
    return "".join(r.json_line() + "\n" for r in reports)


def reports_to_csv(reports: Iterable[RatioReport]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["inequality_id", "exponents", "ratio", "pass"])
    for r in reports:
        ratio = "" if r.ratio is None else repr(r.ratio)
        writer.writerow([r.inequality_id, _exponent_cell(r), ratio, r.passed])
    return buf.getvalue()


def _build_report(
    inequality_id: str,
    lhs: float,
    bound: float,
    tolerance: float,
    exponents: dict,
    functions: dict,
) -> RatioReport:
    descriptors = {"exponents": exponents, "functions": functions}
    if bound <= 0.0 or not math.isfinite(bound) or not math.isfinite(lhs):
        return RatioReport(
            inequality_id, lhs, bound, None, tolerance, False, True, descriptors
        )
    ratio = lhs / bound
    return RatioReport(
        inequality_id, lhs, bound, ratio, tolerance, ratio <= 1.0 + tolerance, False, descriptors
    )


def _require_range(e: Exponent, name: str) -> None:
    if not (_ONE <= e <= _TWO):
        raise ValueError(f"{name} must lie in [1, 2], got {e}")


def _check_grid(F: SampledFunction, grid: GridSpec | None) -> None:
    if grid is not None and grid != F.grid:
        raise ValueError("explicit grid disagrees with the function's grid")


def _descriptor_of(F: SampledFunction) -> dict | None:
    return F.descriptor.to_dict() if F.descriptor is not None else None


def check_restriction(
    F: SampledFunction,
    p: ExponentLike,
    grid: GridSpec | None = None,
    tolerance: float = SUITE_TOL,
) -> RatioReport:
    """Frequency-hyperplane restriction against the (p, 1) mixed norm.

    lhs is the p'-norm of F-hat on the slice xi'' = 0; the bound is
    C_p^{d1} times the mixed (p, 1) norm of F.
    """
    p = as_exponent(p)
    _require_range(p, "p")
    _check_grid(F, grid)
    lhs = plain_norm(slice_second_zero(fourier(F)), p.conjugate())
    bound = beckner_power(p, F.grid.dims.d1) * mixed_norm(F, MixedNormSpec.standard(p, 1))
    return _build_report(
        "restriction", lhs, bound, tolerance, {"p": str(p)}, {"F": _descriptor_of(F)}
    )


def check_bilinear(
    F: SampledFunction,
    G: SampledFunction,
    exponents: ExponentTuple,
    grid: GridSpec | None = None,
    tolerance: float = SUITE_TOL,
) -> RatioReport:
    """Bilinear restriction of a product F·G under an admissible tuple."""
    verdict = admissible(exponents)
    if not verdict:
        raise InadmissibleExponents(verdict.reason, exponents)
    _check_grid(F, grid)
    _check_grid(G, grid)
    if F.grid != G.grid or F.side != G.side:
        raise ValueError("factors must share a grid and side")
    product = F.with_values(F.values * G.values)
    lhs = plain_norm(slice_second_zero(fourier(product)), exponents.r)
    bound = (
        beckner_power(exponents.r.conjugate(), F.grid.dims.d1)
        * mixed_norm(F, MixedNormSpec.standard(exponents.p, exponents.s))
        * mixed_norm(G, MixedNormSpec.standard(exponents.q, exponents.t))
    )
    return _build_report(
        "bilinear",
        lhs,
        bound,
        tolerance,
        {k: str(v) for k, v in exponents.as_dict().items()},
        {"F": _descriptor_of(F), "G": _descriptor_of(G)},
    )


def check_variant(
    F: SampledFunction,
    p: ExponentLike,
    s: ExponentLike,
    grid: GridSpec | None = None,
    tolerance: float = SUITE_TOL,
) -> RatioReport:
    """Reversed-order transform bound: L^{s'} over xi'' outside L^{p'} over xi'."""
    p, s = as_exponent(p), as_exponent(s)
    _require_range(p, "p")
    _require_range(s, "s")
    _check_grid(F, grid)
    Fhat = fourier(F)
    lhs = mixed_norm(Fhat, MixedNormSpec.reversed(s.conjugate(), p.conjugate()))
    d = F.grid.dims
    bound = (
        beckner_power(p, d.d1)
        * beckner_power(s, d.d2)
        * mixed_norm(F, MixedNormSpec.standard(p, s))
    )
    return _build_report(
        "variant", lhs, bound, tolerance, {"p": str(p), "s": str(s)}, {"F": _descriptor_of(F)}
    )


def check_same_order(
    F: SampledFunction,
    p: ExponentLike,
    s: ExponentLike,
    grid: GridSpec | None = None,
    tolerance: float = SUITE_TOL,
) -> RatioReport:
    """Same-order transform bound, valid only for p <= s.

    The regime p > s is exactly where the inequality fails; those
    exponents are rejected here and exercised by the sweep module.
    """
    p, s = as_exponent(p), as_exponent(s)
    _require_range(p, "p")
    _require_range(s, "s")
    if p > s:
        raise ValueError(
            f"p = {p} exceeds s = {s}; the same-order bound fails there "
            "(see the blowup sweep)"
        )
    _check_grid(F, grid)
    Fhat = fourier(F)
    lhs = mixed_norm(Fhat, MixedNormSpec.standard(p.conjugate(), s.conjugate()))
    d = F.grid.dims
    bound = (
        beckner_power(p, d.d1)
        * beckner_power(s, d.d2)
        * mixed_norm(F, MixedNormSpec.standard(p, s))
    )
    return _build_report(
        "same_order", lhs, bound, tolerance, {"p": str(p), "s": str(s)}, {"F": _descriptor_of(F)}
    )


def check_hausdorff_young(
    f: SampledFunction,
    p: ExponentLike,
    tolerance: float = SUITE_TOL,
) -> RatioReport:
    """Plain sharp Hausdorff-Young on a one-group function."""
    p = as_exponent(p)
    _require_range(p, "p")
    if f.grid.dims.d2 != 0:
        raise ValueError("hausdorff_young applies to one-group functions")
    lhs = plain_norm(fourier(f), p.conjugate())
    bound = beckner_power(p, f.grid.dims.d1) * plain_norm(f, p)
    return _build_report(
        "hausdorff_young", lhs, bound, tolerance, {"p": str(p)}, {"f": _descriptor_of(f)}
    )


def random_admissible_tuples(count: int, seed: int) -> list[ExponentTuple]:
    """Random rational tuples satisfying the exponent relations exactly.

    Sampling works in reciprocal space with small denominators: split
    1/r' = 1/p + 1/q with r' in [1, 2], pick conjugate (s, t), and set r
    from the defining relation. Every tuple passes ``admissible``.
    """
    rng = np.random.default_rng(seed)
    tuples: list[ExponentTuple] = []
    while len(tuples) < count:
        d = int(rng.integers(2, 13))
        n = int(rng.integers((d + 1) // 2, d + 1))  # 1/r' = n/d in [1/2, 1]
        k = int(rng.integers(0, n + 1))
        e = int(rng.integers(2, 13))
        m = int(rng.integers(0, e + 1))
        p = Exponent.from_reciprocal(Fraction(k, d))
        q = Exponent.from_reciprocal(Fraction(n - k, d))
        s = Exponent.from_reciprocal(Fraction(m, e))
        t = Exponent.from_reciprocal(Fraction(e - m, e))
        r = Exponent.from_reciprocal(1 - Fraction(n, d))
        candidate = ExponentTuple(p, s, q, t, r)
        if admissible(candidate):
            tuples.append(candidate)
    return tuples


def ensemble_trials(
    grid: GridSpec, count: int, seed: int, complexity: int = 6
) -> list[SampledFunction]:
    """Deterministic list of random-ensemble trial functions."""
    return [random_ensemble(grid, complexity, seed + index) for index in range(count)]


def run_suite(
    inequality_id: str,
    functions: Sequence[SampledFunction],
    p: ExponentLike | None = None,
    s: ExponentLike | None = None,
    exponent_tuples: Sequence[ExponentTuple] | None = None,
    tolerance: float = SUITE_TOL,
) -> list[RatioReport]:
    """Evaluate one inequality on every supplied function.

    For the bilinear check each function is paired with its successor
    (cyclically) and evaluated under every tuple in ``exponent_tuples``.
    """
    if inequality_id not in INEQUALITY_IDS:
        raise ValueError(f"unknown inequality {inequality_id!r}; pick from {INEQUALITY_IDS}")
    reports: list[RatioReport] = []
    if inequality_id == "bilinear":
        if not exponent_tuples:
            raise ValueError("the bilinear suite needs exponent tuples")
        for exps in exponent_tuples:
            for index, F in enumerate(functions):
                G = functions[(index + 1) % len(functions)]
                reports.append(check_bilinear(F, G, exps, tolerance=tolerance))
        return reports
    for F in functions:
        if inequality_id == "restriction":
            reports.append(check_restriction(F, p, tolerance=tolerance))
        elif inequality_id == "variant":
            reports.append(check_variant(F, p, s, tolerance=tolerance))
        elif inequality_id == "same_order":
            reports.append(check_same_order(F, p, s, tolerance=tolerance))
        else:
            reports.append(check_hausdorff_young(F, p, tolerance=tolerance))
    return reports
