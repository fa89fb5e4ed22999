# Why the same-order mixed-norm bound fails for s < p: shear a product.
# F_t(x, y) = f_t(x) g(y - x) with f_t the L^p-normalized dilation keeps
# the mixed (p, s) norm fixed while the transform-side norm grows like
# t^(1/s' - 1/p') as t -> 0. A log-log fit over a 32:1 dilation range
# recovers that exponent.

import math

from mixnorm import blowup_sweep

# ----------------------------------------------------------------------
# The divergent case (p, s) = (2, 4/3): predicted slope 1/4' - ... =
# 1/(4/3)' - 1/2' = 1/4 - 1/2 = -1/4

report = blowup_sweep(2, "4/3")
print(f"{'t':>10} {'ratio':>12} {'continuum':>12} {'rhs':>10} {'dft err':>10}")
prefactor = 2.0 ** (-0.25) * (4.0 / 3.0) ** 0.375
for t, ratio, rhs, err in zip(
    report.parameter_values,
    report.observed,
    report.details["rhs"],
    report.details["oracle_max_error"],
):
    continuum = t ** (-0.25) * (1 + t * t) ** 0.125 * prefactor
    print(f"{t:>10.5f} {ratio:>12.6f} {continuum:>12.6f} {rhs:>10.6f} {err:>10.2e}")

print()
print(f"fitted slope:   {report.fitted_slope:+.4f}")
print(f"expected slope: {report.expected_slope:+.4f}")
print(f"passed: {report.passed}  ({report.criterion})")

# ----------------------------------------------------------------------
# Each sweep point chose its own grid (the shear support grows like 1/t)

for t, g in zip(report.parameter_values, report.details["grids"]):
    print(f"t = {t:<8.5f} grid: n = {g['n']:>5}, extent = {g['extent']:.1f}")

# ----------------------------------------------------------------------
# Control: at s = p the same family stays flat -- the bound is safe on
# the diagonal, and the blowup really is a property of s < p

flat = blowup_sweep(2, 2, t_values=(1.0, 0.5, 0.25, 0.125))
print()
print(f"(2, 2) fitted slope: {flat.fitted_slope:+.5f}  observed: "
      + " ".join(f"{v:.6f}" for v in flat.observed))
assert math.isclose(flat.expected_slope, 0.0)
