# The s = 1 endpoint: pairing f(x) with a sheared near-delta
# delta_eps(y + x) makes the L^inf-over-eta norm of the transform
# diverge like eps^(-1/p') while the mixed (p, 1) norm stays put. The
# same bump without the shear stays bounded by the restriction constant,
# so the divergence is the coupling's doing, not the concentration's.

from mixnorm import delta_divergence_demo

# ----------------------------------------------------------------------
# Sheared: ratios climb as the bump sharpens (continuum value
# C_p ((1 + eps^2)/eps^2)^(1/2p'), here p = 2)

sheared = delta_divergence_demo(2)
print(f"{'eps':>8} {'ratio':>12} {'continuum':>12}")
for eps, ratio in zip(sheared.parameter_values, sheared.observed):
    continuum = ((1 + eps * eps) / (eps * eps)) ** 0.25
    print(f"{eps:>8.4f} {ratio:>12.6f} {continuum:>12.6f}")
print(f"growth across the 16:1 range: {sheared.observed[-1] / sheared.observed[0]:.3f}x")
print(f"criterion: {sheared.criterion}")
print(f"passed: {sheared.passed}")

# ----------------------------------------------------------------------
# Unsheared control: same bump, no coupling, bounded ratios

control = delta_divergence_demo(2, shear=False)
print()
print(f"{'eps':>8} {'ratio':>12}")
for eps, ratio in zip(control.parameter_values, control.observed):
    print(f"{eps:>8.4f} {ratio:>12.6f}")
print(f"criterion: {control.criterion}")
print(f"passed: {control.passed}")
