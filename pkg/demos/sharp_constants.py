# Sharp Hausdorff-Young constants C_r = r^(1/2r) * (r')^(-1/2r'), the
# per-dimension best constants in ||f-hat||_{r'} <= C_r^n ||f||_r.
# Gaussians attain them; C_r < 1 strictly inside (1, 2).

import numpy as np

from mixnorm import Exponent, beckner_constant, beckner_power

# ----------------------------------------------------------------------
# A table over the standard exponents

print(f"{'r':>6} {'r_conj':>8} {'C_r':>20} {'C_r^2':>20}")
for raw in ("1", "6/5", "4/3", "3/2", "5/3", "2"):
    r = Exponent(raw)
    print(
        f"{str(r):>6} {str(r.conjugate()):>8} "
        f"{beckner_constant(r):>20.15f} {beckner_power(r, 2):>20.15f}"
    )

# ----------------------------------------------------------------------
# The endpoints are exactly 1 -- not 1 up to roundoff

print()
print("C_1 == 1.0:", beckner_constant(1) == 1.0)
print("C_2 == 1.0:", beckner_constant(2) == 1.0)

# ----------------------------------------------------------------------
# Strict inequality in the interior: scan a fine grid and report the
# minimum, which lands near r = 4/3 (the familiar 0.9367 value)

grid = np.linspace(1.0, 2.0, 402)[1:-1]
values = [beckner_constant(float(r)) for r in grid]
best = int(np.argmin(values))
print()
print(f"min C_r over (1,2) grid: {values[best]:.15f} at r = {grid[best]:.4f}")
print("all interior values < 1:", max(values) < 1.0)
