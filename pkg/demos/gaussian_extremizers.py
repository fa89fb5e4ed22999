# Product Gaussians are the extremizers: every inequality in the family
# holds with ratio exactly 1 on them. Running the five checks on the
# standard Gaussian is therefore both a sharpness demonstration and a
# calibration of the discretization (any deviation from 1 is grid error).

from mixnorm import (
    ExponentTuple,
    GridSpec,
    check_bilinear,
    check_hausdorff_young,
    check_restriction,
    check_same_order,
    check_variant,
    gaussian_product,
)

grid2 = GridSpec.default()
grid1 = GridSpec.default(d2=0)
G2 = gaussian_product(grid2, [1.0, 1.0])
G1 = gaussian_product(grid1, [1.0])

# ----------------------------------------------------------------------
# One-exponent checks across the range

print(f"{'check':>16} {'exponents':>14} {'ratio':>20}")
for p in ("4/3", "3/2", "2"):
    r = check_hausdorff_young(G1, p)
    print(f"{'hausdorff_young':>16} {'p=' + p:>14} {r.ratio:>20.15f}")
for p in ("4/3", "3/2", "2"):
    r = check_restriction(G2, p)
    print(f"{'restriction':>16} {'p=' + p:>14} {r.ratio:>20.15f}")

# ----------------------------------------------------------------------
# Two-exponent transform bounds

for p, s in (("4/3", "3/2"), ("3/2", "2"), ("2", "2")):
    r = check_variant(G2, p, s)
    print(f"{'variant':>16} {'p='+p+' s='+s:>14} {r.ratio:>20.15f}")
    r = check_same_order(G2, p, s)
    print(f"{'same_order':>16} {'p='+p+' s='+s:>14} {r.ratio:>20.15f}")

# ----------------------------------------------------------------------
# The bilinear form, at the Plancherel corner of the admissible set

exps = ExponentTuple(2, 2, 2, 2, "inf")
r = check_bilinear(G2, G2, exps)
print(f"{'bilinear':>16} {'p=s=q=t=2':>14} {r.ratio:>20.15f}")
print()
print("lhs = sup of the sliced transform:", f"{r.lhs:.15f}")
print("bound = C_1 * ||F||_22 * ||G||_22:", f"{r.bound:.15f}")
