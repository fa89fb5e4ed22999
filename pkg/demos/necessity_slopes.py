# Why the exponent relations are necessary, not merely convenient:
# dilate one coordinate group by lambda and watch the bilinear ratio.
# Change of variables predicts drift lambda^(1/r - (1 - 1/p - 1/q)) for
# the first group and lambda^(1/s + 1/t - 1) for the second, so the
# ratio is scale-free exactly when the relations hold. A tuple that
# breaks one relation shows the predicted slope on the matching axis
# and stays flat on the other.

from mixnorm import ExponentTuple, necessity_sweep


def show(label, exps, axis):
    report = necessity_sweep(exps, axis=axis)
    points = "  ".join(
        f"{lam:.3f}:{obs:.4f}"
        for lam, obs in zip(report.parameter_values, report.observed)
    )
    print(f"{label:>24} axis={axis:<6} slope {report.fitted_slope:+.4f} "
          f"(expected {report.expected_slope:+.4f})  [{points}]")


# ----------------------------------------------------------------------
# Admissible: 1/s + 1/t = 1, 1/r = 1 - 1/p - 1/q -- flat on both axes

admissible = ExponentTuple(2, 2, 2, 2, "inf")
show("admissible", admissible, "first")
show("admissible", admissible, "second")

# ----------------------------------------------------------------------
# Break only the r-relation (r = 2 where the relation wants infinity):
# the first-group dilation picks it up; the second group cannot see it

broken_r = ExponentTuple(2, 2, 2, 2, 2)
print()
show("broken r-relation", broken_r, "first")
show("broken r-relation", broken_r, "second")

# ----------------------------------------------------------------------
# Break only the s-t relation (1/4 + 1/4 != 1): visible on the second
# axis, invisible on the first

broken_st = ExponentTuple(2, 4, 2, 4, "inf")
print()
show("broken s-t relation", broken_st, "first")
show("broken s-t relation", broken_st, "second")
