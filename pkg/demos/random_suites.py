# Property-testing the inequalities: seeded random Gaussian-mixture
# ensembles, every ratio must stay at most 1 + 1e-2 (the discretization
# budget). The ensembles are drawn inside containment bounds, so grid
# truncation cannot manufacture a fake violation.

from mixnorm import (
    GridSpec,
    ensemble_trials,
    random_admissible_tuples,
    run_suite,
)

grid2 = GridSpec.default()
grid1 = GridSpec.default(d2=0)
trials2 = ensemble_trials(grid2, 25, seed=2024)
trials1 = ensemble_trials(grid1, 25, seed=2025)


def summarize(name, reports):
    ratios = [r.ratio for r in reports if r.ratio is not None]
    failures = sum(1 for r in reports if not r.degenerate and not r.passed)
    print(
        f"{name:>16}: {len(reports):>3} checks, worst ratio {max(ratios):.4f}, "
        f"median {sorted(ratios)[len(ratios) // 2]:.4f}, failures {failures}"
    )


# ----------------------------------------------------------------------
# One suite per inequality; exponents picked inside each hypothesis

summarize("hausdorff_young", run_suite("hausdorff_young", trials1, p="4/3"))
summarize("restriction", run_suite("restriction", trials2, p="4/3"))
summarize("variant", run_suite("variant", trials2, p="4/3", s="3/2"))
summarize("same_order", run_suite("same_order", trials2, p="4/3", s="3/2"))

# ----------------------------------------------------------------------
# The bilinear suite draws admissible rational tuples: 1/s + 1/t = 1,
# 1/r = 1 - 1/p - 1/q, r >= 2, all exact in Fraction arithmetic

tuples = random_admissible_tuples(4, seed=9)
for exps in tuples:
    print(f"admissible tuple: p={exps.p} s={exps.s} q={exps.q} t={exps.t} r={exps.r}")
summarize("bilinear", run_suite("bilinear", trials2[:10], exponent_tuples=tuples))
