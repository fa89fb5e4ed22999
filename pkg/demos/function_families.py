# The trial-function families, and the containment discipline that makes
# DFT results trustworthy: every generator proves that the essential
# support and bandwidth fit the grid before sampling, and refuses with
# the required extent when they do not.

import tempfile
from pathlib import Path

import numpy as np

from mixnorm import (
    GenerationError,
    GridSpec,
    SampledFunction,
    dilate_first_axis,
    gaussian_product,
    near_delta_family,
    random_ensemble,
    sample_descriptor,
    shear_product,
)
from mixnorm.gaussians import unit_gaussian

grid2 = GridSpec.default()
grid1 = GridSpec.default(d2=0)

# ----------------------------------------------------------------------
# Product Gaussians, random mixtures, shears, near-deltas

families = {
    "gaussian_product": gaussian_product(grid2, [1.0, 2.0]),
    "random_ensemble": random_ensemble(grid2, 6, seed=0),
    "shear_product": shear_product(unit_gaussian(), unit_gaussian(), grid2),
    "near_delta": near_delta_family(grid2, unit_gaussian(), 0.5),
}
for name, F in families.items():
    peak = float(np.max(np.abs(F.values)))
    print(f"{name:>18}: shape {F.values.shape}, peak |F| = {peak:.4f}, "
          f"family tag '{F.descriptor.family}'")

# ----------------------------------------------------------------------
# Containment: a dilation that would overflow the grid is refused, and
# the error names the extent that would have been needed

f = gaussian_product(grid1, [1.0])
narrow = dilate_first_axis(f, 4.0, 2)  # fine: support shrinks
print()
print(f"dilation t=4 accepted, peak {float(np.max(np.abs(narrow.values))):.4f}")
try:
    dilate_first_axis(f, 1.0 / 16.0, 2)  # support ~16x wider than the grid
except GenerationError as error:
    print(f"dilation t=1/16 refused: {error}")

# ----------------------------------------------------------------------
# Descriptors make trials reproducible: save the values plus a JSON
# sidecar, reload, or regenerate from the descriptor alone

workdir = Path(tempfile.mkdtemp(prefix="mixnorm_families_"))
original = families["random_ensemble"]
path = workdir / "trial.npy"
original.save(path)
reloaded = SampledFunction.load(path)
regenerated = sample_descriptor(original.descriptor, grid2)
print()
print(f"saved to {path.name} + sidecar {path.name}.json")
print(f"reload max error:     {float(np.max(np.abs(reloaded.values - original.values))):.1e}")
print(f"regenerate max error: {float(np.max(np.abs(regenerated.values - original.values))):.1e}")
