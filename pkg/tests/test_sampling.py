"""Generator families: containment, reproducibility, analytic closures."""

import math

import numpy as np
import pytest

from mixnorm.gaussians import GaussianMix, GaussianTerm, unit_gaussian
from mixnorm.grids import SPACE, DimensionPair, FunctionDescriptor, GridSpec, SampledFunction
from mixnorm.sampling import (
    GenerationError,
    dilate_first_axis,
    gaussian_product,
    near_delta_family,
    random_ensemble,
    sample_descriptor,
    shear_product,
)

GRID2 = GridSpec.default()
GRID1 = GridSpec.default(d2=0)


class TestGaussianProduct:
    def test_unit_scales_give_the_self_dual_gaussian(self):
        F = gaussian_product(GRID2, [1.0, 1.0])
        x = GRID2.space_coords()
        expected = np.exp(-math.pi * x[:, None] ** 2) * np.exp(-math.pi * x[None, :] ** 2)
        np.testing.assert_allclose(F.values, expected, atol=1e-15)

    def test_values_strictly_positive(self):
        F = gaussian_product(GRID2, [0.9, 1.3])
        assert np.all(F.values.real > 0)
        assert np.all(F.values.imag == 0)

    def test_scale_count_must_match_dims(self):
        with pytest.raises(ValueError):
            gaussian_product(GRID2, [1.0])

    def test_wide_gaussian_rejected_with_required_extent(self):
        with pytest.raises(GenerationError) as err:
            gaussian_product(GRID2, [1e-4, 1.0])
        assert err.value.required_extent is not None
        assert err.value.required_extent > GRID2.extent

    def test_narrow_gaussian_rejected_on_the_frequency_side(self):
        # scale 1e4 fits in space easily but its transform does not
        with pytest.raises(GenerationError):
            gaussian_product(GRID2, [1e4, 1.0])

    def test_descriptor_attached(self):
        F = gaussian_product(GRID2, [1.0, 2.0])
        assert F.descriptor.family == "gaussian_product"
        assert F.descriptor.parameters["scales"] == [1.0, 2.0]


class TestRandomEnsemble:
    def test_seed_determines_values(self):
        a = random_ensemble(GRID2, 6, seed=11)
        b = random_ensemble(GRID2, 6, seed=11)
        np.testing.assert_array_equal(a.values, b.values)
        c = random_ensemble(GRID2, 6, seed=12)
        assert np.max(np.abs(a.values - c.values)) > 1e-6

    def test_single_term_transform_is_a_shifted_envelope(self):
        # K=1: the modulated Gaussian's transform magnitude is the
        # envelope translated to the modulation frequency.
        f = random_ensemble(GRID1, 1, seed=3)
        term_row = f.analytic.terms[0]
        term = term_row[0]
        shifted = term.fourier()
        xi = GRID1.freq_coords()
        np.testing.assert_allclose(
            np.abs(f.analytic.fourier().evaluate_grid([xi])),
            np.abs(shifted.evaluate(xi)),
            rtol=1e-12,
        )
        assert abs(shifted.center - term.modulation) < 1e-12

    def test_containment_on_both_sides(self):
        for seed in range(8):
            F = random_ensemble(GRID2, 6, seed=seed)
            sep = F.analytic
            for axis in range(2):
                for term in sep.axis_terms(axis):
                    assert term.mass_fraction_outside(GRID2.extent / 2.0) < 1e-8
                for term in sep.fourier().axis_terms(axis):
                    assert term.mass_fraction_outside(GRID2.freq_extent / 2.0) < 1e-8

    def test_complexity_validated(self):
        with pytest.raises(ValueError):
            random_ensemble(GRID2, 0, seed=1)

    def test_coarse_grid_rejected(self):
        tiny = GridSpec(DimensionPair(1, 0), 32, 16.0)
        with pytest.raises(GenerationError):
            random_ensemble(tiny, 2, seed=0)

    def test_one_group_shapes(self):
        f = random_ensemble(GRID1, 4, seed=5)
        assert f.values.shape == (GRID1.n,)
        assert f.side == (SPACE,)


class TestDilation:
    def test_lp_norm_preserved(self):
        f = gaussian_product(GRID1, [1.0])
        for p in (1.0, 4.0 / 3.0, 2.0):
            base = f.analytic.as_mix().lp_norm(p)
            for t in (0.5, 1.0, 2.0):
                g = dilate_first_axis(f, t, p)
                assert g.analytic.lp_norm(p) == pytest.approx(base, rel=1e-12)

    def test_t_one_is_identity(self):
        f = gaussian_product(GRID1, [1.0])
        g = dilate_first_axis(f, 1.0, 2)
        np.testing.assert_allclose(g.values, f.values, atol=1e-15)

    def test_small_t_spreads_support_until_rejection(self):
        f = gaussian_product(GRID1, [1.0])
        with pytest.raises(GenerationError) as err:
            dilate_first_axis(f, 0.01, 2)
        assert err.value.required_extent > GRID1.extent

    def test_large_t_rejected_on_bandwidth(self):
        f = gaussian_product(GRID1, [1.0])
        with pytest.raises(GenerationError):
            dilate_first_axis(f, 150.0, 2)

    def test_dilation_matches_direct_evaluation(self):
        f = gaussian_product(GRID1, [1.0])
        t, p = 0.5, 2.0
        g = dilate_first_axis(f, t, p)
        x = GRID1.space_coords()
        np.testing.assert_allclose(
            g.values, t ** (1 / p) * np.exp(-math.pi * (t * x) ** 2), atol=1e-15
        )


class TestShearProduct:
    def test_mixed_l2_norm_is_the_product_of_factors(self):
        # The shear is measure preserving slice by slice, so the L2 x L2
        # norm equals ||f||_2 ||g||_2.
        f = gaussian_product(GRID1, [1.0])
        g = gaussian_product(GRID1, [2.0])
        F = shear_product(f, g, GRID2)
        h = GRID2.spacing
        discrete = math.sqrt(float(np.sum(np.abs(F.values) ** 2)) * h * h)
        expected = f.analytic.as_mix().lp_norm(2) * g.analytic.as_mix().lp_norm(2)
        assert discrete == pytest.approx(expected, rel=1e-10)

    def test_values_follow_the_shear(self):
        f = gaussian_product(GRID1, [1.0])
        F = shear_product(f, f, GRID2)
        x = GRID2.space_coords()
        i, j = 40, 200
        expected = math.exp(-math.pi * x[i] ** 2) * math.exp(-math.pi * (x[j] - x[i]) ** 2)
        assert F.values[i, j].real == pytest.approx(expected, rel=1e-12)

    def test_support_failure_reports_extent(self):
        wide = GaussianMix((GaussianTerm(1.0, 0.02),))
        with pytest.raises(GenerationError):
            shear_product(wide, wide, GRID2)

    def test_needs_one_plus_one_grid(self):
        f = gaussian_product(GRID1, [1.0])
        with pytest.raises(ValueError):
            shear_product(f, f, GRID1)


class TestNearDelta:
    def test_inner_mass_is_one_for_every_slice(self):
        f = gaussian_product(GRID1, [1.0])
        F = near_delta_family(GRID2, f, epsilon=0.25)
        h = GRID2.spacing
        x = GRID2.space_coords()
        inner = np.sum(np.abs(F.values), axis=1) * h
        np.testing.assert_allclose(inner, np.abs(f.analytic.as_mix().evaluate(x)), rtol=1e-12)

    def test_shear_moves_the_bump(self):
        f = gaussian_product(GRID1, [1.0])
        F = near_delta_family(GRID2, f, epsilon=0.5, shear=True)
        x = GRID2.space_coords()
        # at x = 2 the bump should sit near y = -2
        i = int(np.argmin(np.abs(x - 2.0)))
        peak = x[int(np.argmax(np.abs(F.values[i])))]
        assert abs(peak + 2.0) < 0.1

    def test_no_shear_keeps_a_product(self):
        f = gaussian_product(GRID1, [1.0])
        F = near_delta_family(GRID2, f, epsilon=0.5, shear=False)
        col = np.abs(F.values[:, GRID2.n // 2])
        row = np.abs(F.values[GRID2.n // 4, :])
        outer = np.outer(col, row)
        rebuilt = outer / np.abs(F.values[GRID2.n // 4, GRID2.n // 2])
        np.testing.assert_allclose(np.abs(F.values), rebuilt, atol=1e-12)

    def test_epsilon_floor(self):
        f = gaussian_product(GRID1, [1.0])
        with pytest.raises(GenerationError):
            near_delta_family(GRID2, f, epsilon=GRID2.spacing)

    def test_periodization_keeps_mass_at_large_epsilon(self):
        f = gaussian_product(GRID1, [1.0])
        F = near_delta_family(GRID2, f, epsilon=4.0, shear=True)
        h = GRID2.spacing
        inner = np.sum(F.values.real, axis=1) * h
        x = GRID2.space_coords()
        np.testing.assert_allclose(inner, np.exp(-math.pi * x**2), rtol=1e-10)


class TestDescriptors:
    def test_round_trip_through_save_and_load(self, tmp_path):
        F = random_ensemble(GRID2, 3, seed=9)
        target = tmp_path / "ensemble.bin"
        F.save(target)
        loaded = SampledFunction.load(target)
        np.testing.assert_array_equal(loaded.values, F.values)
        assert loaded.grid == F.grid
        assert loaded.side == F.side
        assert loaded.descriptor.to_dict() == F.descriptor.to_dict()

    def test_sample_descriptor_rebuilds_identical_values(self):
        for build in (
            lambda: gaussian_product(GRID2, [1.0, 2.0]),
            lambda: random_ensemble(GRID2, 4, seed=21),
            lambda: near_delta_family(GRID2, gaussian_product(GRID1, [1.0]), 0.5),
        ):
            F = build()
            rebuilt = sample_descriptor(F.descriptor, GRID2)
            np.testing.assert_array_equal(rebuilt.values, F.values)

    def test_dilation_descriptor_round_trip(self):
        f = gaussian_product(GRID1, [1.0])
        g = dilate_first_axis(f, 0.5, "4/3")
        rebuilt = sample_descriptor(g.descriptor, GRID1)
        np.testing.assert_allclose(rebuilt.values, g.values, atol=1e-15)

    def test_unknown_family_rejected(self):
        with pytest.raises(ValueError):
            sample_descriptor(FunctionDescriptor("mystery", {}), GRID2)

    def test_ensemble_descriptor_requires_seed(self):
        desc = FunctionDescriptor("random_ensemble", {"complexity": 2}, seed=None)
        with pytest.raises(ValueError):
            sample_descriptor(desc, GRID2)
