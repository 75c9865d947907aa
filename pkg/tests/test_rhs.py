import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from critqg.rhs import (
    RhsConfig,
    Tendency,
    energy_pairing,
    gamma_bound_holds,
    gamma_coefficient,
    nonlinear_convolution,
    nonlinear_pseudospectral,
    nonlinear_symmetrized,
    tendency,
)
from critqg.spectral import SpectralField, WaveVector, dealias_mask


def advection_oracle(t: SpectralField, delta: float = 0.0) -> dict:
    """-(u.grad theta)^ from u_hat(j) = i (j/|j|)^perp c(j), grad -> i k, in plain Python."""
    n = t.n_max
    modes = [(a, b) for a in range(-n, n + 1) for b in range(-n, n + 1) if (a, b) != (0, 0)]
    out = {}
    for (j1, j2), (k1, k2) in itertools.product(modes, modes):
        l = (j1 + k1, j2 + k2)
        if max(abs(l[0]), abs(l[1])) > n or l == (0, 0):
            continue
        mj = math.hypot(j1, j2)
        u = (1j * -j2 / mj * t[(j1, j2)] * math.exp(-delta * mj), 1j * j1 / mj * t[(j1, j2)] * math.exp(-delta * mj))
        grad = (1j * k1 * t[(k1, k2)], 1j * k2 * t[(k1, k2)])
        out[l] = out.get(l, 0) - (u[0] * grad[0] + u[1] * grad[1])
    return out


def rel_diff(a, b):
    return np.max(np.abs(a - b)) / max(np.max(np.abs(a)), np.max(np.abs(b)))


class TestGamma:
    def test_equal_moduli_vanish(self):
        assert gamma_coefficient((1, 0), (0, 1)) == 0

    def test_hand_values(self):
        assert gamma_coefficient((1, 0), (0, 2)) == 0.5
        assert gamma_coefficient(WaveVector(0, 1), WaveVector(2, 0)) == -0.5

    def test_zero_vector_rejected(self):
        with pytest.raises(ValueError):
            gamma_coefficient((0, 0), (1, 0))

    def test_bound_examples(self):
        # |gamma| = 0.5 <= 5 / 4
        assert gamma_bound_holds((1, 0), (0, 2))
        assert gamma_bound_holds((1, 0), (0, 1))
        assert gamma_bound_holds((1, 0), (-1, 0))

    def test_symmetrised_weight_from_direct_form(self):
        # (j_perp.k)/|j| + (k_perp.j)/|k| averaged over the swap equals gamma
        for j, k in [((1, 2), (-3, 1)), ((4, -1), (2, 2)), ((0, 5), (-1, -1))]:
            jv, kv = WaveVector(*j), WaveVector(*k)
            direct = 0.5 * (jv.perp.dot(kv) / jv.modulus + kv.perp.dot(jv) / kv.modulus)
            assert gamma_coefficient(j, k) == pytest.approx(direct, rel=1e-14)


wave = st.tuples(st.integers(-20, 20), st.integers(-20, 20)).filter(lambda j: j != (0, 0))


@settings(max_examples=200, deadline=None)
@given(j=wave, k=wave)
def test_gamma_symmetric_and_bounded(j, k):
    assert gamma_coefficient(j, k) == gamma_coefficient(k, j)
    assert gamma_bound_holds(j, k)


class TestConvolution:
    def test_zonal_mode_is_steady(self):
        t = SpectralField.from_modes(4, {(1, 0): 0.5})
        assert not np.any(nonlinear_convolution(t).coeffs)
        assert not np.any(nonlinear_symmetrized(t).coeffs)

    def test_two_mode_product(self):
        # -(u.grad theta) = -sin x1 sin 2x2 = (cos(x1 + 2x2) - cos(x1 - 2x2)) / 2
        t = SpectralField.from_modes(4, {(1, 0): 0.5, (0, 2): 0.5})
        b = nonlinear_convolution(t)
        expected = SpectralField.from_modes(4, {(1, 2): 0.25, (1, -2): -0.25})
        np.testing.assert_allclose(b.coeffs, expected.coeffs, atol=1e-15)

    def test_diagonal_pair_vanishes(self):
        t = SpectralField.from_modes(3, {(1, 1): 0.3 + 0.1j})
        assert not np.any(nonlinear_convolution(t).coeffs)
        assert not np.any(nonlinear_symmetrized(t).coeffs)

    @pytest.mark.parametrize("seed", range(3))
    def test_matches_python_oracle(self, random_field, seed):
        t = random_field(n_max=3, seed=seed)
        oracle = advection_oracle(t)
        b = nonlinear_convolution(t)
        for l, v in oracle.items():
            assert abs(b[l] - v) <= 1e-14 * max(abs(v), 1)

    def test_mollified_matches_python_oracle(self, random_field):
        t = random_field(n_max=3, seed=7)
        oracle = advection_oracle(t, delta=0.4)
        cfg = RhsConfig(kappa=0.0, delta=0.4, dealias_rule="none", nonlinearity_path="convolution")
        b = Tendency(3, cfg).nonlinear_part(t.coeffs)
        for (l1, l2), v in oracle.items():
            assert abs(b[l1 + 3, l2 + 3] - v) <= 1e-14 * max(abs(v), 1)

    def test_zero_mode_output_is_zero(self, random_field):
        t = random_field(n_max=6, seed=3)
        assert nonlinear_convolution(t)[(0, 0)] == 0

    @pytest.mark.parametrize("n_max", [4, 8, 12])
    def test_dual_formulas_agree(self, random_field, n_max):
        t = random_field(n_max=n_max, seed=n_max)
        assert rel_diff(nonlinear_convolution(t).coeffs, nonlinear_symmetrized(t).coeffs) <= 1e-12


class TestPseudoSpectral:
    def test_zonal_mode(self):
        t = SpectralField.from_modes(8, {(1, 0): 0.5})
        assert np.max(np.abs(nonlinear_pseudospectral(t).coeffs)) < 1e-16

    def test_cross_terms_cancel(self):
        t = SpectralField.from_modes(8, {(1, 0): 0.5, (0, 1): 0.5})
        assert np.max(np.abs(nonlinear_pseudospectral(t).coeffs)) < 1e-16

    @pytest.mark.parametrize("seed", range(4))
    def test_matches_convolution_without_dealiasing(self, random_field, seed):
        t = random_field(n_max=8, seed=seed)
        fft = nonlinear_pseudospectral(t, RhsConfig(dealias_rule="none")).coeffs
        assert rel_diff(fft, nonlinear_convolution(t).coeffs) <= 1e-12

    def test_small_grid_aliases_full_band_data(self, random_field):
        n = 8
        t = random_field(n_max=n, seed=11)
        fft = nonlinear_pseudospectral(t, RhsConfig(dealias_rule="none"), m=2 * n + 2).coeffs
        assert rel_diff(fft, nonlinear_convolution(t).coeffs) > 1e-3

    def test_small_grid_exact_for_band_limited_data(self, random_field):
        # with input modes <= K and m >= 3K + 1, aliases of the product miss |l| <= K
        n, m = 8, 18
        K = (m - 1) // 3
        t = random_field(n_max=n, k_hi=K, seed=11)
        fft = nonlinear_pseudospectral(t, RhsConfig(dealias_rule="none"), m=m).coeffs
        ref = nonlinear_convolution(t).coeffs
        safe = t.lattice.maxnorm <= K
        assert np.max(np.abs(fft[safe] - ref[safe])) <= 1e-12 * np.max(np.abs(ref))

    def test_dealiased_agrees_on_retained_modes(self, random_field):
        n = 12
        t = random_field(n_max=n, k_hi=8, seed=5)
        fft = nonlinear_pseudospectral(t, RhsConfig(dealias_rule="two-thirds")).coeffs
        ref = nonlinear_convolution(t).coeffs
        keep = dealias_mask(n, "two-thirds")
        assert rel_diff(fft[keep], ref[keep]) <= 1e-12
        assert not np.any(fft[~keep])

    def test_mollified_velocity(self, random_field):
        t = random_field(n_max=6, seed=2)
        cfg = RhsConfig(kappa=0.0, delta=0.1, dealias_rule="none")
        conv = Tendency(6, RhsConfig(kappa=0.0, delta=0.1, dealias_rule="none",
                                     nonlinearity_path="convolution")).nonlinear_part(t.coeffs)
        assert rel_diff(nonlinear_pseudospectral(t, cfg).coeffs, conv) <= 1e-12


class TestTendency:
    def test_pure_dissipation_of_zonal_mode(self):
        t = SpectralField.from_modes(8, {(1, 0): 0.5})
        out = tendency(t, RhsConfig(kappa=1.0, alpha=0.5))
        np.testing.assert_allclose(out.coeffs, -t.coeffs, atol=1e-16)

    def test_fractional_power(self):
        t = SpectralField.from_modes(8, {(3, 4): 0.5})
        out = tendency(t, RhsConfig(kappa=2.0, alpha=0.75, nonlinearity_path="none"))
        assert out[(3, 4)] == pytest.approx(-2.0 * 5 ** 1.5 * 0.5, rel=1e-14)

    def test_zero_field(self):
        assert not np.any(tendency(SpectralField.zeros(4), RhsConfig()).coeffs)

    @pytest.mark.parametrize("path", ["pseudospectral", "convolution", "symmetrized"])
    def test_energy_orthogonality(self, random_field, path):
        t = random_field(n_max=8, seed=21)
        cfg = RhsConfig(kappa=0.0, dealias_rule="none", nonlinearity_path=path)
        b = tendency(t, cfg)
        assert abs(energy_pairing(b, t)) <= 1e-12 * np.vdot(t.coeffs, t.coeffs).real

    def test_paths_agree(self, random_field):
        t = random_field(n_max=6, seed=4)
        outs = [tendency(t, RhsConfig(alpha=0.7, nonlinearity_path=p)).coeffs
                for p in ("pseudospectral", "convolution", "symmetrized")]
        assert rel_diff(outs[0], outs[1]) <= 1e-12
        assert rel_diff(outs[1], outs[2]) <= 1e-12

    def test_symmetric_path_rejects_mollification(self):
        with pytest.raises(ValueError):
            Tendency(4, RhsConfig(delta=0.1, nonlinearity_path="symmetrized"))

    def test_preserves_symmetry_and_mean(self, random_field):
        t = random_field(n_max=10, seed=8)
        out = tendency(t, RhsConfig(delta=0.2))
        assert out[(0, 0)] == 0
        assert out.hermitian_defect() <= 1e-14 * np.max(np.abs(out.coeffs))


class TestRhsConfig:
    @pytest.mark.parametrize("kw", [dict(kappa=-1), dict(alpha=1.5), dict(delta=-0.1),
                                    dict(dealias_rule="half"), dict(nonlinearity_path="spectral")])
    def test_rejects(self, kw):
        with pytest.raises(ValueError):
            RhsConfig(**kw)


@settings(max_examples=15, deadline=None)
@given(seed=st.integers(0, 10_000), n_max=st.integers(2, 7))
def test_b_zero_mode_and_energy_orthogonality(seed, n_max):
    from critqg.initial import generate_initial

    t = generate_initial(f"random-band(1,{n_max},-1)", 1.0, n_max, seed)
    for b in (nonlinear_convolution(t), nonlinear_symmetrized(t),
              nonlinear_pseudospectral(t, RhsConfig(dealias_rule="none"))):
        assert b[(0, 0)] == 0
        assert abs(energy_pairing(b, t)) <= 1e-12 * np.vdot(t.coeffs, t.coeffs).real
