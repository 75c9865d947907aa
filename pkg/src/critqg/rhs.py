"""QG tendency -u.grad(theta) - kappa Lambda^(2 alpha) theta.

Three interchangeable ways to evaluate the quadratic term

    b_l = sum_{j+k=l} |j|^-1 (j_perp . k) c(j) c(k)     (= -(u.grad theta)^(l))

are provided: the pseudo-spectral product (production path), the direct
convolution, and the symmetrised convolution with coefficients gamma. The two
convolution forms cost O(n_max^4) and exist to validate the FFT path.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .spectral import (
    DEALIAS_RULES,
    TWO_THIRDS,
    SpectralField,
    WaveVector,
    dealias_mask,
    grid_transform,
    lattice,
    poisson_multiplier,
    product_grid_size,
    velocity_multipliers,
)

PSEUDOSPECTRAL = "pseudospectral"
CONVOLUTION = "convolution"
SYMMETRIZED = "symmetrized"
LINEAR_ONLY = "none"
NONLINEARITY_PATHS = (PSEUDOSPECTRAL, CONVOLUTION, SYMMETRIZED, LINEAR_ONLY)


@dataclass(frozen=True)
class RhsConfig:
    kappa: float = 1.0
    alpha: float = 0.5
    delta: float = 0.0
    dealias_rule: str = TWO_THIRDS
    nonlinearity_path: str = PSEUDOSPECTRAL

    def __post_init__(self):
        if not self.kappa >= 0:
            raise ValueError(f"kappa must be >= 0, got {self.kappa}")
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in [0, 1], got {self.alpha}")
        if not self.delta >= 0:
            raise ValueError(f"delta must be >= 0, got {self.delta}")
        if self.dealias_rule not in DEALIAS_RULES:
            raise ValueError(f"dealias rule must be one of {DEALIAS_RULES}, got {self.dealias_rule!r}")
        if self.nonlinearity_path not in NONLINEARITY_PATHS:
            raise ValueError(
                f"nonlinearity must be one of {NONLINEARITY_PATHS}, got {self.nonlinearity_path!r}")


def _as_wave(j) -> WaveVector:
    return j if isinstance(j, WaveVector) else WaveVector(*j)


def gamma_coefficient(j, k) -> float:
    """gamma^l_{j,k} = (j_perp . l)(|k| - |j|) / (2 |j| |k|) with l = j + k."""
    j, k = _as_wave(j), _as_wave(k)
    if j.is_zero() or k.is_zero():
        raise ValueError("gamma is undefined for a zero wave vector")
    l = j + k
    mj, mk = j.modulus, k.modulus
    return 0.5 * j.perp.dot(l) * (mk - mj) / (mj * mk)


def gamma_bound_holds(j, k) -> bool:
    """|gamma^l_{j,k}| <= |l|^2 / (2 max(|j|, |k|))."""
    j, k = _as_wave(j), _as_wave(k)
    l = j + k
    if l.is_zero():
        return True
    return abs(gamma_coefficient(j, k)) <= l.dot(l) / (2 * max(j.modulus, k.modulus))


def gamma_array(j1, j2, k1, k2) -> np.ndarray:
    """Vectorised gamma over broadcastable integer arrays (no zero vectors)."""
    l1, l2 = j1 + k1, j2 + k2
    mj, mk = np.hypot(j1, j2), np.hypot(k1, k2)
    return 0.5 * (-j2 * l1 + j1 * l2) * (mk - mj) / (mj * mk)


def gamma_bound_array(j1, j2, k1, k2) -> np.ndarray:
    l1, l2 = j1 + k1, j2 + k2
    g = np.abs(gamma_array(j1, j2, k1, k2))
    bound = (l1 * l1 + l2 * l2) / (2 * np.maximum(np.hypot(j1, j2), np.hypot(k1, k2)))
    return (g <= bound) | ((l1 == 0) & (l2 == 0))


def _convolve(t: SpectralField, weight) -> np.ndarray:
    """sum over stored j, k with j + k = l of weight(j, k) c(j) c(k), for every stored l.

    ``weight(j1, j2, k1, k2)`` receives scalar j and array k.
    """
    n = t.n_max
    c = t.coeffs
    lat = lattice(n)
    out = np.zeros_like(c)
    for a in range(2 * n + 1):
        j1 = a - n
        for b in range(2 * n + 1):
            j2 = b - n
            cj = c[a, b]
            if (j1 == 0 and j2 == 0) or cj == 0:
                continue
            # l = j + k must stay in the box: k ranges over the overlap
            l1_lo, l1_hi = max(-n, j1 - n), min(n, j1 + n)
            l2_lo, l2_hi = max(-n, j2 - n), min(n, j2 + n)
            ks = np.s_[l1_lo - j1 + n:l1_hi - j1 + n + 1, l2_lo - j2 + n:l2_hi - j2 + n + 1]
            k1, k2 = lat.j1[ks], lat.j2[ks]
            w = weight(j1, j2, k1, k2)
            out[l1_lo + n:l1_hi + n + 1, l2_lo + n:l2_hi + n + 1] += w * (cj * c[ks])
    out[n, n] = 0.0
    return out


def _direct_weight(j1, j2, k1, k2):
    return (-j2 * k1 + j1 * k2) / np.hypot(j1, j2)


def _symmetric_weight(j1, j2, k1, k2):
    kzero = (k1 == 0) & (k2 == 0)
    safe1 = np.where(kzero, 1, k1)
    return np.where(kzero, 0.0, gamma_array(j1, j2, safe1, k2))


def nonlinear_convolution(t: SpectralField) -> SpectralField:
    """b_l by direct summation with the 1/|j| form. Cost O(n_max^4)."""
    return SpectralField(_convolve(t, _direct_weight))


def nonlinear_symmetrized(t: SpectralField) -> SpectralField:
    """b_l by direct summation with the symmetric gamma coefficients."""
    return SpectralField(_convolve(t, _symmetric_weight))


class PseudoSpectralOperator:
    """Cached multipliers and transforms for the FFT evaluation of b_l."""

    def __init__(self, n_max: int, delta: float = 0.0, rule: str = TWO_THIRDS, m: int | None = None):
        self.n_max = n_max
        self.m = product_grid_size(n_max) if m is None else m
        self.grid = grid_transform(n_max, self.m)
        lat = lattice(n_max)
        m1, m2 = velocity_multipliers(n_max)
        if delta > 0:
            mol = poisson_multiplier(n_max, delta)
            m1, m2 = m1 * mol, m2 * mol
        # u1, u2, d1 theta, d2 theta in one batched transform
        self.multipliers = np.stack([m1, m2, 1j * lat.j1, 1j * lat.j2])
        self.mask = dealias_mask(n_max, rule)

    def __call__(self, c: np.ndarray) -> np.ndarray:
        u1, u2, g1, g2 = self.grid.to_grid(self.multipliers * c)
        return np.where(self.mask, -self.grid.from_grid(u1 * g1 + u2 * g2), 0.0)


def nonlinear_pseudospectral(t: SpectralField, cfg: RhsConfig | None = None, m: int | None = None) -> SpectralField:
    """-(u_delta . grad theta)^ formed on a grid and dealiased.

    The default grid has m >= 3 n_max + 1 points per side, on which the
    product of two truncated fields is alias-free.
    """
    cfg = RhsConfig() if cfg is None else cfg
    op = PseudoSpectralOperator(t.n_max, cfg.delta, cfg.dealias_rule, m)
    return SpectralField(op(t.coeffs))


class Tendency:
    """d theta_hat / dt as a callable on raw coefficient blocks."""

    def __init__(self, n_max: int, cfg: RhsConfig):
        self.n_max = n_max
        self.cfg = cfg
        self.linear = cfg.kappa * lattice(n_max).power(2 * cfg.alpha)
        path = cfg.nonlinearity_path
        if path == PSEUDOSPECTRAL:
            self.nonlinear = PseudoSpectralOperator(n_max, cfg.delta, cfg.dealias_rule)
        elif path == LINEAR_ONLY:
            self.nonlinear = None
        else:
            if path == SYMMETRIZED and cfg.delta > 0:
                raise ValueError("the symmetrised form does not apply to the mollified nonlinearity")
            conv = nonlinear_convolution if path == CONVOLUTION else nonlinear_symmetrized
            mol = poisson_multiplier(n_max, cfg.delta)
            mask = dealias_mask(n_max, cfg.dealias_rule)

            def nonlinear(c):
                if cfg.delta > 0:
                    b = _convolve_mollified(SpectralField(c), mol)
                else:
                    b = conv(SpectralField(c)).coeffs
                return np.where(mask, b, 0.0)

            self.nonlinear = nonlinear

    def nonlinear_part(self, c: np.ndarray) -> np.ndarray:
        if self.nonlinear is None:
            return np.zeros_like(c)
        return self.nonlinear(c)

    def __call__(self, c: np.ndarray) -> np.ndarray:
        return self.nonlinear_part(c) - self.linear * c


def _convolve_mollified(t: SpectralField, mol: np.ndarray) -> np.ndarray:
    # the velocity carries exp(-delta |j|) of its source mode j
    n = t.n_max

    def weight(j1, j2, k1, k2):
        return _direct_weight(j1, j2, k1, k2) * mol[j1 + n, j2 + n]

    return _convolve(t, weight)


def tendency(t: SpectralField, cfg: RhsConfig) -> SpectralField:
    """-(u_delta . grad theta)^ - kappa |j|^(2 alpha) theta_hat."""
    return SpectralField(Tendency(t.n_max, cfg)(t.coeffs))


def energy_pairing(b: SpectralField, t: SpectralField) -> float:
    """Re sum_l b_l conj(c(l)); vanishes for the exact quadratic term."""
    return float(np.real(np.vdot(t.coeffs, b.coeffs)))
