"""Norms and functionals tracked along a trajectory."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .spectral import (
    PhysicalField,
    SpectralField,
    diagnostic_grid_size,
    grid_transform,
    lattice,
)

LP_EXPONENTS = (2.0, 4.0, math.inf)
SOBOLEV_ORDERS = (1.0, 2.0)


@dataclass
class DiagnosticsRecord:
    t: float
    lp_norms: dict = field(default_factory=dict)
    sobolev: dict = field(default_factory=dict)
    weak_norm: float = 0.0
    fourier_l1: float = 0.0
    gevrey_y: float | None = None
    gevrey_z: float | None = None


@dataclass
class GevreyMonitor:
    """Activates at the first time the Fourier l1 sum Y drops to kappa/4.

    After activation t0 the weights exp((t - t0) kappa |j| / 2) are applied
    and the weighted sum should stay below ``ceiling`` = kappa/2.
    """

    kappa: float
    t0: float | None = None

    @property
    def activation_threshold(self) -> float:
        return self.kappa / 4

    @property
    def ceiling(self) -> float:
        return self.kappa / 2

    @property
    def active(self) -> bool:
        return self.t0 is not None

    def observe(self, t: float, fourier_l1: float) -> bool:
        """Feed one sample; returns True once active."""
        if self.t0 is None and fourier_l1 <= self.activation_threshold:
            self.t0 = t
        return self.t0 is not None


def lp_norm(f: PhysicalField, p: float) -> float:
    """Equal-weight quadrature of the L^p norm over the periodic box."""
    if not p >= 1:
        raise ValueError(f"L^p exponent must be >= 1, got {p}")
    a = np.abs(f.values)
    if math.isinf(p):
        return float(a.max())
    cell = (2 * np.pi / f.m) ** 2
    if p == 2:
        return float(np.sqrt(cell * np.sum(a * a)))
    return float((cell * np.sum(a ** p)) ** (1.0 / p))


def sobolev_norm(t: SpectralField, s: float) -> float:
    """Homogeneous (sum_j |j|^(2s) |c(j)|^2)^(1/2)."""
    if s < 0:
        raise ValueError(f"Sobolev order must be >= 0, got {s}")
    w = t.lattice.power(2 * s)
    return float(np.sqrt(np.sum(w * np.abs(t.coeffs) ** 2)))


def weak_norm(t: SpectralField) -> float:
    """sup_j |c(j)|."""
    return float(np.max(np.abs(t.coeffs)))


def fourier_l1(t: SpectralField) -> float:
    """Y = sum_j |c(j)|."""
    return float(np.sum(np.abs(t.coeffs)))


def gevrey_sums(t: SpectralField, now: float, monitor: GevreyMonitor) -> tuple[float, float]:
    """(y, z) = sum_j (1, |j|) |c(j)| exp((now - t0) kappa |j| / 2)."""
    if monitor.t0 is None:
        raise ValueError("Gevrey monitor has not been activated")
    if now < monitor.t0:
        raise ValueError(f"time {now} precedes activation t0={monitor.t0}")
    lat = t.lattice
    amp = np.abs(t.coeffs) * np.exp((now - monitor.t0) * monitor.kappa * lat.modulus / 2)
    return float(amp.sum()), float(np.sum(lat.modulus * amp))


def sup_norm_on_grid(t: SpectralField, m: int | None = None) -> float:
    m = diagnostic_grid_size(t.n_max) if m is None else m
    return float(np.max(np.abs(grid_transform(t.n_max, m).to_grid(t.coeffs))))


def l1_constant_h2(n_max: int) -> float:
    """C with Y <= C ||theta||_{H^2} on the truncation: (sum_{j != 0} |j|^-4)^(1/2)."""
    return float(np.sqrt(np.sum(lattice(n_max).power(-4.0))))


def compute_record(t: SpectralField, now: float, monitor: GevreyMonitor | None = None,
                   m: int | None = None) -> DiagnosticsRecord:
    """All tracked quantities for one sample; feeds ``monitor`` if given."""
    m = diagnostic_grid_size(t.n_max) if m is None else m
    grid = PhysicalField(grid_transform(t.n_max, m).to_grid(t.coeffs))
    rec = DiagnosticsRecord(
        t=now,
        lp_norms={p: lp_norm(grid, p) for p in LP_EXPONENTS},
        sobolev={s: sobolev_norm(t, s) for s in SOBOLEV_ORDERS},
        weak_norm=weak_norm(t),
        fourier_l1=fourier_l1(t),
    )
    if monitor is not None and monitor.observe(now, rec.fourier_l1):
        rec.gevrey_y, rec.gevrey_z = gevrey_sums(t, now, monitor)
    return rec
