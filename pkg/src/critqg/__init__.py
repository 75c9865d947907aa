"""Pseudo-spectral simulation of the dissipative 2D quasi-geostrophic equation
on the periodic box, with numerical checks of its a-priori estimates."""

__version__ = "0.1.0"

from .diagnostics import DiagnosticsRecord, GevreyMonitor, fourier_l1, gevrey_sums, lp_norm, sobolev_norm, weak_norm
from .harness import TheoremReport
from .initial import generate_initial
from .integrator import BlowUpError, SimConfig, Trajectory, linear_exact_step, run, step
from .rhs import (
    RhsConfig,
    gamma_bound_holds,
    gamma_coefficient,
    nonlinear_convolution,
    nonlinear_pseudospectral,
    nonlinear_symmetrized,
    tendency,
)
from .spectral import (
    PhysicalField,
    SpectralField,
    WaveVector,
    apply_lambda_power,
    apply_poisson_mollifier,
    dealias,
    forward_transform,
    inverse_transform,
    velocity_from_theta,
)

__all__ = [
    "BlowUpError", "DiagnosticsRecord", "GevreyMonitor", "PhysicalField", "RhsConfig", "SimConfig",
    "SpectralField", "TheoremReport", "Trajectory", "WaveVector", "apply_lambda_power",
    "apply_poisson_mollifier", "dealias", "forward_transform", "fourier_l1", "gamma_bound_holds",
    "gamma_coefficient", "generate_initial", "gevrey_sums", "inverse_transform", "linear_exact_step",
    "lp_norm", "nonlinear_convolution", "nonlinear_pseudospectral", "nonlinear_symmetrized", "run",
    "sobolev_norm", "step", "tendency", "velocity_from_theta", "weak_norm",
]
