"""Integrating-factor time stepping.

The stiff dissipation kappa |j|^(2 alpha) is integrated exactly per mode; only
the quadratic term goes through the explicit Runge-Kutta stages (Lawson form).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace

import numpy as np

from .diagnostics import DiagnosticsRecord, GevreyMonitor, compute_record
from .rhs import RhsConfig, Tendency
from .spectral import SpectralField, lattice

logger = logging.getLogger(__name__)

IF_RK4 = "if-rk4"
IF_EULER = "if-euler"
SCHEMES = (IF_RK4, IF_EULER)


@dataclass(frozen=True)
class SimConfig:
    rhs: RhsConfig = field(default_factory=RhsConfig)
    n_max: int = 32
    dt: float = 1e-3
    t_end: float = 1.0
    sample_every: int = 10
    scheme: str = IF_RK4
    seed: int = 0
    initial: str = "random-band(1,8,-1)"
    amplitude: float = 0.05
    snapshot_every: int = 0
    output_dir: str = "out"
    stability_guard: float = 40.0

    def __post_init__(self):
        if self.n_max < 1:
            raise ValueError(f"n_max must be >= 1, got {self.n_max}")
        if not self.dt > 0:
            raise ValueError(f"dt must be > 0, got {self.dt}")
        if not self.t_end >= 0:
            raise ValueError(f"t_end must be >= 0, got {self.t_end}")
        if 0 < self.t_end < self.dt:
            raise ValueError(f"t_end={self.t_end} is shorter than one step dt={self.dt}")
        if self.sample_every < 1:
            raise ValueError(f"sample_every must be >= 1, got {self.sample_every}")
        if self.snapshot_every < 0:
            raise ValueError(f"snapshot_every must be >= 0, got {self.snapshot_every}")
        if self.scheme not in SCHEMES:
            raise ValueError(f"scheme must be one of {SCHEMES}, got {self.scheme!r}")
        if not self.amplitude > 0:
            raise ValueError(f"amplitude must be > 0, got {self.amplitude}")
        stiffness = self.dt * self.rhs.kappa * self.n_max ** (2 * self.rhs.alpha)
        if stiffness > self.stability_guard:
            raise ValueError(
                f"dt * kappa * n_max^(2 alpha) = {stiffness:.3g} exceeds the stability guard "
                f"{self.stability_guard}")

    @property
    def n_steps(self) -> int:
        return int(round(self.t_end / self.dt))

    def with_rhs(self, **changes) -> "SimConfig":
        return replace(self, rhs=replace(self.rhs, **changes))


@dataclass
class Trajectory:
    config: SimConfig
    records: list[DiagnosticsRecord] = field(default_factory=list)
    snapshots: list[tuple[float, SpectralField]] = field(default_factory=list)
    final: SpectralField | None = None

    @property
    def times(self) -> np.ndarray:
        return np.array([r.t for r in self.records])

    def series(self, name: str, key=None) -> np.ndarray:
        """One diagnostic as an array, e.g. ``series("lp_norms", 2.0)``."""
        vals = [getattr(r, name) if key is None else getattr(r, name)[key] for r in self.records]
        return np.array([np.nan if v is None else v for v in vals], dtype=float)


class BlowUpError(RuntimeError):
    """Non-finite state encountered; carries the partial trajectory."""

    def __init__(self, time: float, history: list[tuple[float, float]], trajectory: Trajectory):
        self.time = time
        self.history = history
        self.trajectory = trajectory
        last = f"{history[-1][1]:.6g}" if history else "n/a"
        super().__init__(f"non-finite state at t={time:.6g} (last finite L2 coefficient norm {last})")


def linear_factor(n_max: int, dt: float, kappa: float, alpha: float) -> np.ndarray:
    return np.exp(-kappa * lattice(n_max).power(2 * alpha) * dt)


def linear_exact_step(t: SpectralField, dt: float, kappa: float, alpha: float) -> SpectralField:
    """Exact solution of theta_t = -kappa Lambda^(2 alpha) theta over dt."""
    if dt < 0:
        raise ValueError(f"dt must be >= 0, got {dt}")
    return SpectralField(t.coeffs * linear_factor(t.n_max, dt, kappa, alpha))


class Stepper:
    """Advances raw coefficient blocks by one step of fixed size."""

    def __init__(self, n_max: int, dt: float, rhs: RhsConfig, scheme: str = IF_RK4):
        self.dt = dt
        self.scheme = scheme
        self.tendency = Tendency(n_max, rhs)
        self.e_full = linear_factor(n_max, dt, rhs.kappa, rhs.alpha)
        self.e_half = linear_factor(n_max, dt / 2, rhs.kappa, rhs.alpha)

    def __call__(self, c: np.ndarray) -> np.ndarray:
        nl = self.tendency.nonlinear_part
        dt, e, eh = self.dt, self.e_full, self.e_half
        if self.scheme == IF_EULER:
            return e * (c + dt * nl(c))
        k1 = nl(c)
        k2 = nl(eh * (c + 0.5 * dt * k1))
        k3 = nl(eh * c + 0.5 * dt * k2)
        k4 = nl(e * c + dt * eh * k3)
        return e * c + (dt / 6) * (e * k1 + 2 * eh * (k2 + k3) + k4)


def step(t: SpectralField, cfg: SimConfig) -> SpectralField:
    out = Stepper(t.n_max, cfg.dt, cfg.rhs, cfg.scheme)(t.coeffs)
    if not np.all(np.isfinite(out)):
        raise BlowUpError(cfg.dt, [(0.0, float(np.linalg.norm(t.coeffs)))], Trajectory(cfg))
    return SpectralField(out)


def run(initial: SpectralField, cfg: SimConfig, monitor: GevreyMonitor | None = None) -> Trajectory:
    """Integrate to ``cfg.t_end`` recording diagnostics every ``sample_every`` steps.

    The final state is always recorded. Snapshots are kept every
    ``snapshot_every`` samples (0 disables them). Raises :class:`BlowUpError`
    when the state stops being finite.
    """
    if initial.n_max != cfg.n_max:
        initial = initial.embed(cfg.n_max)
    monitor = GevreyMonitor(cfg.rhs.kappa) if monitor is None else monitor
    traj = Trajectory(cfg)
    stepper = Stepper(cfg.n_max, cfg.dt, cfg.rhs, cfg.scheme)
    history: list[tuple[float, float]] = []
    n_samples = 0

    def sample(k: int, c: np.ndarray):
        nonlocal n_samples
        now = k * cfg.dt
        field_ = SpectralField(c)
        traj.records.append(compute_record(field_, now, monitor))
        if cfg.snapshot_every and n_samples % cfg.snapshot_every == 0:
            traj.snapshots.append((now, field_))
        history.append((now, float(np.linalg.norm(c))))
        n_samples += 1

    c = np.array(initial.coeffs)
    sample(0, c)
    n_steps = cfg.n_steps
    for k in range(1, n_steps + 1):
        c = stepper(c)
        if not np.all(np.isfinite(c)):
            traj.final = None
            logger.warning("blow-up detected at t=%g", k * cfg.dt)
            raise BlowUpError(k * cfg.dt, history, traj)
        if k % cfg.sample_every == 0 or k == n_steps:
            sample(k, c)
    traj.final = SpectralField(c)
    if cfg.snapshot_every and traj.snapshots[-1][0] != traj.records[-1].t:
        traj.snapshots.append((traj.records[-1].t, traj.final))
    return traj
