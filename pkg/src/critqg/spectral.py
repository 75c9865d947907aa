"""Fourier representation of periodic fields on [0, 2pi)^2 and diagonal operators.

Coefficients use the normalisation

    f_hat(k) = (2 pi)^-2 * integral f(x) exp(-i k.x) dx,

so on an m x m grid f_hat is ``fft2(f) / m**2``. A :class:`SpectralField` stores
the square block ``max(|j1|, |j2|) <= n_max`` in a centred array: entry
``coeffs[j1 + n_max, j2 + n_max]`` holds the amplitude of ``exp(i j.x)``.
The zero mode is always exactly zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import fft as sfft

TWO_THIRDS = "two-thirds"
NO_DEALIAS = "none"
DEALIAS_RULES = (TWO_THIRDS, NO_DEALIAS)

# imaginary residue allowed on inverse transforms, relative to field scale
IMAG_TOL = 1e-12


@dataclass(frozen=True)
class WaveVector:
    j1: int
    j2: int

    @property
    def modulus(self) -> float:
        return float(np.hypot(self.j1, self.j2))

    @property
    def perp(self) -> "WaveVector":
        return WaveVector(-self.j2, self.j1)

    def dot(self, other: "WaveVector") -> int:
        return self.j1 * other.j1 + self.j2 * other.j2

    def __add__(self, other: "WaveVector") -> "WaveVector":
        return WaveVector(self.j1 + other.j1, self.j2 + other.j2)

    def __neg__(self) -> "WaveVector":
        return WaveVector(-self.j1, -self.j2)

    def is_zero(self) -> bool:
        return self.j1 == 0 and self.j2 == 0


class Lattice:
    """Integer wavenumbers of the square truncation of radius ``n_max``."""

    def __init__(self, n_max: int):
        if n_max < 1:
            raise ValueError(f"n_max must be >= 1, got {n_max}")
        self.n_max = n_max
        r = np.arange(-n_max, n_max + 1)
        self.j1, self.j2 = np.meshgrid(r, r, indexing="ij")
        self.modulus = np.hypot(self.j1, self.j2)
        self.nonzero = self.modulus > 0
        # |j| with the zero mode replaced by 1 so that negative powers stay finite
        self.safe_modulus = np.where(self.nonzero, self.modulus, 1.0)
        self.maxnorm = np.maximum(np.abs(self.j1), np.abs(self.j2))

    @property
    def shape(self) -> tuple[int, int]:
        return (2 * self.n_max + 1, 2 * self.n_max + 1)

    def power(self, s: float) -> np.ndarray:
        """|j|**s with 0 at the zero mode."""
        return np.where(self.nonzero, self.safe_modulus ** s, 0.0)


@lru_cache(maxsize=None)
def lattice(n_max: int) -> Lattice:
    return Lattice(n_max)


@dataclass(frozen=True, eq=False)
class SpectralField:
    """Truncated Fourier coefficients of a real, mean-zero field."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=np.complex128)
        if c.ndim != 2 or c.shape[0] != c.shape[1] or c.shape[0] % 2 != 1:
            raise ValueError(f"coefficient block must be (2n+1, 2n+1), got {c.shape}")
        if not np.all(np.isfinite(c)):
            raise ValueError("non-finite Fourier amplitude")
        n = c.shape[0] // 2
        c[n, n] = 0.0
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def n_max(self) -> int:
        return self.coeffs.shape[0] // 2

    @property
    def lattice(self) -> Lattice:
        return lattice(self.n_max)

    @classmethod
    def zeros(cls, n_max: int) -> "SpectralField":
        return cls(np.zeros(lattice(n_max).shape, dtype=np.complex128))

    @classmethod
    def from_modes(cls, n_max: int, modes: dict) -> "SpectralField":
        """Build a field from ``{(j1, j2): amplitude}``; conjugate partners are filled in.

        Listing both ``j`` and ``-j`` is allowed as long as they are conjugate.
        """
        c = np.zeros(lattice(n_max).shape, dtype=np.complex128)
        for (j1, j2), a in modes.items():
            if max(abs(j1), abs(j2)) > n_max:
                raise ValueError(f"mode ({j1}, {j2}) outside truncation n_max={n_max}")
            c[j1 + n_max, j2 + n_max] = a
            c[-j1 + n_max, -j2 + n_max] = np.conj(a)
        for (j1, j2), a in modes.items():
            if not np.isclose(c[j1 + n_max, j2 + n_max], a, rtol=0, atol=1e-15):
                raise ValueError(f"mode ({j1}, {j2}) conflicts with its conjugate partner")
        return cls(c)

    def __getitem__(self, j) -> complex:
        j1, j2 = (j.j1, j.j2) if isinstance(j, WaveVector) else j
        n = self.n_max
        if max(abs(j1), abs(j2)) > n:
            return 0j
        return complex(self.coeffs[j1 + n, j2 + n])

    def hermitian_defect(self) -> float:
        """max |c(-j) - conj(c(j))|."""
        c = self.coeffs
        return float(np.max(np.abs(c[::-1, ::-1] - np.conj(c))))

    def embed(self, n_max: int) -> "SpectralField":
        """Zero-pad (or truncate) to another truncation radius."""
        n = self.n_max
        out = np.zeros(lattice(n_max).shape, dtype=np.complex128)
        r = min(n, n_max)
        out[n_max - r:n_max + r + 1, n_max - r:n_max + r + 1] = \
            self.coeffs[n - r:n + r + 1, n - r:n + r + 1]
        return SpectralField(out)

    def __add__(self, other: "SpectralField") -> "SpectralField":
        return SpectralField(self.coeffs + other.coeffs)

    def __sub__(self, other: "SpectralField") -> "SpectralField":
        return SpectralField(self.coeffs - other.coeffs)

    def __mul__(self, scale: float) -> "SpectralField":
        return SpectralField(self.coeffs * scale)

    __rmul__ = __mul__


@dataclass(frozen=True, eq=False)
class PhysicalField:
    """Real samples at x = (2 pi p / m, 2 pi q / m); axis 0 is x1."""

    values: np.ndarray

    def __post_init__(self):
        v = np.array(self.values, dtype=np.float64)
        if v.ndim != 2 or v.shape[0] != v.shape[1]:
            raise ValueError(f"grid must be square, got shape {v.shape}")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def m(self) -> int:
        return self.values.shape[0]

    @classmethod
    def from_function(cls, func, m: int) -> "PhysicalField":
        x = 2 * np.pi * np.arange(m) / m
        x1, x2 = np.meshgrid(x, x, indexing="ij")
        return cls(func(x1, x2))


def grid_points(m: int) -> tuple[np.ndarray, np.ndarray]:
    x = 2 * np.pi * np.arange(m) / m
    return np.meshgrid(x, x, indexing="ij")


class GridTransform:
    """Real-FFT transfer between a centred coefficient block and an m x m grid.

    Internal fast path shared by the nonlinearity and the diagnostics; it
    trusts its input to be Hermitian.
    """

    def __init__(self, n_max: int, m: int):
        if m < 2 * n_max + 1:
            raise ValueError(f"grid size m={m} too small for n_max={n_max} (need m >= {2 * n_max + 1})")
        self.n_max = n_max
        self.m = m
        self.rows = np.arange(-n_max, n_max + 1) % m

    def to_grid(self, coeffs: np.ndarray) -> np.ndarray:
        """Leading axes, if any, are batch axes transformed in one call."""
        n, m = self.n_max, self.m
        half = np.zeros(coeffs.shape[:-2] + (m, m // 2 + 1), dtype=np.complex128)
        half[..., self.rows, :n + 1] = coeffs[..., :, n:]
        return sfft.irfft2(half, s=(m, m), norm="forward")

    def from_grid(self, values: np.ndarray) -> np.ndarray:
        n = self.n_max
        half = sfft.rfft2(values, norm="forward")
        c = np.empty((2 * n + 1, 2 * n + 1), dtype=np.complex128)
        c[:, n:] = half[self.rows, :n + 1]
        c[:, :n] = np.conj(c[::-1, :n:-1])
        c[n, n] = 0.0
        return c


@lru_cache(maxsize=None)
def grid_transform(n_max: int, m: int) -> GridTransform:
    return GridTransform(n_max, m)


def product_grid_size(n_max: int) -> int:
    """Grid on which quadratic products of the full truncation are alias-free."""
    return sfft.next_fast_len(3 * n_max + 1, real=True)


def diagnostic_grid_size(n_max: int) -> int:
    """Twice-oversampled grid used for L^p quadrature."""
    return 2 * sfft.next_fast_len(2 * n_max + 1, real=True)


def forward_transform(f: PhysicalField, n_max: int) -> SpectralField:
    """Grid samples to coefficients ``mean(f exp(-i k.x))``; the mean is dropped."""
    if f.m < 2 * n_max + 1:
        raise ValueError(f"grid size m={f.m} too small for n_max={n_max} (need m >= {2 * n_max + 1})")
    m = f.m
    full = np.fft.fft2(f.values) / m**2
    idx = np.arange(-n_max, n_max + 1) % m
    return SpectralField(full[np.ix_(idx, idx)])


def inverse_transform(t: SpectralField, m: int) -> PhysicalField:
    """Evaluate ``sum_j c(j) exp(i j.x)`` on the m x m grid."""
    n = t.n_max
    if m < 2 * n + 1:
        raise ValueError(f"grid size m={m} too small for n_max={n} (need m >= {2 * n + 1})")
    full = np.zeros((m, m), dtype=np.complex128)
    idx = np.arange(-n, n + 1) % m
    full[np.ix_(idx, idx)] = t.coeffs
    z = np.fft.ifft2(full) * m**2
    scale = max(float(np.max(np.abs(z))), np.finfo(float).tiny)
    resid = float(np.max(np.abs(z.imag)))
    if resid > IMAG_TOL * scale:
        raise ValueError(f"input is not Hermitian: imaginary residue {resid:.3e} (scale {scale:.3e})")
    return PhysicalField(z.real)


def apply_lambda_power(t: SpectralField, s: float) -> SpectralField:
    """Multiply each coefficient by |j|**s (s = 2 alpha gives (-Laplacian)^alpha)."""
    return SpectralField(t.coeffs * t.lattice.power(s))


def velocity_multipliers(n_max: int) -> tuple[np.ndarray, np.ndarray]:
    """Symbols of u = (-R2 theta, R1 theta), i.e. i (j / |j|)^perp."""
    lat = lattice(n_max)
    inv = np.where(lat.nonzero, 1.0 / lat.safe_modulus, 0.0)
    return -1j * lat.j2 * inv, 1j * lat.j1 * inv


def velocity_from_theta(t: SpectralField) -> tuple[SpectralField, SpectralField]:
    m1, m2 = velocity_multipliers(t.n_max)
    return SpectralField(m1 * t.coeffs), SpectralField(m2 * t.coeffs)


def poisson_multiplier(n_max: int, delta: float) -> np.ndarray:
    if delta < 0:
        raise ValueError(f"mollification scale must be >= 0, got {delta}")
    return np.exp(-delta * lattice(n_max).modulus)


def apply_poisson_mollifier(t: SpectralField, delta: float) -> SpectralField:
    """Convolve with the periodic Poisson kernel, symbol exp(-delta |j|)."""
    return SpectralField(t.coeffs * poisson_multiplier(t.n_max, delta))


def dealias_mask(n_max: int, rule: str = TWO_THIRDS) -> np.ndarray:
    if rule == NO_DEALIAS:
        return np.ones(lattice(n_max).shape, dtype=bool)
    if rule == TWO_THIRDS:
        return lattice(n_max).maxnorm <= (2 * n_max) // 3
    raise ValueError(f"unknown dealias rule {rule!r}; expected one of {DEALIAS_RULES}")


def dealias(t: SpectralField, rule: str = TWO_THIRDS) -> SpectralField:
    return SpectralField(np.where(dealias_mask(t.n_max, rule), t.coeffs, 0.0))
