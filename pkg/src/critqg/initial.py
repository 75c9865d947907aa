"""Initial-condition families.

``random-band`` draws its random amplitudes mode by mode in order of
increasing |j|, so for a fixed seed the field with a wider band extends the
one with a narrower band: refinement studies add modes instead of reshuffling.
"""

from __future__ import annotations

import re

import numpy as np

from .diagnostics import sup_norm_on_grid
from .spectral import SpectralField

_KIND = re.compile(r"^\s*([a-z\-]+)\s*(?:\(([^)]*)\))?\s*$")


def parse_kind(kind: str) -> tuple[str, tuple[float, ...]]:
    """``"random-band(1,8,-1)"`` -> ``("random-band", (1.0, 8.0, -1.0))``."""
    match = _KIND.match(kind)
    if not match:
        raise ValueError(f"malformed initial condition {kind!r}")
    name, args = match.group(1), match.group(2)
    values = tuple(float(a) for a in args.split(",")) if args and args.strip() else ()
    return name, values


def half_plane_modes(k_max: float) -> list[tuple[int, int]]:
    """One representative of each +/- pair with 0 < |j| <= k_max, ordered by (|j|^2, j1, j2)."""
    r = int(np.floor(k_max))
    modes = [(j1, j2) for j1 in range(-r, r + 1) for j2 in range(0, r + 1)
             if (j2 > 0 or j1 > 0) and j1 * j1 + j2 * j2 <= k_max * k_max]
    return sorted(modes, key=lambda j: (j[0] ** 2 + j[1] ** 2, j[0], j[1]))


def random_band(n_max: int, k_lo: float, k_hi: float, slope: float, seed: int) -> SpectralField:
    """Random phases and Gaussian amplitudes times |j|^slope on k_lo <= |j| <= k_hi."""
    if k_hi > n_max:
        raise ValueError(f"band edge k_hi={k_hi} exceeds truncation n_max={n_max}")
    if k_lo > k_hi or k_hi < 1:
        raise ValueError(f"empty band [{k_lo}, {k_hi}]")
    rng = np.random.default_rng(seed)
    modes = {}
    for j1, j2 in half_plane_modes(k_hi):
        re_, im_ = rng.standard_normal(2)
        k = np.hypot(j1, j2)
        if k >= k_lo:
            modes[(j1, j2)] = (re_ + 1j * im_) * k ** slope
    if not modes:
        raise ValueError(f"empty band [{k_lo}, {k_hi}]")
    return SpectralField.from_modes(n_max, modes)


def generate_initial(kind: str, amplitude: float, n_max: int, seed: int = 0) -> SpectralField:
    """Mean-zero initial data with sup norm ``amplitude``.

    Kinds: ``single-mode(j1,j2)`` (a cos(j.x + phi), phase from the seed),
    ``two-mode`` (cos x1 + cos 2x2 rescaled) and
    ``random-band(k_lo,k_hi,slope)`` (rescaled on the oversampled grid).
    """
    if not amplitude > 0:
        raise ValueError(f"amplitude must be > 0, got {amplitude}")
    name, args = parse_kind(kind)
    if name == "single-mode":
        if len(args) != 2:
            raise ValueError("single-mode takes two integer arguments (j1, j2)")
        j1, j2 = int(args[0]), int(args[1])
        if (j1, j2) == (0, 0):
            raise ValueError("single-mode needs a nonzero wave vector")
        if max(abs(j1), abs(j2)) > n_max:
            raise ValueError(f"mode ({j1}, {j2}) outside truncation n_max={n_max}")
        phase = np.random.default_rng(seed).uniform(0, 2 * np.pi)
        return SpectralField.from_modes(n_max, {(j1, j2): 0.5 * amplitude * np.exp(1j * phase)})
    if name == "two-mode":
        if n_max < 2:
            raise ValueError("two-mode needs n_max >= 2")
        base = SpectralField.from_modes(n_max, {(1, 0): 0.5, (0, 2): 0.5})
    elif name == "random-band":
        if len(args) != 3:
            raise ValueError("random-band takes (k_lo, k_hi, slope)")
        base = random_band(n_max, args[0], args[1], args[2], seed)
    else:
        raise ValueError(f"unknown initial condition {name!r}")
    return base * (amplitude / sup_norm_on_grid(base))

