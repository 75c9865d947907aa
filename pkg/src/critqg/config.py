"""key=value run configuration."""

from __future__ import annotations

from .integrator import SimConfig
from .rhs import RhsConfig


class ConfigError(ValueError):
    pass


def _int(v: str) -> int:
    f = float(v)
    if not f.is_integer():
        raise ValueError(f"{v!r} is not an integer")
    return int(f)


# key -> (target, converter); target "rhs" fields live on RhsConfig
KEYS = {
    "kappa": ("rhs", "kappa", float),
    "alpha": ("rhs", "alpha", float),
    "delta": ("rhs", "delta", float),
    "dealias": ("rhs", "dealias_rule", str),
    "nonlinearity": ("rhs", "nonlinearity_path", str),
    "n_max": ("sim", "n_max", _int),
    "dt": ("sim", "dt", float),
    "t_end": ("sim", "t_end", float),
    "sample_every": ("sim", "sample_every", _int),
    "snapshot_every": ("sim", "snapshot_every", _int),
    "scheme": ("sim", "scheme", str),
    "seed": ("sim", "seed", _int),
    "initial": ("sim", "initial", str),
    "amplitude": ("sim", "amplitude", float),
    "output_dir": ("sim", "output_dir", str),
    "stability_guard": ("sim", "stability_guard", float),
}


def parse_config(text: str) -> SimConfig:
    """Parse a ``key=value`` document ('#' starts a comment).

    Missing keys keep the :class:`SimConfig` / :class:`RhsConfig` defaults.
    Unknown keys, duplicates, unparsable values and out-of-range values raise
    :class:`ConfigError`.
    """
    rhs_kw, sim_kw = {}, {}
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key=value, got {raw.strip()!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if key not in KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}; known keys: {', '.join(sorted(KEYS))}")
        if key in seen:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        seen.add(key)
        target, name, conv = KEYS[key]
        try:
            converted = conv(value)
        except ValueError as exc:
            raise ConfigError(f"line {lineno}: cannot parse {key}={value!r}: {exc}") from None
        (rhs_kw if target == "rhs" else sim_kw)[name] = converted
    try:
        return SimConfig(rhs=RhsConfig(**rhs_kw), **sim_kw)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None


def format_config(cfg: SimConfig) -> str:
    """Inverse of :func:`parse_config`."""
    lines = []
    for key, (target, name, _) in KEYS.items():
        value = getattr(cfg.rhs if target == "rhs" else cfg, name)
        lines.append(f"{key}={value!r}" if isinstance(value, float) else f"{key}={value}")
    return "\n".join(lines) + "\n"
