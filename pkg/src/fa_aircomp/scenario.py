"""System configuration, position types, and deterministic scenario generation."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import ConfigurationError, FeasibilityError

# Absolute slack used by feasibility checks throughout the package.
FEASIBILITY_SLACK = 1e-9


def _readonly(arr: np.ndarray) -> np.ndarray:
    out = np.array(arr, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class SystemConfig:
    """Scalar parameters of the receive array and the user population.

    Lengths are in meters, powers in watts.  Fields left at ``None`` are
    resolved from the others: ``region_length`` defaults to
    ``n_antennas * wavelength``, ``min_spacing`` to ``0.5 * wavelength``, and
    ``total_power`` to ``n_users * per_user_power``.
    """

    n_antennas: int = 4
    n_users: int = 8
    wavelength: float = 1.0
    region_length: float | None = None
    min_spacing: float | None = None
    noise_power: float = 0.01
    distortion_level: float = 0.8  # relative hardware distortion magnitude
    move_cost: float = 0.8         # energy per meter of antenna travel
    per_user_power: float = 1.0
    total_power: float | None = None

    def __post_init__(self):
        for name in ("n_antennas", "n_users"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
                raise ConfigurationError(f"{name} must be an integer")
            if value < 1:
                raise ConfigurationError(f"{name} must be at least 1")
            object.__setattr__(self, name, int(value))
        if self.region_length is None:
            object.__setattr__(self, "region_length", self.n_antennas * float(self.wavelength))
        if self.min_spacing is None:
            object.__setattr__(self, "min_spacing", 0.5 * float(self.wavelength))
        if self.total_power is None:
            object.__setattr__(self, "total_power", self.n_users * float(self.per_user_power))
        for name in ("wavelength", "region_length", "noise_power", "per_user_power", "total_power"):
            value = float(getattr(self, name))
            if not np.isfinite(value) or value <= 0.0:
                raise ConfigurationError(f"{name} must be positive and finite")
            object.__setattr__(self, name, value)
        for name in ("min_spacing", "distortion_level", "move_cost"):
            value = float(getattr(self, name))
            if not np.isfinite(value) or value < 0.0:
                raise ConfigurationError(f"{name} must be nonnegative and finite")
            object.__setattr__(self, name, value)
        if self.region_length < (self.n_antennas - 1) * self.min_spacing:
            raise ConfigurationError(
                "region_length shorter than (n_antennas - 1) * min_spacing; "
                "no feasible antenna placement exists")


@dataclass(frozen=True, eq=False)
class Apv:
    """Antenna position vector, sorted in nondecreasing order."""

    positions: np.ndarray

    def __post_init__(self):
        pos = np.asarray(self.positions, dtype=float)
        if pos.ndim != 1 or pos.size == 0:
            raise ValueError("positions must be a non-empty 1-D vector")
        if not np.all(np.isfinite(pos)):
            raise ValueError("positions must be finite")
        if pos.size > 1 and np.any(np.diff(pos) < 0.0):
            raise ValueError("positions must be nondecreasing")
        object.__setattr__(self, "positions", _readonly(pos))

    def __len__(self) -> int:
        return self.positions.size

    def validate(self, config: SystemConfig, slack: float = FEASIBILITY_SLACK) -> None:
        """Check region bounds and adjacent spacing against ``config``."""
        p = self.positions
        if p.size != config.n_antennas:
            raise ValueError(f"expected {config.n_antennas} positions, got {p.size}")
        if p[0] < -slack:
            raise FeasibilityError("first antenna position lies below 0")
        if p[-1] > config.region_length + slack:
            raise FeasibilityError("last antenna position lies beyond the region end")
        if p.size > 1 and float(np.min(np.diff(p))) < config.min_spacing - slack:
            raise FeasibilityError("adjacent antennas closer than the minimum spacing")


@dataclass(frozen=True, eq=False)
class Scenario:
    """Per-user propagation parameters plus the pre-movement antenna positions."""

    gains: np.ndarray          # complex path gains, shape (K,)
    angles: np.ndarray         # angles of arrival in radians, shape (K,)
    initial_positions: Apv

    def __post_init__(self):
        gains = np.asarray(self.gains, dtype=complex)
        angles = np.asarray(self.angles, dtype=float)
        if gains.ndim != 1 or gains.size == 0:
            raise ValueError("gains must be a non-empty 1-D vector")
        if angles.shape != gains.shape:
            raise ValueError("angles and gains must have the same length")
        if np.any((angles < 0.0) | (angles >= np.pi)):
            raise ValueError("angles must lie in [0, pi)")
        object.__setattr__(self, "gains", _readonly(gains))
        object.__setattr__(self, "angles", _readonly(angles))

    @property
    def n_users(self) -> int:
        return self.gains.size


def uniform_apv(config: SystemConfig) -> Apv:
    """Uniform grid [0, L/N, ..., (N-1)L/N] over the placement region."""
    n = config.n_antennas
    spacing = config.region_length / n
    if n > 1 and spacing < config.min_spacing - FEASIBILITY_SLACK:
        raise FeasibilityError(
            f"uniform grid spacing {spacing:.6g} is below the minimum spacing "
            f"{config.min_spacing:.6g}")
    return Apv(config.region_length * np.arange(n) / n)


def generate_scenario(config: SystemConfig, seed: int) -> Scenario:
    """Draw a random scenario, deterministic in ``(config, seed)``.

    Uses numpy's PCG64 generator.  The draw order is fixed: angles of arrival
    uniform on [0, pi), then gain magnitudes log-uniform on [0.1, 1.0], then
    gain phases uniform on [0, 2*pi).  Antennas start on the uniform grid.
    """
    grid = uniform_apv(config)
    rng = np.random.default_rng(seed)
    k = config.n_users
    angles = rng.uniform(0.0, np.pi, size=k)
    magnitudes = np.exp(rng.uniform(np.log(0.1), np.log(1.0), size=k))
    phases = rng.uniform(0.0, 2.0 * np.pi, size=k)
    return Scenario(gains=magnitudes * np.exp(1j * phases), angles=angles,
                    initial_positions=grid)


# Config file handling.  Flat "key = value" lines; '#' starts a comment.
_CONFIG_INT_KEYS = ("n_antennas", "n_users", "seed")
_CONFIG_FLOAT_KEYS = ("wavelength", "region_length", "min_spacing", "noise_power",
                      "distortion_level", "move_cost", "per_user_power", "total_power")
CONFIG_KEYS = frozenset(_CONFIG_INT_KEYS + _CONFIG_FLOAT_KEYS)


def load_config_file(path) -> tuple[SystemConfig, int]:
    """Parse a flat key-value config file.

    Returns the config and the seed (0 when absent).  Missing keys fall back
    to the ``SystemConfig`` defaults; unknown or duplicate keys are errors.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigurationError(f"cannot read config file {path}: {exc}") from exc
    raw: dict[str, str] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        sep = "=" if "=" in body else (":" if ":" in body else None)
        if sep is None:
            raise ConfigurationError(f"{path}:{lineno}: expected 'key = value'")
        key, _, value = (s.strip() for s in body.partition(sep))
        if key not in CONFIG_KEYS:
            raise ConfigurationError(f"{path}:{lineno}: unknown key '{key}'")
        if key in raw:
            raise ConfigurationError(f"{path}:{lineno}: duplicate key '{key}'")
        if not value:
            raise ConfigurationError(f"{path}:{lineno}: missing value for '{key}'")
        raw[key] = value
    kwargs: dict[str, float | int] = {}
    for key, value in raw.items():
        try:
            kwargs[key] = int(value) if key in _CONFIG_INT_KEYS else float(value)
        except ValueError as exc:
            raise ConfigurationError(f"invalid value for '{key}': '{value}'") from exc
    seed = int(kwargs.pop("seed", 0))
    return SystemConfig(**kwargs), seed
