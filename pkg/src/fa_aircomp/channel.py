"""Steering vectors and line-of-sight channel construction."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .scenario import Apv, Scenario, SystemConfig


def positions_array(positions) -> np.ndarray:
    """Accept an Apv or a plain coordinate array."""
    if isinstance(positions, Apv):
        return positions.positions
    return np.asarray(positions, dtype=float)


@dataclass(frozen=True, eq=False)
class ChannelMatrix:
    """Per-user channel vectors stacked as columns, shape (N, K)."""

    columns: np.ndarray

    def __post_init__(self):
        cols = np.asarray(self.columns, dtype=complex)
        if cols.ndim != 2 or cols.size == 0:
            raise ValueError("channel matrix must be 2-D (antennas x users) and non-empty")
        arr = np.array(cols, copy=True)
        arr.setflags(write=False)
        object.__setattr__(self, "columns", arr)

    @property
    def n_antennas(self) -> int:
        return self.columns.shape[0]

    @property
    def n_users(self) -> int:
        return self.columns.shape[1]


def steering_vector(positions, angle: float, wavelength: float) -> np.ndarray:
    """Array response with entries exp(j * (2*pi/wavelength) * x_n * cos(angle))."""
    if wavelength <= 0:
        raise ValueError("wavelength must be positive")
    x = positions_array(positions)
    return np.exp(1j * (2.0 * np.pi / wavelength) * x * np.cos(angle))


def channel_matrix(scenario: Scenario, positions, config: SystemConfig) -> ChannelMatrix:
    """Line-of-sight channels h_k = gain_k * steering(positions, angle_k).

    Every entry of column k has magnitude |gain_k|, so moving antennas changes
    phases only.
    """
    x = positions_array(positions)
    if x.ndim != 1 or x.size != config.n_antennas:
        raise ValueError(f"expected {config.n_antennas} antenna positions, got shape {x.shape}")
    if scenario.n_users != config.n_users:
        raise ValueError(f"scenario has {scenario.n_users} users, config expects {config.n_users}")
    phase = (2.0 * np.pi / config.wavelength) * np.outer(x, np.cos(scenario.angles))
    return ChannelMatrix(scenario.gains[np.newaxis, :] * np.exp(1j * phase))
