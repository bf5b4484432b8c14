"""Aggregation error, movement energy, and power accounting."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channel import ChannelMatrix, positions_array
from .errors import FeasibilityError
from .scenario import FEASIBILITY_SLACK, Apv, SystemConfig


def mse(weights, beamformer, channels: ChannelMatrix, config: SystemConfig) -> float:
    """Expected squared error of the aggregated value.

    For transmit weights w, receive combiner m, and channel columns h_k:

        sum_k |m^H h_k w_k - 1|^2 + sigma2 * ||m||^2
            + beta^2 * sum_n (sum_k |w_k|^2 |h_k[n]|^2 + sigma2) * |m_n|^2

    where sigma2 is the noise power and beta the distortion level.  The value
    is exact for the statistical model; nothing is simulated.
    """
    w = np.asarray(weights, dtype=complex)
    m = np.asarray(beamformer, dtype=complex)
    h = channels.columns
    if w.shape != (channels.n_users,):
        raise ValueError(f"weights must have shape ({channels.n_users},), got {w.shape}")
    if m.shape != (channels.n_antennas,):
        raise ValueError(f"beamformer must have shape ({channels.n_antennas},), got {m.shape}")
    coupling = m.conj() @ h
    misalignment = float(np.sum(np.abs(coupling * w - 1.0) ** 2))
    noise = config.noise_power * float(np.vdot(m, m).real)
    per_antenna = (np.abs(h) ** 2) @ (np.abs(w) ** 2) + config.noise_power
    distortion = config.distortion_level ** 2 * float((np.abs(m) ** 2) @ per_antenna)
    return misalignment + noise + distortion


def movement_energy(positions, initial, move_cost: float) -> float:
    """Energy spent moving antennas: move_cost * sum_n |x_n - x_n_init|."""
    x = positions_array(positions)
    x0 = positions_array(initial)
    if x.shape != x0.shape:
        raise ValueError("position vectors differ in length")
    return float(move_cost * np.sum(np.abs(x - x0)))


def power_budget(config: SystemConfig, positions, initial) -> float:
    """Transmit power left after paying for antenna movement."""
    spent = movement_energy(positions, initial, config.move_cost)
    if spent > config.total_power + FEASIBILITY_SLACK:
        raise FeasibilityError(
            f"movement energy {spent:.6g} exceeds the total power budget "
            f"{config.total_power:.6g}")
    return max(config.total_power - spent, 0.0)


@dataclass(frozen=True, eq=False)
class TransceiverState:
    """Transmit weights, receive combiner, antenna positions, and cached error."""

    weights: np.ndarray
    beamformer: np.ndarray
    positions: Apv
    mse: float

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=complex)
        m = np.asarray(self.beamformer, dtype=complex)
        if w.ndim != 1 or m.ndim != 1:
            raise ValueError("weights and beamformer must be 1-D vectors")
        for name, arr in (("weights", w), ("beamformer", m)):
            out = np.array(arr, copy=True)
            out.setflags(write=False)
            object.__setattr__(self, name, out)
        object.__setattr__(self, "mse", float(self.mse))

    def validate(self, config: SystemConfig, initial_positions,
                 slack: float = FEASIBILITY_SLACK) -> None:
        """Check power caps, the movement-plus-transmit budget, and positions."""
        if self.weights.shape != (config.n_users,):
            raise ValueError(f"expected {config.n_users} weights, got {self.weights.shape}")
        if self.beamformer.shape != (config.n_antennas,):
            raise ValueError(f"expected {config.n_antennas} beamformer entries, "
                             f"got {self.beamformer.shape}")
        if np.any(np.abs(self.weights) ** 2 > config.per_user_power + slack):
            raise FeasibilityError("per-user transmit power cap violated")
        tx = float(np.sum(np.abs(self.weights) ** 2))
        spent = movement_energy(self.positions, initial_positions, config.move_cost)
        if spent + tx > config.total_power + slack:
            raise FeasibilityError(
                "movement energy plus transmit power exceeds the total budget")
        self.positions.validate(config, slack=slack)
