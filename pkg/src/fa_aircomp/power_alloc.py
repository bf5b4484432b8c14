"""Transmit weight optimization for a fixed combiner and fixed positions.

The weight subproblem is convex and separable apart from the shared sum-power
budget.  Each weight has the closed form w_k = conj(a_k) / (|a_k|^2 +
beta^2 c_k + lam); the budget multiplier lam is found by bisection and
per-user magnitude caps are enforced by radial clipping.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channel import ChannelMatrix
from .errors import FeasibilityError
from .scenario import SystemConfig

BISECTION_ITERS = 60


@dataclass(frozen=True, eq=False)
class PowerSolution:
    """Weights, the budget multiplier, and the stationarity residual.

    ``kkt_residual`` is max_k |conj(a_k)(a_k w_k - 1) + (beta^2 c_k + lam) w_k|
    at the returned point.  It is only meaningful as an optimality certificate
    when no per-user cap is active; a clipped weight carries an implicit
    cap multiplier that this expression omits.
    """

    weights: np.ndarray
    multiplier: float
    kkt_residual: float

    def __post_init__(self):
        w = np.array(np.asarray(self.weights, dtype=complex), copy=True)
        if w.ndim != 1:
            raise ValueError("weights must be a 1-D vector")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)


def effective_coeffs(beamformer, channels: ChannelMatrix,
                     config: SystemConfig) -> tuple[np.ndarray, np.ndarray]:
    """Per-user coupling a_k = m^H h_k and distortion weight c_k = sum_n |m_n|^2 |h_k[n]|^2."""
    m = np.asarray(beamformer, dtype=complex)
    h = channels.columns
    if m.shape != (channels.n_antennas,):
        raise ValueError(f"beamformer must have shape ({channels.n_antennas},), got {m.shape}")
    coupling = m.conj() @ h
    distortion = (np.abs(m) ** 2) @ (np.abs(h) ** 2)
    return coupling, distortion


def solve_power(beamformer, channels: ChannelMatrix, config: SystemConfig,
                budget: float) -> PowerSolution:
    """Optimal transmit weights under per-user caps and a total power budget.

    The unconstrained closed form is tried first.  If it violates a
    constraint, cap violators are clipped to magnitude sqrt(P_k) keeping the
    phase of conj(a_k), the multiplier interval is grown by lam_hi <- 2*lam_hi
    + 1 until the budget holds at lam_hi, and exactly 60 bisection steps
    refine lam.  The weights at the feasible interval endpoint are clipped
    once more so both constraint families hold at exit.
    """
    if budget < 0:
        raise FeasibilityError("negative transmit power budget")
    a, c = effective_coeffs(beamformer, channels, config)
    den = np.abs(a) ** 2 + config.distortion_level ** 2 * c
    abar = np.conj(a)
    active = np.abs(a) > 0.0
    cap = config.per_user_power

    def weights_at(lam: float) -> np.ndarray:
        w = np.zeros_like(a)
        w[active] = abar[active] / (den[active] + lam)
        return w

    def clipped(w: np.ndarray) -> np.ndarray:
        over = np.abs(w) ** 2 > cap
        if np.any(over):
            w = w.copy()
            w[over] = np.sqrt(cap) * abar[over] / np.abs(abar[over])
        return w

    def total(w: np.ndarray) -> float:
        return float(np.sum(np.abs(w) ** 2))

    def residual(w: np.ndarray, lam: float) -> float:
        r = abar * (a * w - 1.0) + (config.distortion_level ** 2 * c + lam) * w
        return float(np.max(np.abs(r)))

    w = weights_at(0.0)
    if total(w) <= budget and np.all(np.abs(w) ** 2 <= cap):
        return PowerSolution(w, 0.0, residual(w, 0.0))

    if budget == 0.0:
        # Only the all-off point is feasible and the budget multiplier
        # diverges; report it as 0 with an honest (large) residual.
        w = np.zeros_like(a)
        return PowerSolution(w, 0.0, residual(w, 0.0))

    lam_lo, lam_hi = 0.0, 1.0
    while total(weights_at(lam_hi)) > budget:
        lam_hi = 2.0 * lam_hi + 1.0
    for _ in range(BISECTION_ITERS):
        lam = 0.5 * (lam_lo + lam_hi)
        if total(weights_at(lam)) <= budget:
            lam_hi = lam
        else:
            lam_lo = lam
    # lam_hi kept the budget feasible throughout; clipping only shrinks
    # magnitudes, so both constraint families hold at the returned point.
    w = clipped(weights_at(lam_hi))
    return PowerSolution(w, lam_hi, residual(w, lam_hi))
