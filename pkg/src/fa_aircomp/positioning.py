"""Antenna position optimization by projected gradient descent.

The error is evaluated through the channel model at candidate positions, the
gradient comes from forward finite differences, steps must pass a
sufficient-decrease test, and a halving back-off keeps movement energy within
the power left over after transmission.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .channel import channel_matrix, positions_array
from .objective import TransceiverState, movement_energy, mse
from .scenario import FEASIBILITY_SLACK, Apv, Scenario, SystemConfig
from .errors import FeasibilityError

GRADIENT_STEP_FRAC = 1e-4   # finite-difference step, in wavelengths
STEP_CAP_FRAC = 0.7         # initial and maximum step size, in wavelengths
MIN_STEP = 1e-6             # termination threshold on the step size, meters
MAX_ITERS = 30
ARMIJO_C = 1e-3             # sufficient-decrease constant


@dataclass(frozen=True, eq=False)
class PgdReport:
    """Outcome of one projected-gradient run."""

    final_positions: Apv
    iterations: int
    accepted_steps: int
    final_step_size: float
    mse_trace: np.ndarray   # error before the run, then after each iteration

    def __post_init__(self):
        trace = np.array(np.asarray(self.mse_trace, dtype=float), copy=True)
        trace.setflags(write=False)
        object.__setattr__(self, "mse_trace", trace)


def _objective_at(x: np.ndarray, weights, beamformer, scenario: Scenario,
                  config: SystemConfig) -> float:
    return mse(weights, beamformer, channel_matrix(scenario, x, config), config)


def finite_diff_gradient(positions, weights, beamformer, scenario: Scenario,
                         config: SystemConfig) -> np.ndarray:
    """Forward finite-difference gradient of the error in each antenna coordinate."""
    x0 = positions_array(positions)
    eps = GRADIENT_STEP_FRAC * config.wavelength
    base = _objective_at(x0, weights, beamformer, scenario, config)
    grad = np.empty(x0.size)
    for n in range(x0.size):
        shifted = x0.copy()
        shifted[n] += eps
        grad[n] = (_objective_at(shifted, weights, beamformer, scenario, config) - base) / eps
    return grad


def project_apv(raw, config: SystemConfig) -> Apv:
    """Project raw coordinates onto the ordered, bounded, spaced position set.

    Sorts, clamps to [0, L], then walks forward enforcing the minimum spacing.
    If that pushes the last antenna past L, it is pinned to L and a backward
    walk restores the spacing, which is possible whenever
    L >= (N - 1) * min_spacing.
    """
    n = config.n_antennas
    length = config.region_length
    gap = config.min_spacing
    if length < (n - 1) * gap - FEASIBILITY_SLACK:
        raise FeasibilityError("region too short for the required antenna spacing")
    x = np.sort(np.asarray(raw, dtype=float))
    if x.ndim != 1 or x.size != n:
        raise ValueError(f"expected {n} coordinates, got shape {x.shape}")
    x = np.clip(x, 0.0, length)
    for i in range(1, n):
        if x[i] < x[i - 1] + gap:
            x[i] = x[i - 1] + gap
    if x[-1] > length:
        x[-1] = length
        for i in range(n - 1, 0, -1):
            if x[i - 1] > x[i] - gap:
                x[i - 1] = x[i] - gap
    return Apv(x)


def optimize_positions(state: TransceiverState, scenario: Scenario,
                       config: SystemConfig, *, max_iters: int = MAX_ITERS,
                       armijo_c: float = ARMIJO_C,
                       min_step: float = MIN_STEP) -> PgdReport:
    """Descend the error over antenna positions with (weights, combiner) fixed.

    Movement is charged against the power left after transmission,
    total_power - sum_k |w_k|^2, measured from the scenario's initial
    positions.  A candidate that overshoots the budget has its step halved and
    is re-projected until it fits or the step collapses below ``min_step``.
    Accepted steps satisfy F_new <= F_old - armijo_c * alpha * ||g||^2; a
    rejected step keeps the previous point and halves the step.  Terminates
    after ``max_iters`` iterations or once the step drops below ``min_step``.
    """
    w = state.weights
    m = state.beamformer
    init = scenario.initial_positions
    state.validate(config, init)
    move_budget = max(config.total_power - float(np.sum(np.abs(w) ** 2)), 0.0)
    step_cap = STEP_CAP_FRAC * config.wavelength

    x = state.positions.positions.copy()
    value = _objective_at(x, w, m, scenario, config)
    grad = finite_diff_gradient(x, w, m, scenario, config)
    alpha = step_cap
    trace = [value]
    accepted = 0
    iterations = 0

    for iterations in range(1, max_iters + 1):
        candidate = project_apv(x - alpha * grad, config).positions
        fits = movement_energy(candidate, init, config.move_cost) <= move_budget
        while not fits:
            alpha *= 0.5
            candidate = project_apv(x - alpha * grad, config).positions
            fits = movement_energy(candidate, init, config.move_cost) <= move_budget
            if alpha < min_step:
                break
        cand_value = _objective_at(candidate, w, m, scenario, config)
        if fits and cand_value <= value - armijo_c * alpha * float(grad @ grad):
            x = candidate
            value = cand_value
            grad = finite_diff_gradient(x, w, m, scenario, config)
            alpha = min(1.2 * alpha, step_cap)
            accepted += 1
        else:
            alpha *= 0.5
        trace.append(value)
        if alpha < min_step:
            break

    return PgdReport(final_positions=Apv(x), iterations=iterations,
                     accepted_steps=accepted, final_step_size=alpha,
                     mse_trace=np.asarray(trace))
