"""Block-coordinate descent over transmit weights, combiner, and positions."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .beamforming import solve_beamformer
from .channel import channel_matrix
from .objective import TransceiverState, mse, power_budget
from .positioning import optimize_positions
from .power_alloc import solve_power
from .scenario import Apv, Scenario, SystemConfig


@dataclass(frozen=True)
class SolverOptions:
    """Outer-loop controls."""

    max_rounds: int = 50
    rel_tol: float = 1e-6      # stop once the relative per-round decrease falls below this
    block_trace: bool = False  # record an error value after every block update


@dataclass(frozen=True, eq=False)
class ConvergenceTrace:
    """Error values recorded while a solver ran.

    ``mse_per_round`` starts with the error of the initial point and gains one
    entry per round, or one entry per block update when ``block_trace`` was
    set.  It is non-increasing.
    """

    mse_per_round: np.ndarray
    rounds: int
    converged: bool

    def __post_init__(self):
        trace = np.array(np.asarray(self.mse_per_round, dtype=float), copy=True)
        trace.setflags(write=False)
        object.__setattr__(self, "mse_per_round", trace)


def _descend(scenario: Scenario, config: SystemConfig, opts: SolverOptions,
             start: Apv, move_positions: bool) -> tuple[TransceiverState, ConvergenceTrace]:
    """Shared descent loop; position updates are optional.

    Every block keeps its previous value whenever the candidate fails to
    lower the error, so the recorded trace never increases.
    """
    init = scenario.initial_positions if move_positions else start
    x = start
    channels = channel_matrix(scenario, x, config)
    n = config.n_antennas
    m = np.ones(n, dtype=complex) / np.sqrt(n)
    w = solve_power(m, channels, config, power_budget(config, x, init)).weights
    current = mse(w, m, channels, config)

    entries = [current]
    rounds_done = 0
    converged = False
    for rounds_done in range(1, opts.max_rounds + 1):
        previous = current

        budget = power_budget(config, x, init)
        w_new = solve_power(m, channels, config, budget).weights
        cand = mse(w_new, m, channels, config)
        if cand <= current:
            w, current = w_new, cand
        if opts.block_trace:
            entries.append(current)

        m_new = solve_beamformer(w, channels, config)
        cand = mse(w, m_new, channels, config)
        if cand <= current:
            m, current = m_new, cand
        if opts.block_trace:
            entries.append(current)

        if move_positions:
            report = optimize_positions(TransceiverState(w, m, x, current),
                                        scenario, config)
            channels_new = channel_matrix(scenario, report.final_positions, config)
            cand = mse(w, m, channels_new, config)
            if cand <= current:
                x, channels, current = report.final_positions, channels_new, cand
            if opts.block_trace:
                entries.append(current)
        if not opts.block_trace:
            entries.append(current)

        if previous - current <= opts.rel_tol * max(previous, np.finfo(float).tiny):
            converged = True
            break

    state = TransceiverState(w, m, x, current)
    return state, ConvergenceTrace(np.asarray(entries), rounds_done, converged)


def bcd_solve(scenario: Scenario, config: SystemConfig,
              options: SolverOptions | None = None) -> tuple[TransceiverState, ConvergenceTrace]:
    """Minimize the aggregation error by cyclic block updates.

    Each round updates the transmit weights (closed form plus budget
    bisection), then the receive combiner (linear solve), then the antenna
    positions (projected gradient descent), starting from the scenario's
    initial positions and the unit-norm all-ones combiner.  Stops once the
    relative per-round improvement drops below ``rel_tol`` or after
    ``max_rounds`` rounds.  Returns the final state and the trace.
    """
    opts = options if options is not None else SolverOptions()
    scenario.initial_positions.validate(config)
    return _descend(scenario, config, opts, scenario.initial_positions,
                    move_positions=True)


def evaluate_state(state: TransceiverState, scenario: Scenario,
                   config: SystemConfig) -> float:
    """Error of an existing state under ``config``, rebuilding the channels."""
    channels = channel_matrix(scenario, state.positions, config)
    return mse(state.weights, state.beamformer, channels, config)
