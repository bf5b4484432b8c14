"""Comparison schemes: pinned positions, distortion-blind design, halved range."""

from __future__ import annotations

from dataclasses import replace

from .errors import FeasibilityError
from .objective import TransceiverState
from .scenario import Scenario, SystemConfig, uniform_apv
from .solver import ConvergenceTrace, SolverOptions, _descend, bcd_solve, evaluate_state


def solve_fpa(scenario: Scenario, config: SystemConfig,
              options: SolverOptions | None = None) -> tuple[TransceiverState, ConvergenceTrace]:
    """Two-block descent with antennas pinned to the uniform grid.

    Only the weights and the combiner alternate; no movement energy is spent,
    so the full power budget goes to transmission.
    """
    opts = options if options is not None else SolverOptions()
    grid = uniform_apv(config)
    return _descend(scenario, config, opts, grid, move_positions=False)


def hwi_ignorant_design(scenario: Scenario, config: SystemConfig,
                        options: SolverOptions | None = None,
                        ) -> tuple[TransceiverState, ConvergenceTrace, float]:
    """Full descent pretending the hardware is clean (distortion level 0).

    Returns the state it converged to, its trace (errors under the clean
    model), and the state's error re-evaluated under the true distortion
    level.  The state's own ``mse`` field holds the clean-model value.
    """
    ideal = replace(config, distortion_level=0.0)
    state, trace = bcd_solve(scenario, ideal, options)
    mismatched = evaluate_state(state, scenario, config)
    return state, trace, mismatched


def solve_ignore_hwi(scenario: Scenario, config: SystemConfig,
                     options: SolverOptions | None = None) -> tuple[TransceiverState, float]:
    """Distortion-blind design plus its error under the true distortion level."""
    state, _, mismatched = hwi_ignorant_design(scenario, config, options)
    return state, mismatched


def solve_half_range(scenario: Scenario, config: SystemConfig,
                     options: SolverOptions | None = None,
                     ) -> tuple[TransceiverState, ConvergenceTrace]:
    """Full descent with the placement region shrunk to half its length.

    The initial grid is recomputed for the shorter region.  Raises a
    feasibility error when the halved region cannot hold the array.
    """
    n = config.n_antennas
    half_length = 0.5 * config.region_length
    if half_length < (n - 1) * config.min_spacing:
        raise FeasibilityError("halved region too short for the required antenna spacing")
    half = replace(config, region_length=half_length)
    shrunk = replace(scenario, initial_positions=uniform_apv(half))
    return bcd_solve(shrunk, half, options)
