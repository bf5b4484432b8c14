"""Aggregation-error minimization for over-the-air computation with a movable
receive array.

Transmit weights, the receive combiner, and the antenna positions are
optimized by block-coordinate descent; comparison schemes and deterministic
sweep tooling sit on top.
"""

from .beamforming import combiner_system, solve_beamformer
from .benchmarks import solve_fpa, solve_half_range, solve_ignore_hwi
from .channel import ChannelMatrix, channel_matrix, steering_vector
from .errors import ConfigurationError, FeasibilityError, SingularityError
from .experiments import SweepSpec, SweepRow, render_csv, run_sweep, write_csv
from .objective import TransceiverState, movement_energy, mse, power_budget
from .positioning import (PgdReport, finite_diff_gradient, optimize_positions,
                          project_apv)
from .power_alloc import PowerSolution, effective_coeffs, solve_power
from .scenario import (Apv, Scenario, SystemConfig, generate_scenario,
                       load_config_file, uniform_apv)
from .solver import (ConvergenceTrace, SolverOptions, bcd_solve,
                     evaluate_state)

__version__ = "0.1.0"

__all__ = [
    "Apv", "ChannelMatrix", "ConfigurationError", "ConvergenceTrace",
    "FeasibilityError", "PgdReport", "PowerSolution", "Scenario",
    "SingularityError", "SolverOptions", "SweepRow", "SweepSpec",
    "SystemConfig", "TransceiverState", "bcd_solve", "channel_matrix",
    "combiner_system", "effective_coeffs", "evaluate_state",
    "finite_diff_gradient", "generate_scenario", "load_config_file",
    "movement_energy", "mse", "optimize_positions", "power_budget",
    "project_apv", "render_csv", "run_sweep", "solve_beamformer",
    "solve_fpa", "solve_half_range", "solve_ignore_hwi", "solve_power",
    "steering_vector", "uniform_apv", "write_csv",
]
