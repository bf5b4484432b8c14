"""Seed-batched parameter sweeps with deterministic CSV output."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .benchmarks import hwi_ignorant_design, solve_fpa, solve_half_range
from .errors import ConfigurationError, FeasibilityError
from .objective import movement_energy
from .scenario import SystemConfig, generate_scenario, uniform_apv
from .solver import SolverOptions, bcd_solve

AXES = ("iterations", "n_antennas", "distortion_level")
SCHEMES = ("proposed", "fpa", "ignore_hwi_ideal", "ignore_hwi_mismatched", "half_range")
CSV_HEADER = "axis,value,scheme,seed,mse,rounds,move_energy,tx_power,converged"
MEAN_SEED = "mean"


@dataclass(frozen=True)
class SweepSpec:
    """One sweep: an axis, its values, the schemes to run, and the seed batch.

    ``label`` is appended to every scheme name in the output rows, which lets
    runs that differ in something outside the schema (the user count, say) be
    concatenated into one file and still plot as separate series.
    """

    axis: str
    values: tuple
    schemes: tuple
    seeds: tuple
    base_config: SystemConfig
    label: str = ""

    def __post_init__(self):
        if self.axis not in AXES:
            raise ValueError(f"unknown sweep axis '{self.axis}'; expected one of {AXES}")
        values = tuple(self.values)
        if not values:
            raise ValueError("values must be non-empty")
        if any(values[i + 1] < values[i] for i in range(len(values) - 1)):
            raise ValueError("values must be sorted ascending")
        schemes = tuple(self.schemes)
        if not schemes:
            raise ValueError("schemes must be non-empty")
        for scheme in schemes:
            if scheme not in SCHEMES:
                raise ValueError(f"unknown scheme '{scheme}'; expected one of {SCHEMES}")
        seeds = tuple(int(s) for s in self.seeds)
        if not seeds:
            raise ValueError("seeds must be non-empty")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "schemes", schemes)
        object.__setattr__(self, "seeds", seeds)


@dataclass(frozen=True)
class SweepRow:
    """One CSV row; error records carry nan metrics and converged = 0."""

    axis: str
    value: object
    scheme: str
    seed: str
    mse: float
    rounds: float
    move_energy: float
    tx_power: float
    converged: float


@dataclass(frozen=True)
class _CellResult:
    mse: float
    rounds: int
    move_energy: float
    tx_power: float
    converged: bool
    round_trace: tuple


def config_for_value(spec: SweepSpec, value) -> SystemConfig:
    """Config for one sweep value.

    The antenna-count axis rescales the region proportionally so a base
    region of one wavelength per antenna keeps that ratio at every value.
    """
    base = spec.base_config
    if spec.axis == "iterations":
        return base
    if spec.axis == "n_antennas":
        n = int(value)
        length = n * base.region_length / base.n_antennas
        return replace(base, n_antennas=n, region_length=length)
    return replace(base, distortion_level=float(value))


def _run_cell(scheme: str, scenario, config: SystemConfig,
              options: SolverOptions) -> _CellResult:
    """Run one scheme on one scenario and collect the row metrics."""
    if scheme == "proposed":
        state, trace = bcd_solve(scenario, config, options)
        moved = movement_energy(state.positions, scenario.initial_positions,
                                config.move_cost)
        final = state.mse
    elif scheme == "fpa":
        state, trace = solve_fpa(scenario, config, options)
        moved = 0.0
        final = state.mse
    elif scheme == "half_range":
        state, trace = solve_half_range(scenario, config, options)
        half = replace(config, region_length=0.5 * config.region_length)
        moved = movement_energy(state.positions, uniform_apv(half), config.move_cost)
        final = state.mse
    elif scheme in ("ignore_hwi_ideal", "ignore_hwi_mismatched"):
        state, trace, mismatched = hwi_ignorant_design(scenario, config, options)
        moved = movement_energy(state.positions, scenario.initial_positions,
                                config.move_cost)
        final = state.mse if scheme == "ignore_hwi_ideal" else mismatched
    else:
        raise ValueError(f"unknown scheme '{scheme}'")
    tx = float(np.sum(np.abs(state.weights) ** 2))
    return _CellResult(mse=final, rounds=trace.rounds, move_energy=moved,
                       tx_power=tx, converged=trace.converged,
                       round_trace=tuple(float(v) for v in trace.mse_per_round))


def _error_cell() -> _CellResult:
    return _CellResult(mse=math.nan, rounds=0, move_energy=math.nan,
                       tx_power=math.nan, converged=False, round_trace=(math.nan,))


def _mean_row(spec: SweepSpec, value, scheme: str, rows: list[SweepRow]) -> SweepRow:
    good = [r for r in rows if not math.isnan(r.mse)]
    if good:
        mean = lambda field: float(np.mean([getattr(r, field) for r in good]))
        stats = {f: mean(f) for f in ("mse", "rounds", "move_energy", "tx_power", "converged")}
    else:
        stats = {f: math.nan for f in ("mse", "rounds", "move_energy", "tx_power", "converged")}
    return SweepRow(spec.axis, value, scheme, MEAN_SEED, **stats)


def run_sweep(spec: SweepSpec,
              options: SolverOptions | None = None) -> list[SweepRow]:
    """Run every (value, scheme, seed) combination of a sweep.

    Scenarios are generated once per (value, seed) and shared across schemes,
    so scheme comparisons are paired.  For the iteration axis one solve per
    (scheme, seed) supplies the whole error trace; values index into it and
    entries past its end repeat the final value.  Rows are grouped by value
    then scheme, seeds ascending, with a mean row closing each group.
    An infeasible combination yields an error record and the run continues.
    """
    opts = options if options is not None else SolverOptions()
    rows: list[SweepRow] = []

    if spec.axis == "iterations":
        if any(int(v) != v or v < 0 for v in spec.values):
            raise ValueError("iteration values must be nonnegative integers")
        cells: dict[tuple[str, int], _CellResult] = {}
        for scheme in spec.schemes:
            for seed in spec.seeds:
                scenario = generate_scenario(spec.base_config, seed)
                if scheme == "ignore_hwi_mismatched":
                    # The clean-model solve does not record per-round errors
                    # under the true distortion level, so no trace exists.
                    cells[scheme, seed] = _error_cell()
                    continue
                try:
                    cells[scheme, seed] = _run_cell(scheme, scenario,
                                                    spec.base_config, opts)
                except (ConfigurationError, FeasibilityError):
                    cells[scheme, seed] = _error_cell()
        for value in spec.values:
            idx = int(value)
            for scheme in spec.schemes:
                group: list[SweepRow] = []
                for seed in spec.seeds:
                    cell = cells[scheme, seed]
                    trace = cell.round_trace
                    entry = trace[min(idx, len(trace) - 1)]
                    group.append(SweepRow(spec.axis, idx, scheme + spec.label,
                                          str(seed), entry, cell.rounds,
                                          cell.move_energy, cell.tx_power,
                                          float(cell.converged)))
                rows.extend(group)
                rows.append(_mean_row(spec, idx, scheme + spec.label, group))
        return rows

    for value in spec.values:
        try:
            config = config_for_value(spec, value)
        except (ConfigurationError, FeasibilityError):
            config = None
        scenarios = {}
        if config is not None:
            for seed in spec.seeds:
                scenarios[seed] = generate_scenario(config, seed)
        for scheme in spec.schemes:
            group = []
            for seed in spec.seeds:
                if config is None:
                    cell = _error_cell()
                else:
                    try:
                        cell = _run_cell(scheme, scenarios[seed], config, opts)
                    except (ConfigurationError, FeasibilityError):
                        cell = _error_cell()
                group.append(SweepRow(spec.axis, value, scheme + spec.label,
                                      str(seed), cell.mse, cell.rounds,
                                      cell.move_energy, cell.tx_power,
                                      float(cell.converged)))
            rows.extend(group)
            rows.append(_mean_row(spec, value, scheme + spec.label, group))
    return rows


def trace_rows(config: SystemConfig, seed: int,
               options: SolverOptions | None = None) -> list[SweepRow]:
    """Per-round error rows for one seed across the three traceable schemes."""
    opts = options if options is not None else SolverOptions()
    schemes = ("proposed", "fpa", "half_range")
    scenario = generate_scenario(config, seed)
    cells = {}
    for scheme in schemes:
        try:
            cells[scheme] = _run_cell(scheme, scenario, config, opts)
        except (ConfigurationError, FeasibilityError):
            cells[scheme] = _error_cell()
    longest = max(len(cells[s].round_trace) for s in schemes)
    rows = []
    for idx in range(longest):
        for scheme in schemes:
            cell = cells[scheme]
            trace = cell.round_trace
            entry = trace[min(idx, len(trace) - 1)]
            row = SweepRow("iterations", idx, scheme, str(seed), entry,
                           cell.rounds, cell.move_energy, cell.tx_power,
                           float(cell.converged))
            rows.append(row)
            rows.append(SweepRow("iterations", idx, scheme, MEAN_SEED, entry,
                                 float(cell.rounds), cell.move_energy,
                                 cell.tx_power, float(cell.converged)))
    return rows


def _fmt_float(value: float) -> str:
    value = float(value)
    if math.isnan(value):
        return "nan"
    return format(value, ".12g")


def _fmt_row(row: SweepRow) -> str:
    if row.axis == "distortion_level":
        value = _fmt_float(row.value)
    else:
        value = str(int(row.value))
    if row.seed == MEAN_SEED:
        rounds = _fmt_float(row.rounds)
        converged = _fmt_float(row.converged)
    else:
        rounds = str(int(row.rounds))
        converged = str(int(row.converged))
    return ",".join((row.axis, value, row.scheme, row.seed, _fmt_float(row.mse),
                     rounds, _fmt_float(row.move_energy), _fmt_float(row.tx_power),
                     converged))


def render_csv(rows: list[SweepRow]) -> str:
    """Exact CSV text: fixed header, 12 significant digits, LF line endings."""
    lines = [CSV_HEADER]
    lines.extend(_fmt_row(row) for row in rows)
    return "\n".join(lines) + "\n"


def write_csv(path, rows: list[SweepRow]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(render_csv(rows))


def validate_rows(rows: list[SweepRow], spec: SweepSpec) -> None:
    """Re-check feasibility of every per-seed row against its config.

    Raises FeasibilityError on a negative error value, an overdrawn transmit
    power sum, or movement plus transmission beyond the total budget.
    """
    slack = 1e-9
    for row in rows:
        if row.seed == MEAN_SEED or math.isnan(row.mse):
            continue
        config = config_for_value(spec, row.value) if spec.axis != "iterations" \
            else spec.base_config
        if row.mse < 0.0:
            raise FeasibilityError(f"negative error value in row {row}")
        if row.tx_power > config.n_users * config.per_user_power + slack:
            raise FeasibilityError(f"transmit power beyond the per-user caps in row {row}")
        if row.move_energy + row.tx_power > config.total_power + slack:
            raise FeasibilityError(f"power budget exceeded in row {row}")
