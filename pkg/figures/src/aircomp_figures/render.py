"""Line figures from sweep result CSV files.

The input schema is the one the simulation CLI writes: one row per
(axis value, scheme, seed) plus per-group mean rows.  Each figure filters the
rows of one axis, averages the per-seed error values itself, and draws one
line per scheme name.
"""

from __future__ import annotations

from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
import pandas as pd

REQUIRED_COLUMNS = ("axis", "value", "scheme", "seed", "mse", "rounds",
                    "move_energy", "tx_power", "converged")

# figure name -> (axis tag in the CSV, x-axis label)
FIGURES = {
    "convergence": ("iterations", "Iteration"),
    "vs_n": ("n_antennas", "N"),
    "vs_beta": ("distortion_level", "β"),
}


class SchemaError(ValueError):
    """The CSV does not match the sweep output schema."""


class DataError(ValueError):
    """The CSV matches the schema but holds no usable rows for the figure."""


@dataclass(frozen=True)
class RenderSummary:
    """What one render call drew: the schemes plotted and the point total."""

    figure: str
    out_path: str
    schemes: tuple
    n_points: int


def load_series(csv_path, figure: str) -> dict[str, tuple[np.ndarray, np.ndarray]]:
    """Per-scheme (values, mean error) arrays for one figure.

    Mean rows and error records (nan metrics) are dropped; the seed mean is
    recomputed from the per-seed rows.  Schemes come back in sorted order
    with their values ascending.
    """
    if figure not in FIGURES:
        raise ValueError(f"unknown figure '{figure}'; expected one of {sorted(FIGURES)}")
    axis, _ = FIGURES[figure]
    frame = pd.read_csv(csv_path, dtype=str)
    missing = [c for c in REQUIRED_COLUMNS if c not in frame.columns]
    if missing:
        raise SchemaError(f"{csv_path}: missing columns {missing}")
    rows = frame[(frame["axis"] == axis) & (frame["seed"] != "mean")].copy()
    try:
        rows["value"] = rows["value"].astype(float)
        rows["mse"] = rows["mse"].astype(float)
    except ValueError as exc:
        raise SchemaError(f"{csv_path}: non-numeric value or mse field: {exc}") from exc
    rows = rows.dropna(subset=["value", "mse"])
    if rows.empty:
        raise DataError(f"{csv_path}: no usable '{axis}' rows for figure '{figure}'")
    means = rows.groupby(["scheme", "value"], sort=True)["mse"].mean()
    series = {}
    for scheme in means.index.get_level_values("scheme").unique():
        portion = means.xs(scheme, level="scheme").sort_index()
        series[scheme] = (portion.index.to_numpy(dtype=float),
                          portion.to_numpy(dtype=float))
    return series


def render(csv_path, figure: str, out_path) -> RenderSummary:
    """Draw one figure from a sweep CSV and write it to ``out_path``.

    One line per scheme, seed-averaged error on a log scale.  Returns a
    summary with the schemes drawn and the total point count.
    """
    _, xlabel = FIGURES[figure] if figure in FIGURES else (None, None)
    series = load_series(csv_path, figure)
    fig, ax = plt.subplots(figsize=(6.0, 4.0))
    n_points = 0
    for scheme, (values, errors) in series.items():
        ax.plot(values, errors, marker="o", markersize=3.5, label=scheme)
        n_points += values.size
    ax.set_xlabel(xlabel)
    ax.set_ylabel("MSE")
    ax.set_yscale("log")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(out_path, dpi=150)
    plt.close(fig)
    return RenderSummary(figure=figure, out_path=str(out_path),
                         schemes=tuple(series), n_points=n_points)
