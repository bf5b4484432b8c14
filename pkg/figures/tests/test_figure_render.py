"""Rendering checks against the bundled sweep fixture."""

import csv
from pathlib import Path

import numpy as np
import pytest

from aircomp_figures import DataError, SchemaError, load_series, render
from aircomp_figures.cli import main

GOLDEN = Path(__file__).parent / "data" / "golden.csv"

# series expected per figure: trace schemes, the vs-N scheme trio, and the
# two schemes crossed with two user-count labels
EXPECTED_SERIES = {"convergence": 3, "vs_n": 3, "vs_beta": 4}


def test_every_figure_renders_with_the_expected_series(tmp_path):
    counts = {}
    for figure in EXPECTED_SERIES:
        out = tmp_path / f"{figure}.png"
        summary = render(GOLDEN, figure, out)
        assert out.exists() and out.stat().st_size > 0
        counts[figure] = len(summary.schemes)
    ok = counts == EXPECTED_SERIES
    print(f"[acceptance] figure-rendering: {'PASS' if ok else 'FAIL'}  "
          f"(series per figure {counts})")
    assert ok


def test_convergence_series_are_nonincreasing():
    for scheme, (values, errors) in load_series(GOLDEN, "convergence").items():
        assert list(values) == sorted(values)
        assert all(b <= a + 1e-12 for a, b in zip(errors, errors[1:])), scheme


def test_user_count_labels_become_their_own_series():
    schemes = set(load_series(GOLDEN, "vs_beta"))
    assert schemes == {"proposed_k6", "fpa_k6", "proposed_k10", "fpa_k10"}


def test_seed_mean_matches_a_hand_average():
    with open(GOLDEN, newline="") as fh:
        rows = [r for r in csv.DictReader(fh)
                if r["axis"] == "n_antennas" and r["scheme"] == "proposed"
                and r["seed"] != "mean" and r["value"] == "4"]
    expected = sum(float(r["mse"]) for r in rows) / len(rows)
    values, errors = load_series(GOLDEN, "vs_n")["proposed"]
    got = errors[list(values).index(4.0)]
    assert got == pytest.approx(expected, rel=1e-12)


def test_reloading_gives_identical_means():
    first = load_series(GOLDEN, "vs_beta")
    second = load_series(GOLDEN, "vs_beta")
    assert tuple(first) == tuple(second)
    for scheme in first:
        np.testing.assert_array_equal(first[scheme][0], second[scheme][0])
        np.testing.assert_array_equal(first[scheme][1], second[scheme][1])


def test_unknown_figure_rejected(tmp_path):
    with pytest.raises(ValueError):
        render(GOLDEN, "pie", tmp_path / "x.png")


def test_missing_column_is_a_schema_error(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("axis,value,scheme,seed\niterations,0,proposed,0\n")
    with pytest.raises(SchemaError):
        load_series(path, "convergence")


def test_non_numeric_error_field_is_a_schema_error(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("axis,value,scheme,seed,mse,rounds,move_energy,tx_power,converged\n"
                    "iterations,0,proposed,0,broken,1,0,1,1\n")
    with pytest.raises(SchemaError):
        load_series(path, "convergence")


def test_axis_without_rows_is_a_data_error(tmp_path):
    path = tmp_path / "trace_only.csv"
    path.write_text("axis,value,scheme,seed,mse,rounds,move_energy,tx_power,converged\n"
                    "iterations,0,proposed,0,1.5,1,0,1,1\n")
    with pytest.raises(DataError):
        load_series(path, "vs_beta")


def test_all_error_records_is_a_data_error(tmp_path):
    path = tmp_path / "nans.csv"
    path.write_text("axis,value,scheme,seed,mse,rounds,move_energy,tx_power,converged\n"
                    "n_antennas,4,proposed,0,nan,0,nan,nan,0\n")
    with pytest.raises(DataError):
        load_series(path, "vs_n")


def test_cli_renders_and_reports(tmp_path, capsys):
    out = tmp_path / "vs_n.png"
    assert main(["render", "--csv", str(GOLDEN), "--figure", "vs_n",
                 "--out", str(out)]) == 0
    assert out.exists()
    assert "3 series" in capsys.readouterr().out


def test_cli_schema_error_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.csv"
    path.write_text("axis,value\niterations,0\n")
    assert main(["render", "--csv", str(path), "--figure", "convergence",
                 "--out", str(tmp_path / "x.png")]) == 1
    assert "figure error" in capsys.readouterr().err


def test_cli_missing_file_exit_code(tmp_path, capsys):
    assert main(["render", "--csv", str(tmp_path / "missing.csv"),
                 "--figure", "vs_n", "--out", str(tmp_path / "x.png")]) == 1


def test_cli_rejects_unknown_figure(tmp_path):
    with pytest.raises(SystemExit):
        main(["render", "--csv", str(GOLDEN), "--figure", "volcano",
              "--out", str(tmp_path / "x.png")])
