"""Error metric, movement energy, and power accounting behavior."""

import numpy as np
import pytest

from fa_aircomp import (Apv, ChannelMatrix, FeasibilityError, Scenario,
                        SystemConfig, TransceiverState, channel_matrix,
                        movement_energy, mse, power_budget, solve_beamformer)


def _scalar_cfg(noise, beta):
    return SystemConfig(n_antennas=1, n_users=1, noise_power=noise,
                        distortion_level=beta)


def test_mse_perfect_alignment_no_noise_limit():
    # K = N = 1, h = 1, w = 1, m = 1: alignment term vanishes, tiny noise left.
    cfg = _scalar_cfg(noise=1e-12, beta=0.0)
    h = ChannelMatrix([[1.0 + 0j]])
    value = mse([1.0], [1.0], h, cfg)
    assert value == pytest.approx(0.0, abs=1e-10)


def test_mse_scalar_with_noise_and_distortion():
    # 0 + 1*1 + 0.64*(1*1 + 1)*1 = 2.28
    cfg = _scalar_cfg(noise=1.0, beta=0.8)
    h = ChannelMatrix([[1.0 + 0j]])
    assert mse([1.0], [1.0], h, cfg) == pytest.approx(2.28, rel=1e-12)


def test_mse_zero_combiner_counts_users():
    cfg = SystemConfig(n_antennas=2, n_users=3, noise_power=0.5,
                       distortion_level=0.9)
    rng = np.random.default_rng(0)
    h = ChannelMatrix(rng.normal(size=(2, 3)) + 1j * rng.normal(size=(2, 3)))
    w = rng.normal(size=3) + 1j * rng.normal(size=3)
    assert mse(w, np.zeros(2), h, cfg) == 3.0


def test_mse_phase_rotation_invariance():
    # Rotating one user's channel by exp(j*phi) while counter-rotating its
    # weight leaves every term unchanged.
    cfg = SystemConfig(n_antennas=3, n_users=2, noise_power=0.2,
                       distortion_level=0.6)
    rng = np.random.default_rng(5)
    cols = rng.normal(size=(3, 2)) + 1j * rng.normal(size=(3, 2))
    w = rng.normal(size=2) + 1j * rng.normal(size=2)
    m = rng.normal(size=3) + 1j * rng.normal(size=3)
    base = mse(w, m, ChannelMatrix(cols), cfg)
    phi = 1.234
    cols2 = cols.copy()
    cols2[:, 0] *= np.exp(1j * phi)
    w2 = w.copy()
    w2[0] *= np.exp(-1j * phi)
    assert mse(w2, m, ChannelMatrix(cols2), cfg) == pytest.approx(base, rel=1e-12)


def test_mse_shape_errors():
    cfg = SystemConfig(n_antennas=2, n_users=2)
    h = ChannelMatrix(np.ones((2, 2), dtype=complex))
    with pytest.raises(ValueError):
        mse([1.0], np.ones(2), h, cfg)
    with pytest.raises(ValueError):
        mse(np.ones(2), [1.0], h, cfg)


def test_single_user_optimal_mse_is_position_invariant():
    # With one user every channel entry has the same magnitude, so after the
    # combiner is re-optimized the error does not depend on the positions.
    cfg = SystemConfig(n_antennas=4, n_users=1, wavelength=1.0,
                       region_length=4.0)
    sc = Scenario(gains=[0.5 * np.exp(0.7j)], angles=[0.9],
                  initial_positions=Apv([0.0, 1.0, 2.0, 3.0]))
    w = np.array([0.8 + 0.1j])
    values = []
    rng = np.random.default_rng(2)
    for _ in range(4):
        x = np.sort(rng.uniform(0, 4.0, 4))
        h = channel_matrix(sc, x, cfg)
        m = solve_beamformer(w, h, cfg)
        values.append(mse(w, m, h, cfg))
    assert np.max(values) - np.min(values) < 1e-12


def test_movement_energy_examples():
    assert movement_energy([0.0, 1.0], [0.0, 1.0], 0.8) == 0.0
    assert movement_energy([0.5, 1.5], [0.0, 1.0], 0.8) == pytest.approx(0.8)
    assert movement_energy([9.0, 9.5], [0.0, 1.0], 0.0) == 0.0
    with pytest.raises(ValueError):
        movement_energy([0.0, 1.0], [0.0], 0.8)


def test_power_budget_examples():
    cfg = SystemConfig(n_antennas=2, n_users=10, per_user_power=1.0,
                       move_cost=1.0, wavelength=1.0, region_length=2.0)
    assert cfg.total_power == 10.0
    assert power_budget(cfg, [0.0, 1.0], [0.0, 1.0]) == 10.0
    assert power_budget(cfg, [1.0, 2.0], [0.0, 1.0]) == pytest.approx(8.0)
    with pytest.raises(FeasibilityError):
        power_budget(cfg, [5.0, 6.5], [0.0, 1.0])  # movement energy 10.5


def test_state_validation():
    cfg = SystemConfig(n_antennas=2, n_users=2, wavelength=1.0,
                       region_length=2.0, per_user_power=1.0, move_cost=1.0,
                       total_power=2.0)
    grid = Apv([0.0, 1.0])
    good = TransceiverState(np.array([0.5, 0.5 + 0j]), np.ones(2), grid, 1.0)
    good.validate(cfg, grid)

    over_cap = TransceiverState(np.array([1.2, 0.0j]), np.ones(2), grid, 1.0)
    with pytest.raises(FeasibilityError):
        over_cap.validate(cfg, grid)

    # Per-user caps fine but movement + transmission exceeds the total.
    moved = Apv([0.5, 1.5])
    tight = TransceiverState(np.array([1.0, 1.0 + 0j]), np.ones(2), moved, 1.0)
    with pytest.raises(FeasibilityError):
        tight.validate(cfg, grid)

    with pytest.raises(ValueError):
        TransceiverState(np.array([0.1 + 0j]), np.ones(2), grid, 1.0).validate(cfg, grid)
