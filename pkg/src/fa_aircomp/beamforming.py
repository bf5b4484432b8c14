"""Receive combiner optimization for fixed transmit weights and positions."""

from __future__ import annotations

import numpy as np
from scipy.linalg import cho_factor, cho_solve

from .channel import ChannelMatrix
from .errors import SingularityError
from .scenario import SystemConfig


def combiner_system(weights, channels: ChannelMatrix,
                    config: SystemConfig) -> tuple[np.ndarray, np.ndarray]:
    """Normal-equation matrix and right-hand side for the optimal combiner.

    R = (1 + beta^2) sigma2 I + beta^2 diag(S) + S with
    S = sum_k |w_k|^2 h_k h_k^H, and rhs = sum_k w_k h_k.  R is Hermitian and,
    for sigma2 > 0, positive definite with smallest eigenvalue at least
    (1 + beta^2) sigma2.
    """
    w = np.asarray(weights, dtype=complex)
    h = channels.columns
    if w.shape != (channels.n_users,):
        raise ValueError(f"weights must have shape ({channels.n_users},), got {w.shape}")
    pw = np.abs(w) ** 2
    signal = (h * pw) @ h.conj().T
    per_antenna = (np.abs(h) ** 2) @ pw
    beta2 = config.distortion_level ** 2
    r = signal + np.diag(beta2 * per_antenna)
    r[np.diag_indices_from(r)] += (1.0 + beta2) * config.noise_power
    return r, h @ w


def solve_beamformer(weights, channels: ChannelMatrix, config: SystemConfig) -> np.ndarray:
    """Combiner minimizing the aggregation error for the given weights.

    Solves R m = rhs by Cholesky factorization; no explicit inverse is formed.
    """
    r, rhs = combiner_system(weights, channels, config)
    try:
        factor = cho_factor(r, lower=True)
    except np.linalg.LinAlgError as exc:
        raise SingularityError("combiner normal matrix is not positive definite") from exc
    return cho_solve(factor, rhs)
