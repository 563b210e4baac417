"""Partial transposition, realignment and the trace norm."""

from __future__ import annotations

import numpy as np

from .errors import SvdFailure
from .states import DensityMatrix


def partial_transpose(rho: DensityMatrix, subsystem: str = "B") -> np.ndarray:
    """Partial transpose on ``subsystem``.

    For subsystem B, ``<il|rho^T_B|kj> = <ij|rho|kl>``. Transposing A instead
    gives the full transpose of this matrix, so the spectrum and trace norm
    do not depend on the choice.
    """
    dA, dB = rho.dims.dA, rho.dims.dB
    t = rho.tensor()
    if subsystem == "B":
        t = t.transpose(0, 3, 2, 1)
    elif subsystem == "A":
        t = t.transpose(2, 1, 0, 3)
    else:
        raise ValueError(f"subsystem must be 'A' or 'B', got {subsystem!r}")
    return t.reshape(dA * dB, dA * dB)


def realign(rho: DensityMatrix) -> np.ndarray:
    """Realigned matrix of shape ``(dA**2, dB**2)`` with ``R[ik, jl] = rho[ij, kl]``."""
    dA, dB = rho.dims.dA, rho.dims.dB
    return rho.tensor().transpose(0, 2, 1, 3).reshape(dA * dA, dB * dB)


def singular_values(m) -> np.ndarray:
    m = np.asarray(m)
    try:
        return np.linalg.svd(m, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise SvdFailure(str(exc)) from exc


def trace_norm(m) -> float:
    """Sum of singular values; works for rectangular input."""
    return float(np.sum(singular_values(m)))


def ppt_norm(rho: DensityMatrix) -> float:
    return trace_norm(partial_transpose(rho))


def realign_norm(rho: DensityMatrix) -> float:
    return trace_norm(realign(rho))
