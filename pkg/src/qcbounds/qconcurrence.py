"""The q-concurrence: pure-state values, monotonicity in q, and mixed-state bounds.

For a pure state with squared Schmidt coefficients ``lam`` the measure is
``C_q = 1 - sum(lam**q)`` (``q >= 2``); mixed states take the convex roof.
The convex roof is not computed exactly. Instead this module provides

* :func:`theorem1_lower_bound`, the PPT/realignment lower bound,
* :func:`prior_lower_bound`, an older and looser bound kept for comparison,
* :func:`convex_roof_upper_bound`, a randomized search over decompositions.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import asdict, dataclass

import numpy as np
from scipy.optimize import bisect

from .errors import NonpositiveLambda, RegimeViolation
from .maps import ppt_norm, realign_norm
from .states import BipartiteDims, DensityMatrix, PureState, SchmidtSpectrum, random_isometry, schmidt_spectrum


def _check_q(q: float) -> float:
    q = float(q)
    if not q >= 2.0:
        raise ValueError(f"q must be >= 2, got {q}")
    return q


def _check_d(d: int) -> int:
    if d < 2:
        raise ValueError(f"bounds need d = min(dA, dB) >= 2, got {d}")
    return int(d)


def _lam(spectrum) -> np.ndarray:
    if isinstance(spectrum, PureState):
        spectrum = schmidt_spectrum(spectrum)
    return np.asarray(spectrum, dtype=float)


def q_concurrence_pure(spectrum: SchmidtSpectrum | PureState, q: float) -> float:
    """``1 - sum(lam**q)`` for a pure state or its Schmidt spectrum."""
    lam = _lam(spectrum)
    return float(1.0 - np.sum(lam ** _check_q(q)))


def max_q_concurrence(q: float, d: int) -> float:
    """Value on a maximally entangled state, ``1 - d**(1-q)``."""
    return 1.0 - float(d) ** (1.0 - q)


def f_ratio(spectrum, q: float, d: int) -> float:
    """``C_q`` normalized by its maximum ``1 - d**(1-q)``."""
    q = _check_q(q)
    return q_concurrence_pure(spectrum, q) / max_q_concurrence(q, _check_d(d))


def g_dq(spectrum, q: float, d: int) -> float:
    """Numerator of ``df/dq``; ``df/dq = g_dq / (1 - d**(1-q))**2``.

    Requires strictly positive coefficients. For ``d = 2`` the value is
    non-negative once ``q >= critical_s()``. For ``d = 3`` it dips below zero
    (by at most ~1.3e-3) when ``q < 2.08`` and one coefficient dominates;
    for ``d >= 4`` no negative values have been observed.
    """
    lam = _lam(spectrum)
    if np.any(lam <= 0):
        raise NonpositiveLambda("g_dq needs every Schmidt coefficient to be > 0")
    q = _check_q(q)
    dq = float(d) ** (1.0 - q)
    sq = np.sum(lam**q)
    return float(np.sum(lam**q * np.log(lam)) * (dq - 1.0) - (1.0 - sq) * dq * math.log(d))


def _curvature_bracket(q: float) -> float:
    # sign of d^2 G / d lam^2 at the uniform qubit spectrum
    return q * (q - 1.0) * math.log(2.0) - (2.0 * q - 1.0) * (1.0 - 2.0 ** (1.0 - q))


@functools.lru_cache(maxsize=None)
def critical_s() -> float:
    """Smallest q for which the qubit monotonicity argument holds (~2.4721)."""
    return float(bisect(_curvature_bracket, 2.0, 3.0, xtol=1e-12, maxiter=200))


def corollary1_bound(c_h: float, h: float, q: float, d: int) -> float:
    """Lower bound on ``C_q`` from a known ``C_h`` by monotone rescaling.

    Valid for ``q >= h`` with ``h >= s`` at ``d = 2`` or ``h >= 2`` at
    ``d >= 3``. See :func:`g_dq` for the small d = 3, h < 2.08 exception.
    """
    q = _check_q(q)
    d = _check_d(d)
    if q < h:
        raise RegimeViolation(f"need q >= h, got q={q}, h={h}")
    if d == 2 and h < critical_s():
        raise RegimeViolation(f"d = 2 needs h >= s = {critical_s():.6f}, got h={h}")
    if h < 2:
        raise RegimeViolation(f"need h >= 2, got h={h}")
    return max_q_concurrence(q, d) / max_q_concurrence(h, d) * c_h


class BoundRegime(str, enum.Enum):
    GENERAL_D = "GeneralD"          # q >= 2, d >= 3
    QUBIT_3_PLUS = "Qubit3Plus"     # q >= 3, d = 2
    QUBIT_S_RANGE = "QubitSRange"   # s <= q < 3, d = 2
    QUBIT_GAP = "QubitGap"          # 2 <= q < s, d = 2: no bound available


def bound_regime(q: float, d: int) -> BoundRegime:
    q = _check_q(q)
    d = _check_d(d)
    if d >= 3:
        return BoundRegime.GENERAL_D
    if q >= 3:
        return BoundRegime.QUBIT_3_PLUS
    if q >= critical_s():
        return BoundRegime.QUBIT_S_RANGE
    return BoundRegime.QUBIT_GAP


def theorem1_from_norms(ppt: float, realign: float, q: float, d: int) -> tuple[float | None, BoundRegime]:
    regime = bound_regime(q, d)
    t = max(max(ppt, realign) - 1.0, 0.0)
    if regime in (BoundRegime.GENERAL_D, BoundRegime.QUBIT_3_PLUS):
        return max_q_concurrence(q, d) / (d - 1) ** 2 * t * t, regime
    if regime is BoundRegime.QUBIT_S_RANGE:
        return (1.0 - 2.0 ** (1.0 - q)) / (2.0 - 2.0 ** (2.0 - critical_s())) * t * t, regime
    return None, regime


def theorem1_lower_bound(rho: DensityMatrix, q: float) -> tuple[float | None, BoundRegime]:
    """Lower bound from the larger of the PPT and realignment trace norms.

    Returns ``(value, regime)``; ``value`` is ``None`` in the
    :attr:`BoundRegime.QUBIT_GAP` regime, where no bound is established.
    """
    return theorem1_from_norms(ppt_norm(rho), realign_norm(rho), q, rho.dims.d)


def prior_from_norms(ppt: float, realign: float, q: float, d: int) -> float:
    q = _check_q(q)
    d = _check_d(d)
    t = max(max(ppt, realign) ** (q - 1.0) - 1.0, 0.0)
    return t * t / (float(d) ** (2 * q - 2) - float(d) ** (q - 1))


def prior_lower_bound(rho: DensityMatrix, q: float) -> float:
    return prior_from_norms(ppt_norm(rho), realign_norm(rho), q, rho.dims.d)


# --- convex roof upper bound ---------------------------------------------

def _decomposition_value(weighted_vecs: np.ndarray, dims: BipartiteDims, q: float) -> float:
    """``sum_i p_i C_q(psi_i)`` for subnormalized columns ``sqrt(p_i) psi_i``."""
    mats = weighted_vecs.T.reshape(-1, dims.dA, dims.dB)
    lam = np.linalg.svd(mats, compute_uv=False) ** 2
    p = lam.sum(axis=1)
    keep = p > 1e-15
    lam, p = lam[keep], p[keep]
    return float(np.sum(p - np.sum(lam**q, axis=1) / p ** (q - 1.0)))


def _polar(a: np.ndarray) -> np.ndarray:
    u, _, vh = np.linalg.svd(a, full_matrices=False)
    return u @ vh


def convex_roof_upper_bound(rho: DensityMatrix, q: float, iterations: int = 200, seed: int = 0,
                            rank_tol: float = 1e-12) -> float:
    """Upper bound on the convex roof by sampling pure-state decompositions.

    Writing ``rho = W W^dagger`` with ``W`` the eigenvectors scaled by the
    square roots of the ``r`` nonzero eigenvalues, every decomposition into
    ``n >= r`` pure states is ``W U^T`` for an ``n x r`` isometry ``U``.
    Candidate 0 is the eigendecomposition itself. Odd candidates are Haar
    isometries whose row count cycles through ``r, r+1, ..., 2r``; even
    candidates perturb the best isometry so far and project back with a polar
    decomposition. Candidate ``k`` draws from a generator seeded by
    ``(seed, k)``, so the result is a deterministic minimum that can only
    decrease as ``iterations`` grows.
    """
    q = _check_q(q)
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    w, v = rho.eigh()
    r = max(1, int(np.count_nonzero(w > rank_tol)))
    W = v[:, :r] * np.sqrt(w[:r])
    dims = rho.dims

    best_u = np.eye(r, dtype=complex)
    best = _decomposition_value(W, dims, q)
    for k in range(1, iterations):
        rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, k])))
        if k % 2 == 1:
            n = r + ((k - 1) // 2) % (r + 1)
            u = random_isometry(n, r, rng)
        else:
            sigma = 10.0 ** rng.uniform(-3.0, -0.3)
            g = rng.standard_normal(best_u.shape) + 1j * rng.standard_normal(best_u.shape)
            u = _polar(best_u + sigma * g)
        val = _decomposition_value(W @ u.T, dims, q)
        if val < best:
            best, best_u = val, u
    return max(best, 0.0)


# --- report ---------------------------------------------------------------

@dataclass(frozen=True)
class BoundReport:
    q: float
    dA: int
    dB: int
    d: int
    ppt_norm: float
    realign_norm: float
    regime: str
    theorem1_bound: float | None
    prior_bound: float
    best_lower: float
    upper_estimate: float | None = None

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "BoundReport":
        return cls(**data)


def bound_report(rho: DensityMatrix, q: float, upper_iterations: int = 0, seed: int = 0) -> BoundReport:
    """All bounds for one state and one q. ``upper_iterations=0`` skips the upper bound search."""
    q = _check_q(q)
    d = rho.dims.d
    pn, rn = ppt_norm(rho), realign_norm(rho)
    th1, regime = theorem1_from_norms(pn, rn, q, d)
    prior = prior_from_norms(pn, rn, q, d)
    best = max(prior, th1 if th1 is not None else 0.0, 0.0)
    upper = convex_roof_upper_bound(rho, q, upper_iterations, seed) if upper_iterations > 0 else None
    return BoundReport(q=q, dA=rho.dims.dA, dB=rho.dims.dB, d=d, ppt_norm=pn, realign_norm=rn,
                       regime=regime.value, theorem1_bound=th1, prior_bound=prior, best_lower=best,
                       upper_estimate=upper)
