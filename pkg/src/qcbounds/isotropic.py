"""Isotropic states and their exact q-concurrence.

The q-concurrence of the isotropic state with fidelity ``F`` is the convex
envelope of

    g(F) = 0                        for F <= 1/d
    g(F) = xi(F, q, d)              for 1/d < F <= 1

with ``xi = 1 - gamma**(2q) - (d-1) * delta**(2q)``. The envelope is built as
the lower convex hull of a dense sample of ``g``, and each chord is snapped to
its exact tangency points by bisection.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.optimize import bisect

from .errors import DomainError, UnknownOracle
from .states import BipartiteDims, maximally_entangled, validate_density

DEFAULT_GRID = 2048
_DEPART_TOL = 1e-10


def _check_fidelity(F):
    F = np.asarray(F, dtype=float)
    if np.any((F < 0) | (F > 1)) or not np.all(np.isfinite(F)):
        raise DomainError("fidelity must lie in [0, 1]")
    return F


def isotropic_state(F: float, d: int):
    """``(1-F)/(d^2-1) (I - P) + F P`` with ``P`` the maximally entangled projector."""
    if d < 2:
        raise ValueError("isotropic states need d >= 2")
    F = float(_check_fidelity(F))
    psi = maximally_entangled(d).amplitudes
    proj = np.outer(psi, psi.conj())
    m = (1.0 - F) / (d * d - 1) * (np.eye(d * d) - proj) + F * proj
    return validate_density(m, BipartiteDims(d, d))


def isotropic_trace_norm(F, d: int):
    """Closed form of both the PPT and realignment trace norms for ``F > 1/d``."""
    return d * np.asarray(F, dtype=float)


def _gamma_delta(F, d):
    rF = np.sqrt(F)
    rd = np.sqrt(d)
    gamma = (rF + np.sqrt((d - 1) * (1 - F))) / rd
    delta = (rF - np.sqrt((1 - F) / (d - 1))) / rd
    return gamma, delta


def xi(F, q: float, d: int):
    F = _check_fidelity(F)
    if np.any(F <= 1.0 / d):
        raise DomainError(f"xi is defined for 1/d < F <= 1 (d={d})")
    gamma, delta = _gamma_delta(F, d)
    out = 1.0 - gamma ** (2 * q) - (d - 1) * delta ** (2 * q)
    return out if out.ndim else float(out)


def xi_prime(F, q: float, d: int):
    """Analytic ``d xi / dF`` on ``1/d < F < 1``."""
    F = np.asarray(F, dtype=float)
    gamma, delta = _gamma_delta(F, d)
    rd = np.sqrt(d)
    dgamma = (0.5 / np.sqrt(F) - 0.5 * np.sqrt(d - 1) / np.sqrt(1 - F)) / rd
    ddelta = (0.5 / np.sqrt(F) + 0.5 / np.sqrt((d - 1) * (1 - F))) / rd
    out = -2 * q * gamma ** (2 * q - 1) * dgamma - 2 * q * (d - 1) * delta ** (2 * q - 1) * ddelta
    return out if out.ndim else float(out)


def xi_derivatives(F, q: float, d: int, step: float = 1e-5):
    """Central-difference first and second derivatives of ``xi``."""
    F = np.asarray(F, dtype=float)
    lo, mid, hi = xi(F - step, q, d), xi(F, q, d), xi(F + step, q, d)
    return (hi - lo) / (2 * step), (hi - 2 * mid + lo) / step**2


def extended_xi(F, q: float, d: int):
    """``xi`` continued by zero on the separable region ``F <= 1/d``."""
    F = _check_fidelity(F)
    out = np.zeros_like(F)
    ent = F > 1.0 / d
    if np.any(ent):
        out[ent] = xi(F[ent], q, d)
    return out if out.ndim else float(out)


@dataclass(frozen=True)
class PiecewiseLinear:
    x: np.ndarray
    y: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float)
        y = np.asarray(self.y, dtype=float)
        if x.shape != y.shape or x.ndim != 1 or x.size < 2:
            raise ValueError("knots need matching 1-d arrays with at least two entries")
        if np.any(np.diff(x) <= 0):
            raise ValueError("knot abscissae must be strictly increasing")
        x.setflags(write=False)
        y.setflags(write=False)
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    def __call__(self, F):
        out = np.interp(F, self.x, self.y)
        return out if np.ndim(out) else float(out)

    @property
    def knots(self) -> list[tuple[float, float]]:
        return list(zip(self.x.tolist(), self.y.tolist()))

    def slopes(self) -> np.ndarray:
        return np.diff(self.y) / np.diff(self.x)

    def is_convex(self, tol: float = 1e-12) -> bool:
        return bool(np.all(np.diff(self.slopes()) >= -tol))


def lower_hull(x, y) -> np.ndarray:
    """Indices of the lower convex hull of points sorted by ``x`` (monotone chain).

    Collinear interior points are dropped.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    hull: list[int] = []
    for k in range(x.size):
        while len(hull) >= 2:
            i, j = hull[-2], hull[-1]
            cross = (x[j] - x[i]) * (y[k] - y[i]) - (y[j] - y[i]) * (x[k] - x[i])
            if cross <= 0:
                hull.pop()
            else:
                break
        hull.append(k)
    return np.asarray(hull)


def _departing_segments(x, y, hull) -> list[tuple[int, int]]:
    """Hull segments under which the sampled function rises strictly above the chord."""
    out = []
    for a, b in zip(hull[:-1], hull[1:]):
        if b - a < 3:
            continue
        xs, ys = x[a + 1:b], y[a + 1:b]
        chord = y[a] + (y[b] - y[a]) * (xs - x[a]) / (x[b] - x[a])
        if np.max(ys - chord) > _DEPART_TOL:
            out.append((int(a), int(b)))
    return out


def _tangent_point(x0, anchor, q, d, h, left):
    """Point near ``x0`` where the line through ``anchor`` touches ``xi``."""
    xa, ya = anchor
    lo = max(x0 - 2 * h, 1.0 / d + 1e-15)
    hi = min(x0 + 2 * h, 1.0 - 1e-15)

    def cond(t):
        # left tangent point: xi'(t) equals slope to the anchor on the right, and vice versa
        slope = (ya - xi(t, q, d)) / (xa - t)
        return xi_prime(t, q, d) - slope if left else slope - xi_prime(t, q, d)

    if lo >= hi or cond(lo) * cond(hi) > 0:
        return x0
    return bisect(cond, lo, hi, xtol=1e-13, maxiter=200)


def _envelope(q: float, d: int, grid_size: int):
    if d < 2:
        raise ValueError("isotropic states need d >= 2")
    if grid_size < 64:
        raise ValueError("grid_size must be >= 64")
    xs = np.union1d(np.linspace(0.0, 1.0, grid_size), [0.0, 1.0 / d, 1.0])
    ys = extended_xi(xs, q, d)
    h = 1.0 / (grid_size - 1)

    hull = lower_hull(xs, ys)
    extra = []
    for a, b in _departing_segments(xs, ys, hull):
        xa, xb = xs[a], xs[b]
        for _ in range(50):
            prev = (xa, xb)
            if 1.0 / d < xa < 1.0:
                xa = _tangent_point(xa, (xb, float(extended_xi(xb, q, d))), q, d, h, left=True)
            if 1.0 / d < xb < 1.0:
                xb = _tangent_point(xb, (xa, float(extended_xi(xa, q, d))), q, d, h, left=False)
            if abs(prev[0] - xa) < 1e-14 and abs(prev[1] - xb) < 1e-14:
                break
        extra += [xa, xb]
    if extra:
        xs = np.union1d(xs, extra)
        ys = extended_xi(xs, q, d)
        hull = lower_hull(xs, ys)
    segments = _departing_segments(xs, ys, hull)
    env = PiecewiseLinear(xs[hull], ys[hull])
    kink = float(xs[segments[-1][0]]) if segments else None
    return env, kink


def exact_isotropic_qc(q: float, d: int, grid_size: int = DEFAULT_GRID) -> PiecewiseLinear:
    """Convex envelope of the extended ``xi``; call the result to evaluate ``C_q(rho_F)``."""
    return _envelope(float(q), int(d), int(grid_size))[0]


def kink_point(q: float, d: int, grid_size: int = DEFAULT_GRID) -> float | None:
    """Left end of the last chord where the envelope leaves ``xi``; ``None`` if it never does."""
    return _envelope(float(q), int(d), int(grid_size))[1]


def _c3d2(F):
    return np.where(F <= 0.5, 0.0, 0.75 * (2 * F - 1) ** 2)


def _c3d3(F):
    out = np.zeros_like(F)
    mid = (F > 1 / 3) & (F <= 0.86)
    out[mid] = xi(F[mid], 3, 3)
    top = F > 0.86
    out[top] = 1.777 * F[top] - 0.888
    return out


def _c4d2(F):
    x2 = (2 * F - 1) ** 2
    return np.where(F <= 0.5, 0.0, (8 - x2) / 8 * x2)


_ORACLES = {"c3d2": _c3d2, "c3d3": _c3d3, "c4d2": _c4d2}


def closed_form_oracle(name: str, F):
    """Reference closed forms: ``c3d2`` (q=3, d=2), ``c3d3`` (q=3, d=3), ``c4d2`` (q=4, d=2).

    ``c3d3`` keeps the rounded constants 0.86, 1.777 and 0.888, so it is only
    good to a few 1e-3.
    """
    try:
        fn = _ORACLES[name]
    except KeyError:
        raise UnknownOracle(name) from None
    F = _check_fidelity(F)
    out = fn(np.atleast_1d(F))
    return float(out[0]) if F.ndim == 0 else out
