"""Bipartite state types, validation, Schmidt spectra and seeded random states.

Basis convention: the product vector |i>|j> of H_A (x) H_B sits at flat index
``i * dB + j``. Every reshape in the package relies on this.

Random states are drawn from ``numpy.random.Generator(numpy.random.Philox(seed))``.
Philox-4x64 is counter based, so a seed fixes the stream on every platform
numpy supports. The draw order for each generator is documented on the
function, which is enough to reproduce outputs from another implementation
that ports Philox and numpy's Gaussian sampler.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionMismatch,
    NotHermitian,
    NotNormalized,
    NotPositive,
    RankOutOfRange,
    TraceMismatch,
)

SeedLike = int | np.random.Generator | None


@dataclass(frozen=True)
class BipartiteDims:
    dA: int
    dB: int

    def __post_init__(self):
        if int(self.dA) != self.dA or int(self.dB) != self.dB or self.dA < 1 or self.dB < 1:
            raise DimensionMismatch(f"subsystem dimensions must be positive integers, got ({self.dA}, {self.dB})")
        object.__setattr__(self, "dA", int(self.dA))
        object.__setattr__(self, "dB", int(self.dB))

    @property
    def d(self) -> int:
        return min(self.dA, self.dB)

    @property
    def total(self) -> int:
        return self.dA * self.dB

    def __str__(self):
        return f"{self.dA}x{self.dB}"


@dataclass(frozen=True)
class Tolerances:
    herm: float = 1e-8
    trace: float = 1e-8
    psd: float = 1e-9
    norm: float = 1e-8


DEFAULT_TOL = Tolerances()


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex)
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class PureState:
    """Unit vector in H_A (x) H_B."""

    dims: BipartiteDims
    amplitudes: np.ndarray
    tol: float = field(default=DEFAULT_TOL.norm, repr=False, compare=False)

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.size != self.dims.total:
            raise DimensionMismatch(f"expected {self.dims.total} amplitudes for {self.dims}, got {amps.size}")
        nrm = np.linalg.norm(amps)
        if abs(nrm - 1.0) > self.tol:
            raise NotNormalized(f"state norm is {nrm:.12g}, expected 1")
        object.__setattr__(self, "amplitudes", _frozen(amps / nrm))

    @classmethod
    def normalized(cls, amplitudes, dims: BipartiteDims) -> "PureState":
        amps = np.asarray(amplitudes, dtype=complex).reshape(-1)
        nrm = np.linalg.norm(amps)
        if nrm == 0:
            raise NotNormalized("zero vector cannot be normalized")
        return cls(dims, amps / nrm)

    def coefficient_matrix(self) -> np.ndarray:
        return self.amplitudes.reshape(self.dims.dA, self.dims.dB)

    def projector(self) -> "DensityMatrix":
        return DensityMatrix(self.dims, _frozen(np.outer(self.amplitudes, self.amplitudes.conj())))


@dataclass(frozen=True)
class DensityMatrix:
    """Validated bipartite density matrix.

    Build instances with :func:`validate_density` (or one of the generators);
    the bare constructor performs no checks.
    """

    dims: BipartiteDims
    matrix: np.ndarray

    def tensor(self) -> np.ndarray:
        """View as a rank-4 array indexed ``[i, j, k, l]`` for ``<ij|rho|kl>``."""
        dA, dB = self.dims.dA, self.dims.dB
        return self.matrix.reshape(dA, dB, dA, dB)

    def eigh(self) -> tuple[np.ndarray, np.ndarray]:
        """Eigenpairs in descending order, with tiny negative eigenvalues clamped to zero."""
        w, v = np.linalg.eigh(self.matrix)
        w = np.clip(w, 0.0, None)
        return w[::-1], v[:, ::-1]

    def rank(self, tol: float = 1e-10) -> int:
        return int(np.count_nonzero(np.linalg.eigvalsh(self.matrix) > tol))

    def conjugate_by(self, unitary: np.ndarray) -> "DensityMatrix":
        u = np.asarray(unitary)
        m = u @ self.matrix @ u.conj().T
        return DensityMatrix(self.dims, _frozen(0.5 * (m + m.conj().T)))


@dataclass(frozen=True)
class SchmidtSpectrum:
    """Squared Schmidt coefficients, descending, length ``min(dA, dB)``."""

    lambdas: np.ndarray

    def __post_init__(self):
        lam = np.asarray(self.lambdas, dtype=float).reshape(-1)
        if lam.size == 0 or np.any(lam < 0) or abs(lam.sum() - 1.0) > DEFAULT_TOL.trace:
            raise ValueError(f"not a probability vector: {lam}")
        lam = np.sort(lam)[::-1].copy()
        lam.setflags(write=False)
        object.__setattr__(self, "lambdas", lam)

    @property
    def d(self) -> int:
        return self.lambdas.size

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.lambdas, dtype=dtype)


def validate_density(matrix, dims: BipartiteDims, tol: Tolerances = DEFAULT_TOL) -> DensityMatrix:
    """Check that ``matrix`` is a density matrix on ``dims`` and wrap it.

    The returned matrix is the Hermitian part of the input, rescaled to unit
    trace (the trace is only allowed to deviate from 1 by ``tol.trace``).

    Raises
    ------
    DimensionMismatch, NotHermitian, TraceMismatch, NotPositive
    """
    m = np.asarray(matrix, dtype=complex)
    n = dims.total
    if m.shape != (n, n):
        raise DimensionMismatch(f"expected a {n}x{n} matrix for dims {dims}, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise DimensionMismatch("matrix contains non-finite entries")
    herm_err = np.max(np.abs(m - m.conj().T))
    if herm_err > tol.herm:
        raise NotHermitian(f"max |M - M^dagger| = {herm_err:.3e} exceeds {tol.herm:g}")
    m = 0.5 * (m + m.conj().T)
    tr = np.trace(m).real
    if abs(tr - 1.0) > tol.trace:
        raise TraceMismatch(f"trace is {tr:.12g}, expected 1")
    m = m / tr
    wmin = np.linalg.eigvalsh(m)[0]
    if wmin < -tol.psd:
        raise NotPositive(wmin)
    return DensityMatrix(dims, _frozen(m))


def schmidt_spectrum(psi: PureState) -> SchmidtSpectrum:
    sv = np.linalg.svd(psi.coefficient_matrix(), compute_uv=False)
    lam = np.zeros(psi.dims.d)
    lam[: sv.size] = sv[: psi.dims.d] ** 2
    return SchmidtSpectrum(lam / lam.sum())


def partial_trace(rho: DensityMatrix, trace_out: str = "B") -> np.ndarray:
    """Reduced state after tracing out subsystem ``trace_out`` ("A" or "B")."""
    t = rho.tensor()
    if trace_out == "B":
        return np.einsum("ijkj->ik", t)
    if trace_out == "A":
        return np.einsum("ijil->jl", t)
    raise ValueError(f"trace_out must be 'A' or 'B', got {trace_out!r}")


# --- standard states ------------------------------------------------------

def product_state(a, b) -> PureState:
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    return PureState.normalized(np.kron(a, b), BipartiteDims(a.size, b.size))


def basis_state(i: int, j: int, dims: BipartiteDims) -> PureState:
    v = np.zeros(dims.total, dtype=complex)
    v[i * dims.dB + j] = 1.0
    return PureState(dims, v)


def maximally_entangled(d: int) -> PureState:
    """|Psi+> = sum_i |ii> / sqrt(d)."""
    v = np.zeros(d * d, dtype=complex)
    v[:: d + 1] = 1.0
    return PureState.normalized(v, BipartiteDims(d, d))


def maximally_mixed(dims: BipartiteDims) -> DensityMatrix:
    return DensityMatrix(dims, _frozen(np.eye(dims.total) / dims.total))


# --- random generation ----------------------------------------------------

def make_rng(seed: SeedLike) -> np.random.Generator:
    """Philox-backed generator for an int seed; generators pass through unchanged."""
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.Generator(np.random.Philox(seed))


def _complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    # real parts are drawn before imaginary parts
    re = rng.standard_normal(shape)
    im = rng.standard_normal(shape)
    return re + 1j * im


def random_isometry(rows: int, cols: int, seed: SeedLike = None) -> np.ndarray:
    """Haar-random ``rows x cols`` isometry (orthonormal columns), ``rows >= cols``."""
    if cols > rows:
        raise ValueError("an isometry needs rows >= cols")
    z = _complex_gaussian(make_rng(seed), (rows, cols))
    q, r = np.linalg.qr(z)
    # fix the phase freedom of QR so the result is Haar distributed
    ph = np.diagonal(r) / np.abs(np.diagonal(r))
    return q * ph


def random_unitary(n: int, seed: SeedLike = None) -> np.ndarray:
    return random_isometry(n, n, seed)


def random_pure_state(dims: BipartiteDims, seed: SeedLike = None) -> PureState:
    """Haar-random pure state: ``dA*dB`` real parts, then as many imaginary parts."""
    z = _complex_gaussian(make_rng(seed), dims.total)
    return PureState.normalized(z, dims)


def random_density(dims: BipartiteDims, rank: int, seed: SeedLike = None) -> DensityMatrix:
    """Mixture of ``rank`` Haar-random pure states with flat-Dirichlet weights.

    Draw order: the ``rank`` pure states one after another, then the weights.
    For ``rank == 1`` no weights are drawn.
    """
    if not 1 <= rank <= dims.total:
        raise RankOutOfRange(f"rank must lie in [1, {dims.total}], got {rank}")
    rng = make_rng(seed)
    vecs = np.stack([random_pure_state(dims, rng).amplitudes for _ in range(rank)], axis=1)
    w = np.ones(1) if rank == 1 else rng.dirichlet(np.ones(rank))
    m = (vecs * w) @ vecs.conj().T
    return validate_density(m, dims)


def random_separable_state(dims: BipartiteDims, terms: int, seed: SeedLike = None) -> DensityMatrix:
    """Flat-Dirichlet mixture of ``terms`` random product projectors."""
    rng = make_rng(seed)
    m = np.zeros((dims.total, dims.total), dtype=complex)
    w = np.ones(1) if terms == 1 else rng.dirichlet(np.ones(terms))
    for wk in w:
        a = random_pure_state(BipartiteDims(dims.dA, 1), rng).amplitudes
        b = random_pure_state(BipartiteDims(1, dims.dB), rng).amplitudes
        v = np.kron(a, b)
        m += wk * np.outer(v, v.conj())
    return validate_density(m, dims)


def local_unitary(dims: BipartiteDims, seed: SeedLike = None) -> np.ndarray:
    """Random ``U_A (x) U_B``."""
    rng = make_rng(seed)
    return np.kron(random_unitary(dims.dA, rng), random_unitary(dims.dB, rng))
