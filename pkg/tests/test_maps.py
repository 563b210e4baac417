import numpy as np
import pytest

from oracles import partial_transpose_loops, realign_loops, trace_norm_eig
from qcbounds.errors import SvdFailure
from qcbounds.maps import partial_transpose, ppt_norm, realign, realign_norm, trace_norm
from qcbounds.states import (
    BipartiteDims,
    basis_state,
    local_unitary,
    make_rng,
    maximally_mixed,
    product_state,
    random_density,
    random_pure_state,
    schmidt_spectrum,
)
from qcbounds.isotropic import isotropic_state


@pytest.mark.parametrize("dA,dB", [(2, 2), (2, 3), (3, 2), (3, 4)])
def test_maps_match_index_loops(dA, dB):
    rho = random_density(BipartiteDims(dA, dB), 3, seed=dA * 10 + dB)
    np.testing.assert_allclose(partial_transpose(rho), partial_transpose_loops(rho.matrix, dA, dB), atol=1e-15)
    np.testing.assert_allclose(realign(rho), realign_loops(rho.matrix, dA, dB), atol=1e-15)
    assert realign(rho).shape == (dA * dA, dB * dB)


def test_partial_transpose_maximally_mixed(dims22):
    rho = maximally_mixed(dims22)
    np.testing.assert_allclose(partial_transpose(rho), rho.matrix)


def test_partial_transpose_bell_min_eigenvalue(bell_rho):
    # by hand: the partial transpose of |Phi+><Phi+| is SWAP/2, eigenvalues (1/2, 1/2, 1/2, -1/2)
    swap = np.zeros((4, 4))
    for i in range(2):
        for j in range(2):
            swap[i * 2 + j, j * 2 + i] = 1
    np.testing.assert_allclose(partial_transpose(bell_rho), swap / 2, atol=1e-15)
    assert np.linalg.eigvalsh(partial_transpose(bell_rho))[0] == pytest.approx(-0.5)


def test_partial_transpose_product_is_psd():
    rho = product_state([1, 1j], [2, 0, 1]).projector()
    assert np.linalg.eigvalsh(partial_transpose(rho))[0] > -1e-14


def test_partial_transpose_on_A_has_same_trace_norm():
    rho = random_density(BipartiteDims(2, 3), 2, seed=1)
    pa = partial_transpose(rho, "A")
    np.testing.assert_allclose(pa, partial_transpose(rho).T, atol=1e-15)
    assert trace_norm(pa) == pytest.approx(ppt_norm(rho), abs=1e-12)


def test_partial_transpose_involution():
    rho = random_density(BipartiteDims(3, 2), 4, seed=5)
    again = partial_transpose(type(rho)(rho.dims, partial_transpose(rho)))
    np.testing.assert_allclose(again, rho.matrix, atol=1e-12)


def test_realign_bell(bell_rho):
    assert realign(bell_rho).shape == (4, 4)
    assert realign_norm(bell_rho) == pytest.approx(2.0, abs=1e-12)


def test_realign_product():
    rho = basis_state(1, 0, BipartiteDims(2, 2)).projector()
    assert realign_norm(rho) == pytest.approx(1.0, abs=1e-12)


class TestTraceNorm:
    def test_identity(self):
        assert trace_norm(np.eye(5)) == pytest.approx(5)

    def test_density_matrix(self):
        assert trace_norm(random_density(BipartiteDims(3, 3), 5, seed=0).matrix) == pytest.approx(1, abs=1e-12)

    def test_rectangular_matches_eigen_route(self):
        m = make_rng(3).standard_normal((4, 9)) + 1j * make_rng(4).standard_normal((4, 9))
        assert trace_norm(m) == pytest.approx(trace_norm_eig(m), abs=1e-10)
        assert trace_norm(m) == pytest.approx(trace_norm(m.conj().T), abs=1e-10)

    @pytest.mark.parametrize("d", [2, 3, 4])
    @pytest.mark.parametrize("F", [0.6, 0.8, 1.0])
    def test_isotropic(self, d, F):
        rho = isotropic_state(F, d)
        assert ppt_norm(rho) == pytest.approx(d * F, abs=1e-10)
        assert realign_norm(rho) == pytest.approx(d * F, abs=1e-10)

    def test_svd_failure(self):
        with pytest.raises(SvdFailure):
            trace_norm(np.full((3, 3), np.nan))


@pytest.mark.parametrize("d", [2, 3, 4])
def test_pure_state_norm_identity(d):
    dims = BipartiteDims(d, d)
    rng = make_rng(d)
    for _ in range(50):
        psi = random_pure_state(dims, rng)
        expected = np.sum(np.sqrt(schmidt_spectrum(psi).lambdas)) ** 2
        rho = psi.projector()
        assert abs(ppt_norm(rho) - expected) < 1e-8
        assert abs(realign_norm(rho) - expected) < 1e-8
        assert 1 - 1e-12 <= expected <= d + 1e-12


def test_local_unitary_invariance():
    for k in range(20):
        dims = BipartiteDims(2 + k % 2, 3)
        rho = random_density(dims, 1 + k % 5, seed=k)
        u = local_unitary(dims, seed=1000 + k)
        rotated = rho.conjugate_by(u)
        assert ppt_norm(rotated) == pytest.approx(ppt_norm(rho), abs=1e-8)
        assert realign_norm(rotated) == pytest.approx(realign_norm(rho), abs=1e-8)
