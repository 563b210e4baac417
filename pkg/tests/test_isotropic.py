import numpy as np
import pytest
from scipy.integrate import quad

from qcbounds.errors import DomainError, UnknownOracle
from qcbounds.isotropic import (
    PiecewiseLinear,
    closed_form_oracle,
    exact_isotropic_qc,
    extended_xi,
    isotropic_state,
    kink_point,
    lower_hull,
    xi,
    xi_derivatives,
    xi_prime,
)
from qcbounds.qconcurrence import prior_lower_bound, theorem1_lower_bound
from qcbounds.states import maximally_entangled


class TestState:
    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_maximally_mixed_point(self, d):
        np.testing.assert_allclose(isotropic_state(1 / d**2, d).matrix, np.eye(d * d) / d**2, atol=1e-15)

    def test_pure_endpoint(self):
        psi = maximally_entangled(3).amplitudes
        np.testing.assert_allclose(isotropic_state(1.0, 3).matrix, np.outer(psi, psi.conj()), atol=1e-15)

    @pytest.mark.parametrize("F", np.linspace(0, 1, 11))
    def test_fidelity(self, F):
        psi = maximally_entangled(3).amplitudes
        rho = isotropic_state(F, 3)
        assert (psi.conj() @ rho.matrix @ psi).real == pytest.approx(F, abs=1e-14)


class TestXi:
    @pytest.mark.parametrize("d", [2, 3, 5])
    @pytest.mark.parametrize("q", [2, 3, 4.5])
    def test_at_one(self, d, q):
        assert xi(1.0, q, d) == pytest.approx(1 - d ** (1 - q), abs=1e-14)

    def test_closed_forms(self):
        F = np.linspace(0.51, 1, 50)
        np.testing.assert_allclose(xi(F, 3, 2), 0.75 * (2 * F - 1) ** 2, atol=1e-13)
        np.testing.assert_allclose(xi(F, 4, 2), (8 - (2 * F - 1) ** 2) / 8 * (2 * F - 1) ** 2, atol=1e-13)

    def test_domain(self):
        with pytest.raises(DomainError):
            xi(0.5, 3, 2)
        with pytest.raises(DomainError):
            xi(1.2, 3, 2)

    @pytest.mark.parametrize("d,q", [(3, 3), (2, 4), (4, 2.5)])
    def test_analytic_derivative(self, d, q):
        F = np.linspace(1 / d + 0.01, 0.99, 40)
        d1, _ = xi_derivatives(F, q, d)
        np.testing.assert_allclose(xi_prime(F, q, d), d1, rtol=1e-6, atol=1e-7)

    def test_qutrit_xi_increasing(self):
        F = np.linspace(1 / 3 + 1e-3, 1 - 1e-5, 2000)
        d1, d2 = xi_derivatives(F, 3, 3)
        assert np.all(d1 > 0)
        # curvature changes sign once, near F = 0.862
        flips = F[np.nonzero(np.diff(np.sign(d2)))[0]]
        assert flips.size == 1 and flips[0] == pytest.approx(0.862, abs=2e-3)

    def test_integral_of_derivative(self):
        a, b = 0.5, 0.95
        integral, _ = quad(lambda t: xi_prime(t, 3, 3), a, b)
        assert integral == pytest.approx(xi(b, 3, 3) - xi(a, 3, 3), abs=1e-10)


def test_lower_hull_simple():
    x = np.array([0, 1, 2, 3, 4.0])
    y = np.array([0, -1, 1, 0, 5.0])
    assert lower_hull(x, y).tolist() == [0, 1, 3, 4]


def test_lower_hull_matches_brute_force():
    rng = np.random.default_rng(0)
    x = np.sort(rng.uniform(0, 1, 60))
    y = rng.uniform(0, 1, 60)
    hull = set(lower_hull(x, y).tolist())
    for k in range(1, 59):
        # a point is on the lower hull iff no chord between points on either side passes below it
        below = any(
            y[i] + (y[j] - y[i]) * (x[k] - x[i]) / (x[j] - x[i]) < y[k] - 1e-15
            for i in range(k) for j in range(k + 1, 60)
        )
        assert (k in hull) == (not below)


class TestEnvelope:
    @pytest.mark.parametrize("q,d", [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3), (4, 3), (3, 4), (5, 4)])
    def test_properties(self, q, d):
        env = exact_isotropic_qc(q, d)
        F = np.linspace(0, 1, 1001)
        vals = env(F)
        assert env.is_convex()
        assert np.all(env.y <= extended_xi(env.x, q, d) + 1e-15)
        # between knots the chords of a convex sample overshoot by O(h^2)
        assert np.all(vals <= extended_xi(F, q, d) + 1e-6)
        assert np.all(vals[F <= 1 / d] == 0)
        assert np.all(np.diff(vals[F >= 1 / d]) >= -1e-14)
        assert env(1.0) == pytest.approx(1 - d ** (1 - q), abs=1e-8)

    def test_qubit_q3_matches_closed_form(self):
        env = exact_isotropic_qc(3, 2)
        F = np.linspace(0, 1, 301)
        np.testing.assert_allclose(env(F), closed_form_oracle("c3d2", F), atol=1e-6)

    def test_qubit_q4_matches_closed_form(self):
        env = exact_isotropic_qc(4, 2)
        F = np.linspace(0, 1, 301)
        np.testing.assert_allclose(env(F), closed_form_oracle("c4d2", F), atol=1e-6)

    def test_qutrit_chord(self):
        env = exact_isotropic_qc(3, 3)
        k = kink_point(3, 3)
        # tangency: xi'(k) equals the slope of the chord to (1, 8/9)
        assert xi_prime(k, 3, 3) == pytest.approx((8 / 9 - xi(k, 3, 3)) / (1 - k), abs=1e-7)
        assert env(k) == pytest.approx(xi(k, 3, 3), abs=1e-12)
        F = np.linspace(k, 1, 50)
        line = xi(k, 3, 3) + (8 / 9 - xi(k, 3, 3)) * (F - k) / (1 - k)
        np.testing.assert_allclose(env(F), line, atol=1e-12)
        F = np.linspace(0.34, k, 50)
        np.testing.assert_allclose(env(F), xi(F, 3, 3), atol=1e-6)

    def test_qutrit_kink_location(self):
        # the exact tangency point; the inflection point of xi sits further right at ~0.862
        assert kink_point(3, 3) == pytest.approx(0.771333151863, abs=1e-6)

    def test_kink_stable_under_grid(self):
        assert kink_point(3, 3, 256) == pytest.approx(kink_point(3, 3, 4096), abs=1e-9)

    @pytest.mark.parametrize("q,d", [(3, 2), (4, 2), (2, 2)])
    def test_no_kink_for_convex_xi(self, q, d):
        assert kink_point(q, d) is None

    def test_qubit_ratio(self):
        F = np.linspace(0, 1, 100)
        np.testing.assert_allclose(exact_isotropic_qc(2, 2)(F), 2 / 3 * exact_isotropic_qc(3, 2)(F), atol=1e-6)

    def test_grid_size_guard(self):
        with pytest.raises(ValueError):
            exact_isotropic_qc(3, 3, grid_size=10)

    @pytest.mark.parametrize("q,d", [(3, 3), (4, 2), (3, 2), (2.5, 3), (5, 4)])
    def test_dominance(self, q, d):
        env = exact_isotropic_qc(q, d)
        for F in np.linspace(1 / d + 1e-3, 1, 40):
            rho = isotropic_state(F, d)
            th1, _ = theorem1_lower_bound(rho, q)
            prior = prior_lower_bound(rho, q)
            assert env(F) >= th1 - 1e-10
            assert th1 >= prior - 1e-10


class TestOracle:
    def test_values(self):
        assert closed_form_oracle("c3d2", 0.5) == 0.0
        assert closed_form_oracle("c3d3", 1.0) == pytest.approx(0.889)
        assert closed_form_oracle("c4d2", 1.0) == pytest.approx(7 / 8)
        assert closed_form_oracle("c3d3", 0.2) == 0.0

    def test_c3d3_close_to_envelope(self):
        F = np.linspace(0, 1, 2001)
        np.testing.assert_allclose(closed_form_oracle("c3d3", F), exact_isotropic_qc(3, 3)(F), atol=5e-3)

    def test_unknown(self):
        with pytest.raises(UnknownOracle):
            closed_form_oracle("c9d9", 0.5)


def test_piecewise_linear_validation():
    with pytest.raises(ValueError):
        PiecewiseLinear([0, 0], [1, 2])
    pl = PiecewiseLinear([0, 0.5, 1], [0, 0, 1])
    assert pl(0.75) == pytest.approx(0.5)
    assert pl.knots[1] == (0.5, 0.0)
