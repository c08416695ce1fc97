"""
Tests for the closed-form eigenpairs and the spectral classification.
"""
import math

import numpy as np
import pytest

from core.errors import DivergentError, DomainError, NearSingularSampleError, RegimeError
from models.domain import EigenKind, PQPair, ProblemSpec
from services import gtrig, oracles, spectra
from tests.samples import FLATCORE_PQ, FLATCORE_T


def problem(p, q, T, lam=None):
    return ProblemSpec(pq=PQPair(p=p, q=q), T=T, lam=lam)


@pytest.fixture
def flatcore_spec():
    return problem(*FLATCORE_PQ, FLATCORE_T)


def sign_changes(u, points=10**4):
    """Sign changes of u on a uniform grid of [0, T], ignoring values that round to zero."""
    values = [u(float(t)) for t in np.linspace(0.0, u.T, points)]
    signs = [v > 0 for v in values if abs(v) > 1e-12]
    return sum(a != b for a, b in zip(signs, signs[1:]))


def grid_scan_minimum(f, lo, hi, points):
    """Argmin of f on a coarse grid, refined once on the two cells around it."""
    ks = np.linspace(lo, hi, points)
    i = int(np.argmin([f(float(k)) for k in ks]))
    fine = np.linspace(ks[max(i - 1, 0)], ks[min(i + 1, points - 1)], points)
    values = [f(float(k)) for k in fine]
    j = int(np.argmin(values))
    return float(fine[j]), values[j]


class TestProblemSpec:
    """Validation of problem descriptions."""

    def test_exponents_above_one(self):
        """Eigenvalue problems need p > 1 and q > 1."""
        with pytest.raises(ValueError, match="p > 1 and q > 1"):
            problem(1.0, 2.0, 1.0)

    def test_positive_length(self):
        """T must be positive."""
        with pytest.raises(ValueError):
            problem(2.0, 2.0, 0.0)

    def test_lambda_required_for_inverse_queries(self):
        """spectrum_at_lambda needs lam."""
        with pytest.raises(DomainError, match="lambda"):
            spectra.spectrum_at_lambda(problem(2.0, 2.0, math.pi))

    def test_modulus_amplitude_conversion(self):
        """R(k) and k(R) are inverse to each other."""
        for q in (1.5, 2.0, 4.0):
            assert spectra.k_from_R(q, spectra.R_from_k(q, 0.37)) == pytest.approx(0.37, rel=1e-14)


class TestForwardProblems:
    """Eigenvalues and eigenfunctions from the closed forms."""

    def test_classical_E(self):
        """p = q = 2, T = pi, n = 2 gives u = sin(2t) and lam = 4."""
        u = spectra.eigen_E(problem(2, 2, math.pi), 1.0, 2)
        assert u.kind is EigenKind.E_INTERIOR
        assert u.lam == pytest.approx(4.0, rel=1e-12)
        for t in (0.3, 1.0, 2.5):
            assert u(t) == pytest.approx(math.sin(2 * t), abs=1e-9)

    def test_E_amplitude_scaling(self):
        """lam_E scales like R^(p - q)."""
        pq = PQPair(p=3, q=2)
        ratio = spectra.lambda_E(pq, 1.0, 0.5, 1) / spectra.lambda_E(pq, 1.0, 1.0, 1)
        assert ratio == pytest.approx(0.5, rel=1e-14)

    def test_PE_amplitude(self):
        """p = q = 2, k = 0.5: the maximum is sqrt(2 k^2 / (1 + k^2))."""
        u = spectra.eigen_PE_interior(problem(2, 2, math.pi), 0.5, 1)
        assert u.amplitude == pytest.approx(math.sqrt(0.5 / 1.25), rel=1e-14)
        assert u(math.pi / 2) == pytest.approx(u.amplitude, rel=1e-9)
        assert u(0.0) == 0.0
        assert u(math.pi) == pytest.approx(0.0, abs=1e-10)

    def test_PE_classical_eigenvalue(self):
        """For p = q = 2, lam_n(k) = (1 + k^2)(2 n K(k) / T)^2."""
        lam = spectra.lambda_PE(PQPair(p=2, q=2), math.pi, 0.5, 2)
        expected = 1.25 * (4 * oracles.agm_K(0.5) / math.pi) ** 2
        assert lam == pytest.approx(expected, rel=1e-10)

    def test_PE_modulus_range(self):
        """The modulus of an interior solution lies in (0, 1)."""
        with pytest.raises(DomainError):
            spectra.eigen_PE_interior(problem(2, 2, 1.0), 0.0, 1)

    def test_flatcore_structure(self, flatcore_spec):
        """A pause of 2 in the middle of [0, 10] holds u = 1 on [4, 6]."""
        u = spectra.eigen_PE_flatcore(flatcore_spec, [2.0], 1)
        assert u.core_intervals() == [(4.0, 6.0)]
        for t in (4.0, 4.7, 6.0):
            assert u(t) == 1.0
        assert u(0.0) == 0.0
        assert u(10.0) == pytest.approx(0.0, abs=1e-10)
        assert 0.0 < u(2.0) < 1.0

    def test_flatcore_eigenvalue(self, flatcore_spec):
        """Lam_n(tau) = (2q/p*)(n pi_{p/2,q} / (T - tau))^p."""
        u = spectra.eigen_PE_flatcore(flatcore_spec, [1.0, 0.5, 0.5], 3)
        expected = 2 * 2 / (4 / 3) * (3 * math.pi / 8.0) ** 4
        assert u.lam == pytest.approx(expected, rel=1e-12)
        assert u.tau == 2.0

    def test_flatcore_alternating_signs(self, flatcore_spec):
        """Consecutive humps alternate in sign."""
        u = spectra.eigen_PE_flatcore(flatcore_spec, [1.0, 1.0], 2)
        (a, b), (c, d) = u.core_intervals()
        assert u(0.5 * (a + b)) == 1.0
        assert u(0.5 * (c + d)) == -1.0

    def test_flatcore_needs_p_above_two(self):
        """There are no flat cores for p <= 2."""
        with pytest.raises(RegimeError, match="no flat cores below p=2"):
            spectra.eigen_PE_flatcore(problem(2, 2, 10.0), [1.0], 1)

    def test_flatcore_pause_count(self, flatcore_spec):
        """Mode n needs exactly n pauses summing to less than T."""
        with pytest.raises(DomainError):
            spectra.eigen_PE_flatcore(flatcore_spec, [1.0], 2)
        with pytest.raises(DomainError):
            spectra.eigen_PE_flatcore(flatcore_spec, [10.0], 1)

    @pytest.mark.parametrize(
        "build",
        [
            lambda: spectra.eigen_E(problem(3, 2, 2.0), 0.7, 3),
            lambda: spectra.eigen_PE_interior(problem(2, 4, 1.0), 0.6, 2),
            lambda: spectra.eigen_PE_flatcore(problem(4, 2, 10.0), [1.0, 0.5, 0.5], 3),
        ],
        ids=["E", "PE-interior", "PE-flatcore"],
    )
    def test_zero_structure(self, build):
        """Mode n vanishes at both ends and changes sign n - 1 times."""
        u = build()
        assert abs(u(0.0)) <= 1e-10
        assert abs(u(u.T)) <= 1e-10
        assert sign_changes(u) == u.n - 1

    @pytest.mark.parametrize("pq", [PQPair(p=2, q=2), PQPair(p=3, q=2), PQPair(p=2, q=4)])
    def test_mode_scaling(self, pq):
        """lam_n(k) / lam_1(k) = n^p for every closed form."""
        for n in (2, 3, 7):
            ratio = spectra.lambda_PE(pq, 1.3, 0.45, n) / spectra.lambda_PE(pq, 1.3, 0.45, 1)
            assert ratio == pytest.approx(n**pq.p, rel=1e-12)
            ratio = spectra.lambda_E(pq, 1.3, 0.8, n) / spectra.lambda_E(pq, 1.3, 0.8, 1)
            assert ratio == pytest.approx(n**pq.p, rel=1e-12)
            if pq.p > 2:
                ratio = spectra.lambda_flatcore(pq, 1.3, 0.0, n) / spectra.lambda_flatcore(pq, 1.3, 0.0, 1)
                assert ratio == pytest.approx(n**pq.p, rel=1e-12)

    def test_flatcore_outside_interval(self, flatcore_spec):
        """The evaluator is only defined on [0, T]."""
        u = spectra.eigen_PE_flatcore(flatcore_spec, [2.0], 1)
        with pytest.raises(DomainError):
            u(10.5)


class TestResiduals:
    """Finite-difference residuals of the differential equations."""

    @pytest.mark.parametrize("p,q,k", [(2.0, 2.0, 0.5), (3.0, 2.0, 0.8), (1.5, 3.0, 0.6)])
    def test_interior_PE(self, p, q, k):
        """Interior solutions satisfy (PE_pq)."""
        spec = problem(p, q, 1.0)
        u = spectra.eigen_PE_interior(spec, k, 2)
        for t in (0.11, 0.37, 0.62, 0.91):
            assert abs(spectra.residual_PE(spec, u, t)) <= 1e-5 * u.lam

    def test_E_residual(self):
        """eigen_E solutions satisfy (E_pq)."""
        spec = problem(3, 2, 2.0)
        u = spectra.eigen_E(spec, 0.7, 2)
        for t in (0.2, 0.7, 1.3):
            assert abs(spectra.residual_PE(spec, u, t)) <= 1e-5 * u.lam

    def test_flatcore_residual(self, flatcore_spec):
        """Flat-core solutions satisfy (PE_pq) on humps and cores."""
        u = spectra.eigen_PE_flatcore(flatcore_spec, [1.0, 0.5], 2)
        for t in (0.8, 2.0, 4.4, 6.9, 9.1):
            assert abs(spectra.residual_PE(flatcore_spec, u, t)) <= 1e-5 * u.lam

    def test_sample_near_singular_point(self):
        """Samples on a zero or peak of u are rejected."""
        spec = problem(2, 2, math.pi)
        u = spectra.eigen_PE_interior(spec, 0.5, 1)
        with pytest.raises(NearSingularSampleError, match="near-singular sample point"):
            spectra.residual_PE(spec, u, math.pi / 2)

    def test_sample_outside_interval(self):
        """Samples must lie strictly inside (0, T)."""
        spec = problem(2, 2, math.pi)
        u = spectra.eigen_E(spec, 1.0, 1)
        with pytest.raises(DomainError):
            spectra.residual_PE(spec, u, 0.0)

    def test_mismatched_problem(self):
        """A solution is checked against its own problem only."""
        u = spectra.eigen_E(problem(2, 2, math.pi), 1.0, 1)
        with pytest.raises(DomainError, match="does not belong"):
            spectra.residual_PE(problem(3, 2, math.pi), u, 1.0)


class TestHalfExponentIdentity:
    """The humps of flat-core solutions solve the p/2 equation."""

    def test_eigenvalue(self):
        """p = 4, q = 2, T = pi, tau = 0: the p/2 eigenvalue is 1 and matches eigen_E."""
        spec = problem(4, 2, math.pi)
        u = spectra.eigen_PE_flatcore(spec, [0.0], 1)
        mu = spectra.corollary_halfp(spec, u)
        assert mu == pytest.approx(1.0, rel=1e-12)
        assert mu == pytest.approx(spectra.eigen_E(problem(2, 2, math.pi), 1.0, 1).lam, abs=1e-10)

    def test_residual(self):
        """The p/2 residual is small where |u| < 1."""
        spec = problem(4, 2, math.pi)
        u = spectra.eigen_PE_flatcore(spec, [0.0], 1)
        for t in (0.4, 1.2, 2.3):
            assert abs(spectra.residual_halfp(spec, u, t)) <= 1e-5

    def test_needs_flatcore_solution(self):
        """Interior solutions are rejected."""
        spec = problem(4, 2, math.pi)
        u = spectra.eigen_PE_interior(spec, 0.5, 1)
        with pytest.raises(DomainError):
            spectra.corollary_halfp(spec, u)

    def test_residual_on_core_rejected(self, flatcore_spec):
        """On a core |u| = 1 and the p/2 equation does not apply."""
        u = spectra.eigen_PE_flatcore(flatcore_spec, [2.0], 1)
        with pytest.raises(DomainError):
            spectra.residual_halfp(flatcore_spec, u, 5.0)


class TestPhi:
    """The spectral map Phi and its reparametrization Psi."""

    def test_limits_equal_exponents(self):
        """Phi(0+) = pi_pp / 2 for p = q."""
        spec = problem(3, 3, 1.0)
        left, right = spectra.phi_limits(spec.pq)
        assert left == pytest.approx(0.5 * gtrig.half_period(spec.pq))
        assert spectra.phi(spec, 1e-6) == pytest.approx(left, abs=1e-8)
        assert right == pytest.approx(2 ** (1 / 3 - 1) * gtrig.half_period(PQPair(p=1.5, q=3)))

    def test_limits_by_regime(self):
        """Phi(0+) is 0 for p > q and infinite for p < q; Phi(1-) is infinite for p <= 2."""
        left, right = spectra.phi_limits(PQPair(p=3, q=2))
        assert left == 0.0
        assert right == pytest.approx(2 ** (1 / 3 - 1) * gtrig.half_period(PQPair(p=1.5, q=2)))
        assert spectra.phi_limits(PQPair(p=2, q=4)) == (math.inf, math.inf)

    def test_psi_reparametrization(self):
        """Phi(k) = 2^(1/q - 1/p) Psi(k^q / (1 + k^q))."""
        spec = problem(2, 4, 1.0)
        k = 0.6
        r = k**4 / (1 + k**4)
        assert spectra.phi(spec, k) == pytest.approx(2 ** (1 / 4 - 1 / 2) * spectra.psi(spec, r), rel=1e-13)

    def test_psi_domain(self):
        """r must lie in (0, 1/2)."""
        with pytest.raises(DomainError):
            spectra.psi(problem(2, 4, 1.0), 0.5)

    def test_minimum_for_p_below_q(self):
        """lambda1_star locates the interior minimum of Phi."""
        spec = problem(2, 4, 1.0)
        k_star, lambda_1 = spectra.lambda1_star(spec)
        assert 0.0 < k_star < 1.0
        phi_min = spectra.phi(spec, k_star)
        assert phi_min <= spectra.phi(spec, max(k_star - 0.05, 0.5 * k_star))
        assert phi_min <= spectra.phi(spec, min(k_star + 0.05, 0.999))
        assert lambda_1 == pytest.approx(4 / 2 * (2 * phi_min) ** 2, rel=1e-12)

    def test_minimum_matches_grid_scan(self):
        """p = 2, q = 4, T = 1: k_* and lam_1 agree with a brute-force scan of Phi."""
        spec = problem(2, 4, 1.0)
        k_star, lambda_1 = spectra.lambda1_star(spec)
        k_grid, phi_grid = grid_scan_minimum(lambda k: spectra.phi(spec, k), 0.01, 0.999, 1001)
        assert k_star == pytest.approx(k_grid, abs=1e-5)
        assert lambda_1 == pytest.approx(4 / 2 * (2 * phi_grid) ** 2, rel=1e-8)

    def test_no_minimum_otherwise(self):
        """Phi is monotone for p >= q."""
        with pytest.raises(RegimeError, match="no interior minimum of Phi"):
            spectra.lambda1_star(problem(3, 2, 1.0))


class TestSpectrumAtLambda:
    """Mode-by-mode classification of (PE_pq)."""

    def test_linear_threshold(self):
        """p = q = 2, T = pi, lam = 1: every mode is empty."""
        report = spectra.spectrum_at_lambda(problem(2, 2, math.pi, lam=1.0), 5)
        assert all(mode.is_empty for mode in report.modes)
        assert report.thresholds.onsets == pytest.approx([1.0, 4.0, 9.0, 16.0, 25.0])

    def test_modes_open_above_threshold(self):
        """lam = 5 opens modes 1 and 2 only."""
        report = spectra.spectrum_at_lambda(problem(2, 2, math.pi, lam=5.0), 4)
        assert [mode.is_empty for mode in report.modes] == [False, False, True, True]
        branch = report.mode(1).branches[0]
        assert branch.type == "interior"
        assert branch.lambda_check == pytest.approx(5.0, rel=1e-9)

    def test_round_trip_p_above_q(self):
        """p = 3, q = 2, T = 1: the forward eigenvalue at k = 0.6, n = 2 recovers k."""
        spec = problem(3, 2, 1.0)
        lam = spectra.lambda_PE(spec.pq, spec.T, 0.6, 2)
        report = spectra.spectrum_at_lambda(spec.model_copy(update={"lam": lam}), 2)
        branch = report.mode(2).branches[0]
        assert branch.branch == "upper"
        assert branch.k == pytest.approx(0.6, abs=1e-8)
        assert branch.R == pytest.approx(spectra.R_from_k(2, 0.6), rel=1e-8)

    def test_flatcore_round_trip(self, flatcore_spec):
        """lam = Lam_1(2) yields a flat-core family with tau = 2."""
        lam = spectra.lambda_flatcore(flatcore_spec.pq, flatcore_spec.T, 2.0, 1)
        report = spectra.spectrum_at_lambda(flatcore_spec.model_copy(update={"lam": lam}), 1)
        branch = report.mode(1).branches[0]
        assert branch.type == "flatcore"
        assert branch.tau == pytest.approx(2.0, abs=1e-8)
        assert branch.pauses == pytest.approx([2.0])
        assert report.thresholds.flatcore_onsets[0] == pytest.approx(spectra.lambda_flatcore(flatcore_spec.pq, 10.0, 0.0, 1))

    def test_two_branches_below_q(self):
        """p < q: above lam_1 mode 1 has two moduli straddling k_*, with equal Phi."""
        spec = problem(2, 4, 1.0)
        k_star, lambda_1 = spectra.lambda1_star(spec)
        report = spectra.spectrum_at_lambda(spec.model_copy(update={"lam": 1.5 * lambda_1}), 1)
        branches = {b.branch: b for b in report.mode(1).branches}
        assert set(branches) == {"lower", "upper"}
        ell, k = branches["lower"].ell, branches["upper"].k
        assert ell < k_star < k
        assert spectra.phi(spec, ell) == pytest.approx(spectra.phi(spec, k), abs=1e-9)
        assert report.thresholds.k_star == k_star

    @pytest.mark.parametrize("n", [1, 2])
    def test_upper_branch_dominates_lower(self, n):
        """p < q: off the nodes iT/n the k_n solution is larger in modulus than the ell_n one."""
        spec = problem(2, 4, 1.0)
        _, lambda_1 = spectra.lambda1_star(spec)
        report = spectra.spectrum_at_lambda(spec.model_copy(update={"lam": 1.5 * n**2 * lambda_1}), n)
        branches = {b.branch: b for b in report.mode(n).branches}
        upper = spectra.eigen_PE_interior(spec, branches["upper"].k, n)
        lower = spectra.eigen_PE_interior(spec, branches["lower"].ell, n)
        nodes = [i * spec.T / n for i in range(n + 1)]
        for t in np.linspace(0.0, spec.T, 402)[1:-1]:
            t = float(t)
            if min(abs(t - node) for node in nodes) < 1e-6:
                continue
            assert abs(upper(t)) > abs(lower(t))

    def test_small_moduli_below_clip(self):
        """p slightly above q: high modes whose k_j lies below the modulus clip are still resolved."""
        spec = problem(2.2, 2, 1.0)
        lam = spectra.lambda_PE(spec.pq, spec.T, 0.01, 1)
        report = spectra.spectrum_at_lambda(spec.model_copy(update={"lam": lam}), 10)
        assert not any(mode.unresolved for mode in report.modes)
        ks = [mode.branches[0].k for mode in report.modes]
        assert ks[0] == pytest.approx(0.01, rel=1e-8)
        assert ks[-1] < spectra.K_MIN
        assert all(b < a for a, b in zip(ks, ks[1:]))
        for mode in report.modes:
            assert mode.branches[0].lambda_check == pytest.approx(lam, rel=1e-8)

    def test_empty_below_spontaneous_onset(self):
        """p < q: below lam_1 there is nothing, with no bifurcation from zero."""
        spec = problem(2, 4, 1.0)
        _, lambda_1 = spectra.lambda1_star(spec)
        report = spectra.spectrum_at_lambda(spec.model_copy(update={"lam": 0.9 * lambda_1}), 3)
        assert all(mode.is_empty for mode in report.modes)

    def test_degenerate_at_onset(self):
        """p < q: exactly at lam_1 the two branches meet at k_*."""
        spec = problem(2, 4, 1.0)
        k_star, lambda_1 = spectra.lambda1_star(spec)
        report = spectra.spectrum_at_lambda(spec.model_copy(update={"lam": lambda_1}), 1)
        (branch,) = report.mode(1).branches
        assert branch.branch == "degenerate"
        assert branch.k == k_star

    def test_moduli_decrease_with_mode(self):
        """p > q: k_j is strictly decreasing in j."""
        spec = problem(3, 2, 1.0)
        lam = 0.5 * spectra.lambda_flatcore(spec.pq, spec.T, 0.0, 1)
        report = spectra.spectrum_at_lambda(spec.model_copy(update={"lam": lam}), 6)
        ks = [mode.branches[0].k for mode in report.modes]
        assert all(b < a for a, b in zip(ks, ks[1:]))

    def test_invalid_mode_count(self):
        """n_max must be at least 1."""
        with pytest.raises(DomainError):
            spectra.spectrum_at_lambda(problem(2, 2, math.pi, lam=2.0), 0)


class TestSpectrumE:
    """Classification of (E_pq)."""

    def test_unique_amplitude(self):
        """p != q: one amplitude per mode reproducing lam."""
        spec = problem(3, 2, 1.0, lam=50.0)
        report = spectra.spectrum_E(spec, 3)
        for mode in report.modes:
            (branch,) = mode.branches
            assert branch.branch == "unique"
            assert branch.lambda_check == pytest.approx(50.0, rel=1e-12)
        assert spectra.amplitude_E(spec, 1) == report.mode(1).branches[0].R

    def test_family_on_eigenvalue(self):
        """p = q: only the mode whose eigenvalue equals lam is present."""
        report = spectra.spectrum_E(problem(2, 2, math.pi, lam=4.0), 3)
        assert [mode.is_empty for mode in report.modes] == [True, False, True]
        assert report.mode(2).branches[0].branch == "family"
        assert spectra.amplitude_E(problem(2, 2, math.pi, lam=4.0), 2) is None


class TestInitialValueProblems:
    """Closed-form solutions of u(0) = 0, u'(0) = alpha."""

    def test_E_classical(self):
        """p = q = 2, lam = 4, alpha = 2 gives u = sin(2t)."""
        u = spectra.solve_ivp_E(PQPair(p=2, q=2), 4.0, 2.0)
        assert u.R == pytest.approx(1.0, rel=1e-14)
        assert u(0.4) == pytest.approx(math.sin(0.8), abs=1e-9)

    def test_E_initial_slope(self):
        """u'(0) = alpha in general."""
        u = spectra.solve_ivp_E(PQPair(p=3, q=2), 2.0, 0.7)
        assert u.derivative(0.0) == pytest.approx(0.7, rel=1e-12)
        assert u(0.0) == 0.0

    def test_PE_energy_level(self):
        """F(R) = R^q - R^(2q)/2 equals q alpha^p / (lam p*)."""
        pq = PQPair(p=3, q=2)
        u = spectra.solve_ivp_PE(pq, 5.0, 0.8)
        level = 2 * 0.8**3 / (5.0 * 1.5)
        assert u.R**2 - u.R**4 / 2 == pytest.approx(level, rel=1e-12)
        assert u.derivative(0.0) == pytest.approx(0.8, rel=1e-10)

    def test_PE_matches_eigenvalue(self):
        """Read as a Dirichlet problem on its first zero, the IVP solution has eigenvalue lam."""
        pq = PQPair(p=2, q=2)
        u = spectra.solve_ivp_PE(pq, 3.0, 0.9)
        T = 2 * spectra.elliptic_context(pq, u.modulus).K / u.omega
        assert spectra.lambda_PE(pq, T, u.modulus, 1) == pytest.approx(3.0, rel=1e-10)

    def test_PE_separatrix_flatcore(self):
        """At F(R) = 1/2 and p > 2 the solution is the sin_{p/2,q} profile reaching 1."""
        pq = PQPair(p=4, q=2)
        lam = 2.0
        alpha = (0.5 * lam * pq.p_star / pq.q) ** 0.25
        u = spectra.solve_ivp_PE(pq, lam, alpha)
        assert u.R == 1.0
        assert u.modulus is None

    def test_PE_separatrix_divergent(self):
        """At F(R) = 1/2 and p <= 2 the time to reach 1 is infinite."""
        with pytest.raises(DivergentError):
            spectra.solve_ivp_PE(PQPair(p=2, q=2), 1.0, math.sqrt(0.5))

    def test_PE_above_separatrix(self):
        """Slopes with F(R) > 1/2 leave |u| <= 1."""
        with pytest.raises(DomainError, match="leaves"):
            spectra.solve_ivp_PE(PQPair(p=2, q=2), 1.0, 1.0)


class TestBifurcationDiagram:
    """Branches as (lam, amplitude) points."""

    def test_flatcore_continuation(self, flatcore_spec):
        """p > 2: the interior branch is continued by flat cores at amplitude 1."""
        points = spectra.bifurcation_diagram(flatcore_spec, 1, samples=10)
        interior = [pt for pt in points if pt.k is not None]
        flat = [pt for pt in points if pt.tau is not None]
        assert len(interior) == len(flat) == 10
        assert all(b.amplitude > a.amplitude for a, b in zip(interior, interior[1:]))
        assert all(pt.amplitude == 1.0 for pt in flat)
        assert flat[0].lam == pytest.approx(spectra.lambda_flatcore(flatcore_spec.pq, 10.0, 0.0, 1))

    def test_interior_only_below_two(self):
        """p <= 2 has no flat-core continuation."""
        points = spectra.bifurcation_diagram(problem(2, 2, math.pi), 2, samples=5)
        assert len(points) == 5
        assert all(pt.tau is None for pt in points)
