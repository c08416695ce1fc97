"""
Closed-form eigenpairs and inverse spectral classification for

    (E_pq)   (phi_p(u'))' + lam phi_q(u) = 0,                u(0) = u(T) = 0
    (PE_pq)  (phi_p(u'))' + lam phi_q(u) (1 - |u|^q) = 0,   u(0) = u(T) = 0

with phi_p(s) = |s|^(p-2) s. Interior solutions of (PE_pq) are scaled sn_pq waves
parametrized by the modulus k; for p > 2 they are joined by flat-core solutions that
sit at +/-1 on pauses of total length tau.

Mode j of (PE_pq) at a given lam solves Phi(k) = (T / 2j) (lam p* / q)^(1/p).
"""
import bisect
import logging
import math
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import numpy as np

from core.errors import (
    BracketError,
    DivergentError,
    DomainError,
    NearDivergentModulusError,
    NearSingularSampleError,
    QuadratureError,
    RegimeError,
)
from models.domain import EigenKind, Modulus, PQPair, ProblemSpec
from models.responses import (
    BranchPoint,
    BranchReport,
    EigenSolution,
    IVPSolution,
    ModeReport,
    SpectrumReport,
    SpectrumThresholds,
)
from services.gelliptic import ModulusLike, elliptic_context
from services.gtrig import cos_pq, half_period, sin_pq
from services.numerics import fd_derivative, fd_step, invert_monotone, minimize_unimodal

logger = logging.getLogger(__name__)

# relative band inside which lam counts as sitting exactly on a threshold
THRESHOLD_RTOL = 1e-10

K_MIN = 1e-12
K_MAX_FLATCORE = 1.0 - 1e-10


def phi_p(s: float, p: float) -> float:
    return math.copysign(abs(s) ** (p - 1.0), s)


def _modulus_value(k: ModulusLike) -> float:
    return k.k if isinstance(k, Modulus) else Modulus(k=k).k


def _require_open_unit(name: str, value: float) -> None:
    if not 0.0 < value < 1.0:
        raise DomainError(f"{name} must lie in (0, 1), got {value}")


def _require_mode(n: int) -> None:
    if n < 1:
        raise DomainError(f"mode number must be >= 1, got {n}")


def k_from_R(q: float, R: float) -> float:
    _require_open_unit("R", R)
    rq = R**q
    return (rq / (2.0 - rq)) ** (1.0 / q)


def R_from_k(q: float, k: float) -> float:
    _require_open_unit("k", k)
    kq = k**q
    return (2.0 * kq / (1.0 + kq)) ** (1.0 / q)


def lambda_E(pq: PQPair, T: float, R: float, n: int) -> float:
    return pq.q / pq.p_star * (n * half_period(pq) / T) ** pq.p * R ** (pq.p - pq.q)


def eigen_E(spec: ProblemSpec, R: float, n: int) -> EigenSolution:
    """u(t) = R sin_pq(n pi_pq t / T), the n-th eigenfunction of (E_pq) with amplitude R."""
    if not R > 0:
        raise DomainError(f"amplitude R must be positive, got {R}")
    _require_mode(n)
    pq, T = spec.pq, spec.T
    omega = n * half_period(pq) / T

    def u(t: float) -> float:
        return R * sin_pq(pq, omega * t)

    def du(t: float) -> float:
        return R * omega * cos_pq(pq, omega * t)

    return EigenSolution(
        kind=EigenKind.E_INTERIOR,
        n=n,
        p=pq.p,
        q=pq.q,
        T=T,
        lam=lambda_E(pq, T, R, n),
        amplitude=R,
        breakpoints=[j * T / n for j in range(n + 1)],
        singular_points=[j * T / (2 * n) for j in range(2 * n + 1)],
        evaluator=u,
        derivative=du,
    )


def lambda_PE(pq: PQPair, T: float, k: ModulusLike, n: int) -> float:
    """lam_n(k) = (q/p*) (1 + k^q) (2k^q / (1 + k^q))^(p/q - 1) (2 n K_pq(k) / T)^p."""
    kv = _modulus_value(k)
    _require_open_unit("k", kv)
    kq = kv**pq.q
    K = elliptic_context(pq, kv).K
    rq = 2.0 * kq / (1.0 + kq)
    return pq.q / pq.p_star * (1.0 + kq) * rq ** (pq.p / pq.q - 1.0) * (2.0 * n * K / T) ** pq.p


def eigen_PE_interior(spec: ProblemSpec, k: ModulusLike, n: int) -> EigenSolution:
    kv = _modulus_value(k)
    _require_open_unit("k", kv)
    _require_mode(n)
    pq, T = spec.pq, spec.T
    ctx = elliptic_context(pq, kv)
    R = R_from_k(pq.q, kv)
    omega = 2.0 * n * ctx.K / T

    def u(t: float) -> float:
        return R * ctx.sn(omega * t)

    def du(t: float) -> float:
        return R * omega * ctx.sn_derivative(omega * t)

    return EigenSolution(
        kind=EigenKind.PE_INTERIOR,
        n=n,
        p=pq.p,
        q=pq.q,
        T=T,
        lam=lambda_PE(pq, T, kv, n),
        amplitude=R,
        modulus=kv,
        breakpoints=[j * T / n for j in range(n + 1)],
        singular_points=[j * T / (2 * n) for j in range(2 * n + 1)],
        evaluator=u,
        derivative=du,
    )


def lambda_flatcore(pq: PQPair, T: float, tau: float, n: int) -> float:
    """Lam_n(tau) = (2q/p*) (n pi_{p/2,q} / (T - tau))^p."""
    return 2.0 * pq.q / pq.p_star * (n * half_period(pq.halved()) / (T - tau)) ** pq.p


def eigen_PE_flatcore(spec: ProblemSpec, pauses: Sequence[float], n: int) -> EigenSolution:
    """n humps of sin_{p/2,q}, hump j held at (-1)^(j-1) for pauses[j-1]."""
    pq, T = spec.pq, spec.T
    if pq.p <= 2:
        raise RegimeError(f"no flat cores below p=2 (p={pq.p})")
    _require_mode(n)
    pauses = [float(x) for x in pauses]
    if len(pauses) != n:
        raise DomainError(f"mode {n} needs {n} pauses, got {len(pauses)}")
    if any(x < 0 for x in pauses):
        raise DomainError(f"pauses must be nonnegative, got {pauses}")
    tau = math.fsum(pauses)
    if tau >= T:
        raise DomainError(f"total pause {tau} must be below T={T}")

    half = (T - tau) / (2 * n)
    omega = n * half_period(pq.halved()) / (T - tau)
    shape = pq.halved()
    breakpoints = [0.0]
    for j in range(1, n + 1):
        breakpoints.append((T - tau) * j / n + math.fsum(pauses[:j]))
    breakpoints[-1] = T

    def locate(t: float) -> Tuple[float, float, float]:
        if not 0.0 <= t <= T:
            raise DomainError(f"flat-core solution is defined on [0, {T}], got t={t}")
        j = min(max(bisect.bisect_right(breakpoints, t), 1), n)
        sign = 1.0 if j % 2 == 1 else -1.0
        return sign, breakpoints[j - 1], breakpoints[j]

    def u(t: float) -> float:
        sign, left, right = locate(t)
        if left + half <= t <= right - half:
            return sign
        if t < left + half:
            return sign * sin_pq(shape, omega * (t - left))
        return sign * sin_pq(shape, omega * (right - t))

    def du(t: float) -> float:
        sign, left, right = locate(t)
        if left + half <= t <= right - half:
            return 0.0
        if t < left + half:
            return sign * omega * cos_pq(shape, omega * (t - left))
        return -sign * omega * cos_pq(shape, omega * (right - t))

    edges = []
    for j in range(1, n + 1):
        edges.extend([breakpoints[j - 1] + half, breakpoints[j] - half])

    return EigenSolution(
        kind=EigenKind.PE_FLATCORE,
        n=n,
        p=pq.p,
        q=pq.q,
        T=T,
        lam=lambda_flatcore(pq, T, tau, n),
        amplitude=1.0,
        pauses=pauses,
        breakpoints=breakpoints,
        singular_points=sorted(set(breakpoints + edges)),
        evaluator=u,
        derivative=du,
    )


def _check_sample(u: EigenSolution, t: float) -> None:
    if not 0.0 < t < u.T:
        raise DomainError(f"residual sample t={t} must lie strictly inside (0, {u.T})")
    guard = 10.0 * fd_step(t, 1)
    for point in u.singular_points:
        if abs(t - point) < guard:
            raise NearSingularSampleError(f"t={t} is within {guard:.2e} of {point}")


def _check_pair(spec: ProblemSpec, u: EigenSolution) -> None:
    if (spec.p, spec.q, spec.T) != (u.p, u.q, u.T):
        raise DomainError(
            f"solution for (p={u.p}, q={u.q}, T={u.T}) does not belong to "
            f"(p={spec.p}, q={spec.q}, T={spec.T})"
        )


def residual_PE(spec: ProblemSpec, u: EigenSolution, t: float) -> float:
    """Finite-difference value of the left-hand side of (PE_pq), or (E_pq) for E_INTERIOR."""
    _check_pair(spec, u)
    _check_sample(u, t)
    p, q = spec.p, spec.q
    flux = fd_derivative(lambda s: phi_p(u.derivative(s), p), t, 1)
    value = u(t)
    source = u.lam * phi_p(value, q)
    if u.kind is not EigenKind.E_INTERIOR:
        source *= 1.0 - abs(value) ** q
    return flux + source


def corollary_halfp(spec: ProblemSpec, u: EigenSolution) -> float:
    """Eigenvalue of the p/2-Laplacian equation solved by the humps of a flat-core solution."""
    if u.kind is not EigenKind.PE_FLATCORE:
        raise DomainError(f"the p/2 identity needs a flat-core solution, got {u.kind.value}")
    _check_pair(spec, u)
    p, q = spec.p, spec.q
    omega = u.n * half_period(spec.pq.halved()) / (u.T - u.tau)
    return (p - 2.0) * q / p * omega ** (p / 2.0)


def residual_halfp(spec: ProblemSpec, u: EigenSolution, t: float) -> float:
    mu = corollary_halfp(spec, u)
    _check_sample(u, t)
    value = u(t)
    if abs(value) >= 1.0:
        raise DomainError(f"the p/2 equation holds where |u| < 1; u({t}) = {value}")
    flux = fd_derivative(lambda s: phi_p(u.derivative(s), spec.p / 2.0), t, 1)
    return flux + mu * phi_p(value, spec.q)


def _phi(pq: PQPair, k: float) -> float:
    p, q = pq.p, pq.q
    kq = k**q
    K = elliptic_context(pq, k).K
    return (1.0 + kq) ** (1.0 / p) * (2.0 * kq / (1.0 + kq)) ** (1.0 / q - 1.0 / p) * K


def phi(spec: ProblemSpec, k: ModulusLike) -> float:
    kv = _modulus_value(k)
    _require_open_unit("k", kv)
    return _phi(spec.pq, kv)


def phi_limits(pq: PQPair) -> Tuple[float, float]:
    """(Phi(0+), Phi(1-)) by regime."""
    if pq.p > pq.q:
        left = 0.0
    elif pq.p == pq.q:
        left = 0.5 * half_period(pq)
    else:
        left = math.inf
    right = 2.0 ** (1.0 / pq.p - 1.0) * half_period(pq.halved()) if pq.p > 2 else math.inf
    return left, right


def _k_of_r(q: float, r: float) -> float:
    return (r / (1.0 - r)) ** (1.0 / q)


def _r_of_k(q: float, k: float) -> float:
    kq = k**q
    return kq / (1.0 + kq)


def psi(spec: ProblemSpec, r: float) -> float:
    """Psi(r) = 2^(1/p - 1/q) Phi(k) with r = k^q / (1 + k^q), convex on (0, 1/2)."""
    if not 0.0 < r < 0.5:
        raise DomainError(f"r must lie in (0, 1/2), got {r}")
    p, q = spec.p, spec.q
    return 2.0 ** (1.0 / p - 1.0 / q) * _phi(spec.pq, _k_of_r(q, r))


@lru_cache(maxsize=None)
def _upper_modulus(p: float, q: float) -> float:
    """Largest modulus of the form 1 - 10^-m whose K_pq is representable."""
    if p > 2:
        return K_MAX_FLATCORE
    pq = PQPair(p=p, q=q)
    for m in range(12, 3, -1):
        k = 1.0 - 10.0**-m
        try:
            elliptic_context(pq, k)
        except (NearDivergentModulusError, QuadratureError) as exc:
            logger.debug("upper modulus 1 - 1e-%d rejected for p=%s, q=%s: %s", m, p, q, exc)
            continue
        return k
    raise NearDivergentModulusError(f"no representable modulus near 1 for p={p}, q={q}")


@lru_cache(maxsize=None)
def _k_star(p: float, q: float) -> Tuple[float, float]:
    pq = PQPair(p=p, q=q)
    r_lo, r_hi = _r_of_k(q, K_MIN), _r_of_k(q, _upper_modulus(p, q))
    coeff = 2.0 ** (1.0 / p - 1.0 / q)

    def psi_r(r: float) -> float:
        return coeff * _phi(pq, _k_of_r(q, r))

    r_star, _ = minimize_unimodal(psi_r, r_lo, r_hi)
    k_star = _k_of_r(q, r_star)
    phi_min = _phi(pq, k_star)
    logger.debug("k_* = %.17g, Phi(k_*) = %.17g for p=%s, q=%s", k_star, phi_min, p, q)
    return k_star, phi_min


def lambda1_star(spec: ProblemSpec) -> Tuple[float, float]:
    """(k_*, lam_1): minimizer of Phi and the onset of the first spontaneous branch (p < q)."""
    p, q = spec.p, spec.q
    if p >= q:
        raise RegimeError(f"no interior minimum of Phi for p={p} >= q={q}")
    k_star, phi_min = _k_star(p, q)
    return k_star, q / spec.p_star * (2.0 * phi_min / spec.T) ** p


class SpectrumAnalyzer:
    """Classifies every mode j <= n_max of (PE_pq) at the lam of the problem spec."""

    def __init__(self, spec: ProblemSpec, n_max: int = 10):
        if n_max < 1:
            raise DomainError(f"n_max must be >= 1, got {n_max}")
        self.spec = spec
        self.lam = spec.require_lambda()
        self.n_max = n_max
        self.pq = spec.pq
        self.p, self.q, self.T = spec.p, spec.q, spec.T
        self.k_lo = K_MIN
        self.k_hi = _upper_modulus(self.p, self.q)
        self.phi_right = phi_limits(self.pq)[1]
        self.phi_floor = _phi(self.pq, self.k_lo) if self.p > self.q else None
        self._k_star: Optional[float] = None
        self._lambda_1: Optional[float] = None

    def analyze(self) -> SpectrumReport:
        """Perform the per-mode classification."""
        thresholds = self._thresholds()
        modes = [self._classify_mode(j) for j in range(1, self.n_max + 1)]
        meta = {
            "problem": "PE",
            "p": self.p,
            "q": self.q,
            "T": self.T,
            "lambda": self.lam,
            "n_max": self.n_max,
        }
        return SpectrumReport(meta=meta, thresholds=thresholds, modes=modes)

    def _thresholds(self) -> SpectrumThresholds:
        thresholds = SpectrumThresholds()
        j_range = range(1, self.n_max + 1)
        if self.p < self.q:
            self._k_star, self._lambda_1 = lambda1_star(self.spec)
            thresholds.k_star = self._k_star
            thresholds.lambda_1 = self._lambda_1
            thresholds.onsets = [j**self.p * self._lambda_1 for j in j_range]
        elif self.p == self.q:
            thresholds.onsets = [lambda_E(self.pq, self.T, 1.0, j) for j in j_range]
        if self.p > 2:
            thresholds.flatcore_onsets = [lambda_flatcore(self.pq, self.T, 0.0, j) for j in j_range]
        return thresholds

    def _target(self, j: int) -> float:
        return self.T / (2.0 * j) * (self.lam * self.spec.p_star / self.q) ** (1.0 / self.p)

    def _phi_clipped(self, k: float) -> float:
        if self.p > 2 and k >= self.k_hi:
            return self.phi_right
        return _phi(self.pq, k)

    def _solve(self, target: float, lo: float, hi: float) -> Optional[float]:
        try:
            return invert_monotone(self._phi_clipped, target, lo, hi)
        except BracketError as exc:
            logger.warning("no representable modulus in [%g, %g] for Phi = %.17g: %s", lo, hi, target, exc)
            return None

    def _solve_small_k(self, target: float) -> Optional[float]:
        """Invert Phi(k) ~ 2^(1/q - 1/p) k^(1 - q/p) pi_pq / 2 below K_MIN (p > q).

        The relative error of the asymptote is O(k^q), far below the tolerance there.
        """
        scale = 2.0 ** (1.0 / self.q - 1.0 / self.p) * 0.5 * half_period(self.pq)
        k = min((target / scale) ** (1.0 / (1.0 - self.q / self.p)), self.k_lo)
        if not k > 0.0:
            logger.warning("modulus for Phi = %.17g underflows", target)
            return None
        logger.debug("Phi = %.17g below Phi(K_MIN); asymptotic k = %.17g", target, k)
        return k

    def _flatcore_branch(self, j: int) -> Optional[BranchReport]:
        if self.p <= 2:
            return None
        onset = lambda_flatcore(self.pq, self.T, 0.0, j)
        if self.lam < onset * (1.0 - THRESHOLD_RTOL):
            return None
        half_h = half_period(self.pq.halved())
        tau = self.T - j * half_h * (2.0 * self.q / (self.lam * self.spec.p_star)) ** (1.0 / self.p)
        tau = max(tau, 0.0)
        return BranchReport(
            type="flatcore",
            branch="family",
            tau=tau,
            pauses=[tau / j] * j,
            family=f"any {j} nonnegative pauses summing to {tau:.17g}",
            lambda_check=lambda_flatcore(self.pq, self.T, tau, j),
        )

    def _interior(self, branch: str, k: float, j: int) -> BranchReport:
        report = BranchReport(
            type="interior",
            branch=branch,
            R=R_from_k(self.q, k),
            lambda_check=lambda_PE(self.pq, self.T, k, j),
        )
        if branch == "lower":
            report.ell = k
        else:
            report.k = k
        return report

    def _classify_mode(self, j: int) -> ModeReport:
        mode = ModeReport(n=j)
        target = self._target(j)
        flatcore = self._flatcore_branch(j)

        if self.p < self.q:
            onset = j**self.p * self._lambda_1
            if self.lam < onset * (1.0 - THRESHOLD_RTOL):
                logger.info("mode %d: lam below the spontaneous onset %.6g, empty", j, onset)
                return mode
            if abs(self.lam - onset) <= THRESHOLD_RTOL * onset:
                mode.branches.append(self._interior("degenerate", self._k_star, j))
                return mode
            ell = self._solve(target, self.k_lo, self._k_star)
            if ell is None:
                mode.unresolved = True
            else:
                mode.branches.append(self._interior("lower", ell, j))
        elif self.p == self.q:
            onset = lambda_E(self.pq, self.T, 1.0, j)
            if self.lam <= onset * (1.0 + THRESHOLD_RTOL):
                logger.info("mode %d: lam at or below the linear onset %.6g, empty", j, onset)
                return mode

        if flatcore is not None:
            mode.branches.append(flatcore)
        else:
            lo = self._k_star if self.p < self.q else self.k_lo
            if self.phi_floor is not None and target < self.phi_floor:
                k = self._solve_small_k(target)
            else:
                k = self._solve(target, lo, self.k_hi)
            if k is None:
                mode.unresolved = True
            else:
                mode.branches.append(self._interior("upper", k, j))

        logger.info("mode %d: %s", j, [b.branch for b in mode.branches] or "empty")
        return mode


def spectrum_at_lambda(spec: ProblemSpec, n_max: int = 10) -> SpectrumReport:
    return SpectrumAnalyzer(spec, n_max).analyze()


def amplitude_E(spec: ProblemSpec, n: int) -> Optional[float]:
    """Amplitude of mode n of (E_pq) at lam; None when p = q (no amplitude is singled out)."""
    _require_mode(n)
    lam = spec.require_lambda()
    if spec.p == spec.q:
        return None
    return (lam / lambda_E(spec.pq, spec.T, 1.0, n)) ** (1.0 / (spec.p - spec.q))


def spectrum_E(spec: ProblemSpec, n_max: int = 10) -> SpectrumReport:
    """Per-mode classification of (E_pq): one amplitude per mode for p != q, or a
    whole family of amplitudes when lam hits an eigenvalue for p = q."""
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    lam = spec.require_lambda()
    pq, T = spec.pq, spec.T
    onsets = [lambda_E(pq, T, 1.0, j) for j in range(1, n_max + 1)]
    modes = []
    for j, onset in enumerate(onsets, start=1):
        mode = ModeReport(n=j)
        if spec.p != spec.q:
            R = amplitude_E(spec, j)
            mode.branches.append(
                BranchReport(type="interior", branch="unique", R=R, lambda_check=lambda_E(pq, T, R, j))
            )
        elif abs(lam - onset) <= THRESHOLD_RTOL * onset:
            mode.branches.append(
                BranchReport(type="interior", branch="family", family="any R > 0", lambda_check=onset)
            )
        modes.append(mode)
    meta = {"problem": "E", "p": spec.p, "q": spec.q, "T": T, "lambda": lam, "n_max": n_max}
    return SpectrumReport(meta=meta, thresholds=SpectrumThresholds(onsets=onsets), modes=modes)


def _check_ivp(pq: PQPair, lam: float, alpha: float) -> None:
    if pq.p <= 1 or pq.q <= 1:
        raise DomainError(f"initial value problems need p > 1 and q > 1, got p={pq.p}, q={pq.q}")
    if not lam > 0:
        raise DomainError(f"lambda must be positive, got {lam}")
    if not alpha > 0:
        raise DomainError(f"initial slope must be positive, got {alpha}")


def solve_ivp_E(pq: PQPair, lam: float, alpha: float) -> IVPSolution:
    """u(0) = 0, u'(0) = alpha for (E_pq): u = R sin_pq(omega t)."""
    _check_ivp(pq, lam, alpha)
    p, q = pq.p, pq.q
    R = (q / (lam * pq.p_star)) ** (1.0 / q) * alpha ** (p / q)
    omega = alpha / R

    return IVPSolution(
        p=p,
        q=q,
        lam=lam,
        alpha=alpha,
        R=R,
        omega=omega,
        evaluator=lambda t: R * sin_pq(pq, omega * t),
        derivative=lambda t: R * omega * cos_pq(pq, omega * t),
    )


def solve_ivp_PE(pq: PQPair, lam: float, alpha: float) -> IVPSolution:
    """u(0) = 0, u'(0) = alpha for (PE_pq), restricted to solutions with |u| <= 1.

    The energy level F(R) = R^q - R^(2q)/2 equals q alpha^p / (lam p*); F(R) = 1/2
    is the separatrix R = 1, reached only by the sin_{p/2,q} profile when p > 2.
    """
    _check_ivp(pq, lam, alpha)
    p, q = pq.p, pq.q
    level = q * alpha**p / (lam * pq.p_star)
    if level > 0.5 * (1.0 + THRESHOLD_RTOL):
        raise DomainError(f"slope {alpha} leaves |u| <= 1 (energy level {level} > 1/2)")

    if level >= 0.5 * (1.0 - THRESHOLD_RTOL):
        if p <= 2:
            raise DivergentError(f"the R = 1 solution takes infinite time to reach 1 for p={p} <= 2")
        shape = pq.halved()
        omega = (lam * pq.p_star / (2.0 * q)) ** (1.0 / p)
        return IVPSolution(
            p=p,
            q=q,
            lam=lam,
            alpha=alpha,
            R=1.0,
            omega=omega,
            evaluator=lambda t: sin_pq(shape, omega * t),
            derivative=lambda t: omega * cos_pq(shape, omega * t),
        )

    rq = 2.0 * level / (1.0 + math.sqrt(1.0 - 2.0 * level))
    R = rq ** (1.0 / q)
    k = k_from_R(q, R)
    ctx = elliptic_context(pq, k)
    omega = alpha / R

    def du(t: float) -> float:
        return R * omega * ctx.sn_derivative(omega * t)

    return IVPSolution(
        p=p,
        q=q,
        lam=lam,
        alpha=alpha,
        R=R,
        modulus=k,
        omega=omega,
        evaluator=lambda t: R * ctx.sn(omega * t),
        derivative=du,
    )


def bifurcation_diagram(spec: ProblemSpec, n: int, samples: int = 50) -> List[BranchPoint]:
    """Branch n of (PE_pq) as (lam, max|u|) points.

    The interior branch is sampled over a uniform modulus grid in (0, 1); for p > 2
    it is continued past its endpoint (Lam_n(0), 1) by the flat-core branch over
    tau in [0, T).
    """
    _require_mode(n)
    if samples < 2:
        raise DomainError(f"samples must be >= 2, got {samples}")
    pq, T = spec.pq, spec.T
    points: List[BranchPoint] = []
    for k in np.linspace(0.0, 1.0, samples + 2)[1:-1]:
        k = float(k)
        points.append(BranchPoint(lam=lambda_PE(pq, T, k, n), amplitude=R_from_k(pq.q, k), k=k))
    if pq.p > 2:
        for tau in np.linspace(0.0, T, samples, endpoint=False):
            tau = float(tau)
            points.append(BranchPoint(lam=lambda_flatcore(pq, T, tau, n), amplitude=1.0, tau=tau))
    return points
