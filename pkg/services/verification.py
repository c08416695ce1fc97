"""
Verification suite run by the `verify` command.

Each group checks one family of identities against closed forms, the classical
AGM oracle or finite-difference residuals, and reports the largest residual seen.
Sample points are drawn from a generator seeded by (seed, group index).
"""
import logging
import math
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from core.errors import DomainError
from models.domain import PQPair, ProblemSpec
from models.responses import EigenSolution, VerificationGroupResult, VerificationReport
from services import gelliptic, gtrig, oracles, spectra
from services.numerics import fd_derivative

logger = logging.getLogger(__name__)

PQ_SWEEP: Tuple[Tuple[float, float], ...] = ((1.5, 1.2), (1.5, 3.0), (2.0, 2.0), (2.0, 4.0), (3.0, 2.0), (4.0, 4.0))
MODULI = (0.0, 0.5, 0.9)
ROUND_TRIPS_PER_REGIME = 20


class _Checks:
    """Accumulates (residual, tolerance) pairs for one group."""

    def __init__(self, name: str):
        self.name = name
        self.count = 0
        self.max_residual = 0.0
        self.failures: List[str] = []
        self.notes: List[str] = []

    def add(self, label: str, residual: float, tolerance: float) -> None:
        self.count += 1
        if not math.isfinite(residual) or residual > tolerance:
            self.failures.append(f"{label}: {residual:.3e} > {tolerance:.1e}")
        if math.isfinite(residual):
            self.max_residual = max(self.max_residual, residual)

    def require(self, label: str, condition: bool) -> None:
        self.count += 1
        if not condition:
            self.failures.append(label)

    def result(self) -> VerificationGroupResult:
        detail = "; ".join(self.failures[:5] + self.notes)
        return VerificationGroupResult(
            name=self.name,
            passed=not self.failures,
            checks=self.count,
            max_residual=self.max_residual,
            detail=detail,
        )


def _interior_samples(u: EigenSolution, count: int, rng: np.random.Generator, margin: float = 0.02) -> List[float]:
    """Uniform points in (0, T) at least margin * (T / 2n) away from every singular point."""
    guard = margin * u.T / (2 * u.n)
    points: List[float] = []
    while len(points) < count:
        t = float(rng.uniform(0.0, u.T))
        if all(abs(t - s) > guard for s in u.singular_points):
            points.append(t)
    return points


def _quarter_samples(half: float, count: int, rng: np.random.Generator) -> List[float]:
    """Points of (0, half / 2) kept away from both ends of the fundamental domain."""
    return [float(x) for x in rng.uniform(0.02, 0.9, count) * 0.5 * half]


def _samples_off_nodes(span: float, nodes: int, count: int, rng: np.random.Generator, margin: float = 0.02) -> List[float]:
    """Uniform points of (0, span) at least margin * span / nodes from every multiple of span / nodes."""
    step = span / nodes
    points: List[float] = []
    while len(points) < count:
        t = float(rng.uniform(0.0, span))
        offset = t / step - round(t / step)
        if abs(offset) > margin:
            points.append(t)
    return points


class VerificationRunner:
    def __init__(self, seed: int = 0):
        self.seed = seed
        self.groups: Dict[str, Callable[[_Checks, np.random.Generator], None]] = {
            "classical": self._classical,
            "elliptic-oracle": self._elliptic_oracle,
            "identities": self._identities,
            "ode-residual": self._ode_residual,
            "limits": self._limits,
            "round-trip": self._round_trip,
            "regimes": self._regimes,
            "flat-core": self._flat_core,
            "corollary": self._corollary,
        }

    def run(self, only: Optional[Sequence[str]] = None) -> VerificationReport:
        names = list(self.groups) if not only else list(only)
        unknown = [name for name in names if name not in self.groups]
        if unknown:
            raise DomainError(f"unknown verification group(s) {unknown}; choose from {list(self.groups)}")

        results = []
        for index, name in enumerate(self.groups):
            if name not in names:
                continue
            checks = _Checks(name)
            rng = np.random.default_rng([self.seed, index])
            self.groups[name](checks, rng)
            result = checks.result()
            logger.info("%s: %s (%d checks, max residual %.3e)", name, "pass" if result.passed else "FAIL", result.checks, result.max_residual)
            results.append(result)
        return VerificationReport(seed=self.seed, groups=results)

    def _classical(self, checks: _Checks, rng: np.random.Generator) -> None:
        pq22 = PQPair(p=2, q=2)
        checks.add("pi_22", abs(gtrig.half_period(pq22) - math.pi), 1e-12)
        for p in (1.5, 2.0, 3.0, 5.0):
            closed = 2 * math.pi / (p * math.sin(math.pi / p))
            checks.add(f"pi_pp p={p}", abs(gtrig.half_period(PQPair(p=p, q=p)) - closed), 1e-10)
        grid = np.linspace(0.0, 2 * math.pi, 200)
        checks.add("sin_22", max(abs(gtrig.sin_pq(pq22, float(t)) - math.sin(t)) for t in grid), 1e-9)
        pq12 = PQPair(p=1, q=2)
        grid = np.linspace(0.0, 5.0, 41)
        checks.add("sin_12", max(abs(gtrig.sin_pq(pq12, float(t)) - math.tanh(t)) for t in grid), 1e-9)

    def _elliptic_oracle(self, checks: _Checks, rng: np.random.Generator) -> None:
        pq22 = PQPair(p=2, q=2)
        for k in np.arange(1, 10) / 10.0:
            k = float(k)
            K = gelliptic.complete_K(pq22, k)
            checks.add(f"K k={k}", abs(K - oracles.agm_K(k)), 1e-9)
            grid = np.linspace(0.0, 4 * K, 201)
            checks.add(
                f"sn k={k}",
                max(abs(gelliptic.sn_pq(pq22, k, float(t)) - oracles.jacobi_elliptic(float(t), k).sn) for t in grid),
                1e-8,
            )
        reference = oracles.jacobi_elliptic(0.9, 0.7)
        checks.add("cn k=0.7", abs(gelliptic.cn_pq(pq22, 0.7, 0.9) - reference.cn), 1e-9)
        checks.add("dn k=0.7", abs(gelliptic.dn_pq(pq22, 0.7, 0.9) - reference.dn), 1e-9)
        checks.add("am k=0.5", abs(gelliptic.am_pq(pq22, 0.5, 0.8) - oracles.jacobi_elliptic(0.8, 0.5).am), 1e-9)

    def _identities(self, checks: _Checks, rng: np.random.Generator) -> None:
        for p, q in PQ_SWEEP:
            pq = PQPair(p=p, q=q)
            half = gtrig.half_period(pq)
            for t in _quarter_samples(half, 5, rng):
                s, c = gtrig.sin_pq(pq, t), gtrig.cos_pq(pq, t)
                checks.add(f"cos^p+sin^q ({p},{q})", abs(c**p + s**q - 1.0), 1e-10)
                checks.add(f"sin' ({p},{q})", abs(fd_derivative(lambda x: gtrig.sin_pq(pq, x), t) - c), 1e-6)
            for k in MODULI:
                ctx = gelliptic.elliptic_context(pq, k)
                for t in _quarter_samples(2 * ctx.K, 4, rng):
                    s, c, d = ctx.sn(t), ctx.cn(t), ctx.dn(t)
                    checks.add(f"cn^p+sn^q ({p},{q},{k})", abs(c**p + s**q - 1.0), 1e-10)
                    checks.add(f"dn^p+k^q sn^q ({p},{q},{k})", abs(d**p + ctx.kq * s**q - 1.0), 1e-10)
                    checks.add(f"sn' ({p},{q},{k})", abs(fd_derivative(ctx.sn, t) - c * d), 1e-6)
                    if k == 0.0:
                        checks.add(f"sn(t,0) ({p},{q})", abs(s - gtrig.sin_pq(pq, t)), 1e-10)

    def _ode_residual(self, checks: _Checks, rng: np.random.Generator) -> None:
        for p, q in PQ_SWEEP:
            pq = PQPair(p=p, q=q)
            scale = q / pq.p_star
            half = gtrig.half_period(pq)
            for t in _samples_off_nodes(half, 2, 50, rng, margin=0.04):
                flux = fd_derivative(lambda x: spectra.phi_p(gtrig.cos_pq(pq, x), p), t)
                checks.add(f"sin ODE ({p},{q})", abs(flux + scale * spectra.phi_p(gtrig.sin_pq(pq, t), q)) / scale, 1e-5)
            for k in MODULI:
                ctx = gelliptic.elliptic_context(pq, k)
                for t in _samples_off_nodes(2 * ctx.K, 2, 50, rng):
                    s = ctx.sn(t)
                    flux = fd_derivative(lambda x: spectra.phi_p(ctx.sn_derivative(x), p), t)
                    weight = 1.0 + ctx.kq - 2.0 * ctx.kq * abs(s) ** q
                    checks.add(f"sn ODE ({p},{q},{k})", abs(flux + scale * spectra.phi_p(s, q) * weight) / scale, 1e-5)

        cases = [
            ("E", spectra.eigen_E(ProblemSpec(pq=PQPair(p=3, q=2), T=2.0), 0.7, 2)),
            ("PE", spectra.eigen_PE_interior(ProblemSpec(pq=PQPair(p=2, q=2), T=math.pi), 0.5, 1)),
            ("PE", spectra.eigen_PE_interior(ProblemSpec(pq=PQPair(p=1.5, q=3), T=1.0), 0.6, 2)),
            ("flatcore", spectra.eigen_PE_flatcore(ProblemSpec(pq=PQPair(p=4, q=2), T=10.0), [1.0, 0.5], 2)),
        ]
        for label, u in cases:
            spec = ProblemSpec(pq=PQPair(p=u.p, q=u.q), T=u.T)
            for t in _interior_samples(u, 50, rng):
                checks.add(f"residual {label} ({u.p},{u.q})", abs(spectra.residual_PE(spec, u, t)) / u.lam, 1e-5)

    def _limits(self, checks: _Checks, rng: np.random.Generator) -> None:
        pq42, pq22 = PQPair(p=4, q=2), PQPair(p=2, q=2)
        deltas = (1e-2, 1e-4, 1e-6)
        errors = [abs(2 * gelliptic.complete_K(pq42, 1 - d) - math.pi) for d in deltas]
        checks.require("2K_42 error decreasing", errors[0] > errors[1] > errors[2])
        checks.add("2K_42(1 - 1e-6) vs pi", errors[2], 1e-2)
        growth = gelliptic.complete_K(pq22, 1 - 1e-6) - gelliptic.complete_K(pq22, 1 - 1e-2)
        checks.require("K_22 grows by >= 2", growth >= 2.0)
        checks.add("limit_K(4,2)", abs(gelliptic.limit_K(pq42) - math.pi / 2), 1e-10)

        grid = [float(t) for t in np.linspace(0.1, 1.1, 6)]
        for pq, limit in ((pq42, lambda t: math.sin(t)), (pq22, math.tanh)):
            ladder = [max(abs(gelliptic.sn_pq(pq, 1 - d, t) - limit(t)) for t in grid) for d in deltas]
            checks.require(f"sn ({pq.p},{pq.q}) -> limit monotonically", ladder[0] > ladder[1] > ladder[2])

        for p, q in ((2.0, 2.0), (3.0, 3.0)):
            spec = ProblemSpec(pq=PQPair(p=p, q=q), T=1.0)
            checks.add(f"Phi(0+) p=q={p}", abs(spectra.phi(spec, 1e-6) - spectra.phi_limits(spec.pq)[0]), 1e-8)
        spec = ProblemSpec(pq=pq42, T=1.0)
        checks.add("Phi(1-) p=4", abs(spectra.phi(spec, 1 - 1e-8) - spectra.phi_limits(pq42)[1]), 1e-3)

    def _round_trip(self, checks: _Checks, rng: np.random.Generator) -> None:
        for p, q in PQ_SWEEP:
            pq = PQPair(p=p, q=q)
            for t in rng.uniform(0.0, 0.95, 4) * 0.5 * gtrig.half_period(pq):
                t = float(t)
                checks.add(f"arcsin(sin) ({p},{q})", abs(gtrig.arcsin_pq(pq, gtrig.sin_pq(pq, t)) - t), 1e-9)
        for p, t_max in ((0.5, 20.0), (1.0, 5.0)):
            pq = PQPair(p=p, q=2)
            for t in rng.uniform(0.0, t_max, 4):
                t = float(t)
                checks.add(f"arcsin(sin) SUB p={p}", abs(gtrig.arcsin_pq(pq, gtrig.sin_pq(pq, t)) - t), 1e-9)

        for regime in ("p>q", "p=q", "p<q"):
            for _ in range(ROUND_TRIPS_PER_REGIME):
                p = float(rng.uniform(1.5, 4.0))
                q = {"p>q": p - float(rng.uniform(0.3, 1.0)), "p=q": p, "p<q": p + float(rng.uniform(0.5, 2.0))}[regime]
                q = max(q, 1.2)
                spec = ProblemSpec(pq=PQPair(p=p, q=q), T=float(rng.uniform(0.5, 5.0)))
                n = int(rng.integers(1, 4))
                k = self._modulus_away_from_minimum(spec, rng)
                lam = spectra.lambda_PE(spec.pq, spec.T, k, n)
                report = spectra.spectrum_at_lambda(spec.model_copy(update={"lam": lam}), n)
                found = [b.k if b.k is not None else b.ell for b in report.mode(n).branches if b.type == "interior"]
                error = min((abs(x - k) for x in found), default=math.inf)
                checks.add(f"k round trip {regime} (p={p:.3f}, q={q:.3f}, n={n})", error, 1e-8)

        spec = ProblemSpec(pq=PQPair(p=4, q=2), T=10.0)
        for n in (1, 2):
            tau = float(rng.uniform(0.1, 5.0))
            lam = spectra.lambda_flatcore(spec.pq, spec.T, tau, n)
            report = spectra.spectrum_at_lambda(spec.model_copy(update={"lam": lam}), n)
            found = [b.tau for b in report.mode(n).branches if b.type == "flatcore"]
            error = min((abs(x - tau) for x in found), default=math.inf)
            checks.add(f"tau round trip n={n}", error, 1e-8)

    @staticmethod
    def _modulus_away_from_minimum(spec: ProblemSpec, rng: np.random.Generator) -> float:
        k_star = spectra.lambda1_star(spec)[0] if spec.p < spec.q else None
        while True:
            k = float(rng.uniform(0.1, 0.9))
            if k_star is None or abs(k - k_star) > 0.1:
                return k

    def _regimes(self, checks: _Checks, rng: np.random.Generator) -> None:
        base = ProblemSpec(pq=PQPair(p=2, q=2), T=math.pi)
        for n in (1, 2, 3):
            for factor, empty in ((1.0, True), (1.0 - 1e-9, True), (1.0 + 1e-9, False)):
                report = spectra.spectrum_at_lambda(base.model_copy(update={"lam": n * n * factor}), n)
                checks.require(f"mode {n} empty iff lam <= {n * n} (x{factor})", report.mode(n).is_empty == empty)

        spec = ProblemSpec(pq=PQPair(p=2, q=4), T=1.0)
        k_star, lambda_1 = spectra.lambda1_star(spec)
        for n in (1, 2):
            lam = 1.5 * n**2 * lambda_1
            report = spectra.spectrum_at_lambda(spec.model_copy(update={"lam": lam}), n)
            branches = report.mode(n).branches
            ell = next((b.ell for b in branches if b.branch == "lower"), None)
            k = next((b.k for b in branches if b.branch == "upper"), None)
            checks.require(f"two roots straddle k_* (n={n})", ell is not None and k is not None and ell < k_star < k)
            if ell is not None and k is not None:
                target = spec.T / (2 * n) * (lam * spec.p_star / spec.q) ** (1 / spec.p)
                checks.add(f"Phi(ell) = Phi(k) (n={n})", abs(spectra.phi(spec, ell) - spectra.phi(spec, k)), 1e-9)
                checks.add(f"Phi(k) = target (n={n})", abs(spectra.phi(spec, k) - target), 1e-9)

        lam = 4.0 * lambda_1 * 3**2
        report = spectra.spectrum_at_lambda(spec.model_copy(update={"lam": lam}), 3)
        ells = [b.ell for m in report.modes for b in m.branches if b.branch == "lower"]
        if any(b <= a for a, b in zip(ells, ells[1:])):
            checks.notes.append(f"lower-branch moduli not increasing in j: {ells}")

        spec = ProblemSpec(pq=PQPair(p=3, q=2), T=1.0)
        lam = 0.5 * spectra.lambda_flatcore(spec.pq, spec.T, 0.0, 1)
        report = spectra.spectrum_at_lambda(spec.model_copy(update={"lam": lam}), 10)
        ks = [m.branches[0].k if m.branches else None for m in report.modes]
        checks.require("every mode has k_j (p>q)", all(k is not None for k in ks))
        if all(k is not None for k in ks):
            checks.require("k_j strictly decreasing (p>q)", all(b < a for a, b in zip(ks, ks[1:])))

    def _flat_core(self, checks: _Checks, rng: np.random.Generator) -> None:
        spec = ProblemSpec(pq=PQPair(p=4, q=2), T=10.0)
        for n in (1, 2, 3):
            tau = float(rng.uniform(0.5, 5.0))
            pauses = [float(x) for x in rng.dirichlet(np.ones(n)) * tau]
            u = spectra.eigen_PE_flatcore(spec, pauses, n)
            for left, right in u.core_intervals():
                values = [u(float(t)) for t in np.linspace(left, right, 5)]
                checks.require(f"u = +/-1 on core [{left:.3f}, {right:.3f}]", all(abs(v) == 1.0 for v in values))
            checks.add(f"u(0), u(T) n={n}", max(abs(u(0.0)), abs(u(spec.T))), 1e-10)
            expected = 2 * spec.q / spec.p_star * (n * math.pi / (spec.T - u.tau)) ** spec.p
            checks.add(f"Lam_{n}", abs(u.lam - expected) / expected, 1e-12)
            for t in _interior_samples(u, 8, rng):
                checks.add(f"residual n={n}", abs(spectra.residual_PE(spec, u, t)) / u.lam, 1e-5)

    def _corollary(self, checks: _Checks, rng: np.random.Generator) -> None:
        spec = ProblemSpec(pq=PQPair(p=4, q=2), T=math.pi)
        u = spectra.eigen_PE_flatcore(spec, [0.0], 1)
        mu = spectra.corollary_halfp(spec, u)
        checks.add("p/2 eigenvalue = 1", abs(mu - 1.0), 1e-12)
        reference = spectra.eigen_E(ProblemSpec(pq=spec.pq.halved(), T=spec.T - u.tau), 1.0, 1)
        checks.add("p/2 eigenvalue vs eigen_E", abs(mu - reference.lam), 1e-10)
        for t in _interior_samples(u, 10, rng):
            checks.add("p/2 residual", abs(spectra.residual_halfp(spec, u, t)) / mu, 1e-5)

        spec = ProblemSpec(pq=PQPair(p=3, q=2), T=6.0)
        u = spectra.eigen_PE_flatcore(spec, [0.4, 0.8], 2)
        mu = spectra.corollary_halfp(spec, u)
        for t in _interior_samples(u, 10, rng):
            if abs(u(t)) < 1.0:
                checks.add("p/2 residual (p=3)", abs(spectra.residual_halfp(spec, u, t)) / mu, 1e-5)


def run_verification(seed: int = 0, only: Optional[Sequence[str]] = None) -> VerificationReport:
    return VerificationRunner(seed).run(only)
