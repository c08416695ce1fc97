"""
Numerical kernels: quadrature with algebraic endpoint singularities, bracketed
monotone inversion, unimodal minimization and central finite differences.

Every function here is pure; tolerances default to the process settings.
"""
import logging
import math
from typing import Callable, Optional, Tuple

from scipy import integrate as sci_integrate
from scipy import optimize

from core.config import MACHINE_EPS, default_tolerance
from core.errors import BracketError, DomainError, MinimizationError, QuadratureError
from models.domain import QuadratureSpec, Tolerance

logger = logging.getLogger(__name__)

RealFunction = Callable[[float], float]

# quad flags roundoff (ier 2) or bad behaviour (ier 3) on integrands that are fine
# after the substitution; accept those when the error estimate stays this close.
_ROUNDOFF_SLACK = 100.0


def integrate(f: RealFunction, a: float, b: float, spec: Optional[QuadratureSpec] = None) -> float:
    """Integrate f over [a, b], removing the declared endpoint singularities first.

    An endpoint with exponent alpha in (0, 1) is mapped by s = end -/+ w^(1/(1-alpha)),
    which turns (s - end)^(-alpha) ds into a bounded integrand in w. When both ends
    are singular the interval is split at its midpoint.
    """
    if spec is None:
        spec = QuadratureSpec(tol=default_tolerance())
    if not a < b:
        raise DomainError(f"integrate needs a < b, got a={a}, b={b}")

    left, right = spec.left_exponent, spec.right_exponent
    if left > 0 and right > 0:
        mid = 0.5 * (a + b)
        return _integrate_piece(f, a, mid, left, 0.0, spec.tol) + _integrate_piece(f, mid, b, 0.0, right, spec.tol)
    return _integrate_piece(f, a, b, left, right, spec.tol)


def _integrate_piece(f: RealFunction, a: float, b: float, left: float, right: float, tol: Tolerance) -> float:
    if right > 0:
        gamma = 1.0 / (1.0 - right)

        def g(w: float) -> float:
            s = b - w**gamma
            if s >= b:
                s = math.nextafter(b, a)
            return f(s) * gamma * w ** (gamma - 1.0)

        return _quad(g, 0.0, (b - a) ** (1.0 / gamma), tol)

    if left > 0:
        gamma = 1.0 / (1.0 - left)

        def g(w: float) -> float:
            s = a + w**gamma
            if s <= a:
                s = math.nextafter(a, b)
            return f(s) * gamma * w ** (gamma - 1.0)

        return _quad(g, 0.0, (b - a) ** (1.0 / gamma), tol)

    return _quad(f, a, b, tol)


def _quad(g: RealFunction, lo: float, hi: float, tol: Tolerance) -> float:
    try:
        result = sci_integrate.quad(
            g, lo, hi, epsabs=tol.abs, epsrel=tol.rel, limit=tol.max_iter, full_output=1
        )
    except (ValueError, ZeroDivisionError, OverflowError) as exc:
        raise QuadratureError(f"integrand could not be evaluated on [{lo}, {hi}]: {exc}") from exc

    value, abserr = result[0], result[1]
    if not math.isfinite(value):
        raise QuadratureError(f"non-finite value on [{lo}, {hi}]")
    if len(result) > 3:
        message = result[3]
        allowed = _ROUNDOFF_SLACK * max(tol.abs, tol.rel * abs(value))
        if abserr > allowed:
            raise QuadratureError(f"{message.strip()} (estimated error {abserr:.3e})")
        logger.warning("quadrature accepted despite: %s (estimated error %.3e)", message.strip(), abserr)
    return float(value)


def to_log_gap(sigma: float) -> float:
    """v = -log(1 - sigma): the coordinate in which integrals up to sigma -> 1 are resolved."""
    return -math.log1p(-sigma)


def from_log_gap(v: float) -> float:
    return -math.expm1(-v)


def integrate_log_gap(g: RealFunction, v_max: float, spec: Optional[QuadratureSpec] = None) -> float:
    """Integrate g(1 - s) over s in [0, 1 - exp(-v_max)], taken in v = -log(1 - s).

    g receives the gap 1 - s = exp(-v) without cancellation, so integrands that blow
    up non-integrably at s = 1 stay resolved however close the upper limit gets.
    """
    if v_max < 0.0:
        raise DomainError(f"log-gap limit must be >= 0, got {v_max}")
    if v_max == 0.0:
        return 0.0
    if spec is None:
        spec = QuadratureSpec(tol=default_tolerance())

    def h(v: float) -> float:
        gap = math.exp(-v)
        return g(gap) * gap

    return _quad(h, 0.0, v_max, spec.tol)


def integrate_near_one(g: RealFunction, sigma: float, spec: Optional[QuadratureSpec] = None) -> float:
    if not 0.0 <= sigma < 1.0:
        raise DomainError(f"integrate_near_one needs 0 <= sigma < 1, got {sigma}")
    return integrate_log_gap(g, to_log_gap(sigma), spec)


def invert_monotone(
    F: RealFunction, target: float, lo: float, hi: float, tol: Optional[Tolerance] = None
) -> float:
    """Solve F(x) = target for strictly monotone F on [lo, hi] with Brent's method."""
    tol = tol or default_tolerance()
    f_lo = F(lo) - target
    if f_lo == 0.0:
        return lo
    f_hi = F(hi) - target
    if f_hi == 0.0:
        return hi

    slack = tol.abs * max(1.0, abs(target))
    if f_lo * f_hi > 0:
        # target within tolerance of an end value still counts as bracketed
        if abs(f_lo) <= slack:
            return lo
        if abs(f_hi) <= slack:
            return hi
        raise BracketError(
            f"target {target!r} outside [F({lo!r}), F({hi!r})] = [{f_lo + target!r}, {f_hi + target!r}]"
        )

    root, info = optimize.brentq(
        lambda x: F(x) - target,
        lo,
        hi,
        xtol=tol.abs,
        rtol=max(tol.rel, 4 * MACHINE_EPS),
        maxiter=tol.max_iter,
        full_output=True,
        disp=False,
    )
    if not info.converged:
        raise BracketError(f"no convergence after {info.iterations} iterations ({info.flag})")
    return float(root)


def minimize_unimodal(
    F: RealFunction, lo: float, hi: float, tol: Optional[Tolerance] = None
) -> Tuple[float, float]:
    """Bounded Brent minimization of a function with a single interior minimum."""
    tol = tol or default_tolerance()
    result = optimize.minimize_scalar(
        F,
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": tol.abs, "maxiter": tol.max_iter},
    )
    if not result.success:
        raise MinimizationError(f"{result.message} on [{lo}, {hi}]")
    x_min = float(result.x)
    return x_min, float(F(x_min))


def fd_step(t: float, order: int = 1) -> float:
    if order == 1:
        return MACHINE_EPS ** (1.0 / 3.0) * max(1.0, abs(t))
    if order == 2:
        return MACHINE_EPS**0.25 * max(1.0, abs(t))
    raise DomainError(f"finite-difference order must be 1 or 2, got {order}")


def fd_derivative(f: RealFunction, t: float, order: int = 1) -> float:
    """Central finite difference of the first or second derivative."""
    h = fd_step(t, order)
    # make t +/- h exactly representable so the divisor matches the abscissae
    h = (t + h) - t
    if order == 1:
        return (f(t + h) - f(t - h)) / (2.0 * h)
    return (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h)
