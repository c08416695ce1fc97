"""
Generalized trigonometric functions sin_pq, cos_pq, arcsin_pq and the half-period pi_pq.

arcsin_pq(sigma) is the integral of (1 - s^q)^(-1/p) from 0 to sigma. For p > 1
(SUPER regime) it reaches pi_pq / 2 at sigma = 1 and sin_pq is extended to an odd,
2 pi_pq periodic function. For 0 < p <= 1 (SUB regime) the integral diverges at
sigma = 1 and sin_pq is an odd increasing function saturating at +/-1.
"""
import logging
import math
from functools import lru_cache
from typing import Tuple

from scipy import special

from core.config import inversion_tolerance
from core.errors import DivergentError, DomainError
from models.domain import HalfPeriod, PQPair, Regime
from services.numerics import from_log_gap, integrate_log_gap, invert_monotone, to_log_gap

logger = logging.getLogger(__name__)

# beyond this log-gap 1 - exp(-v) rounds to 1.0
_SATURATION_GAP = -math.log(2.0**-53)
_BELOW_ONE = math.nextafter(1.0, 0.0)


@lru_cache(maxsize=None)
def _half_period(p: float, q: float) -> float:
    if p <= 1:
        return math.inf
    value = 2.0 / q * float(special.beta(1.0 / q, 1.0 - 1.0 / p))
    logger.debug("pi_pq(p=%s, q=%s) = %.17g", p, q, value)
    return value


def pi_pq(pq: PQPair) -> HalfPeriod:
    return HalfPeriod(value=_half_period(pq.p, pq.q))


def half_period(pq: PQPair) -> float:
    """pi_pq as a float; math.inf in the SUB regime."""
    return _half_period(pq.p, pq.q)


def _check_sigma(pq: PQPair, sigma: float) -> None:
    if not 0.0 <= sigma <= 1.0:
        raise DomainError(f"arcsin_pq needs sigma in [0, 1], got {sigma}")
    if sigma == 1.0 and pq.regime is Regime.SUB:
        raise DivergentError(f"arcsin_pq(1) is infinite for p={pq.p} <= 1")


def _arcsin_super(p: float, q: float, sigma: float) -> float:
    if sigma == 1.0:
        return 0.5 * _half_period(p, q)
    a, b = 1.0 / q, 1.0 - 1.0 / p
    return float(special.beta(a, b) * special.betainc(a, b, sigma**q)) / q


def _sub_integrand(p: float, q: float, kq: float = 0.0):
    """((1 - s^q)(1 - kq s^q))^(-1/p) as a function of the gap 1 - s."""

    def g(gap: float) -> float:
        if gap >= 1.0:
            return 1.0
        log_s = math.log1p(-gap)
        one_minus_sq = -math.expm1(q * log_s)
        return (one_minus_sq * (1.0 - kq * math.exp(q * log_s))) ** (-1.0 / p)

    return g


def sub_arc(p: float, q: float, kq: float, sigma: float) -> float:
    """Arc integral with the (1 - kq s^q) weight for 0 < p <= 1 and sigma < 1."""
    return integrate_log_gap(_sub_integrand(p, q, kq), to_log_gap(sigma))


def sub_inverse(p: float, q: float, kq: float, t: float) -> float:
    """Inverse of sub_arc on [0, inf); saturates at the largest double below 1."""
    if t <= 0.0:
        return 0.0
    g = _sub_integrand(p, q, kq)

    def arc_in_gap(v: float) -> float:
        return integrate_log_gap(g, v)

    v_hi = 1.0
    while arc_in_gap(v_hi) < t:
        if v_hi >= _SATURATION_GAP:
            return _BELOW_ONE
        v_hi = min(2.0 * v_hi, _SATURATION_GAP)
    v = invert_monotone(arc_in_gap, t, 0.0, v_hi, inversion_tolerance())
    return min(from_log_gap(v), _BELOW_ONE)


def arcsin_pq(pq: PQPair, sigma: float) -> float:
    _check_sigma(pq, sigma)
    if sigma == 0.0:
        return 0.0
    if pq.regime is Regime.SUPER:
        return _arcsin_super(pq.p, pq.q, sigma)
    return sub_arc(pq.p, pq.q, 0.0, sigma)


def _base_sin(pq: PQPair, x: float) -> float:
    """Inverse of arcsin_pq on [0, pi_pq / 2] (SUPER) or [0, inf) (SUB)."""
    if x <= 0.0:
        return 0.0
    if pq.regime is Regime.SUB:
        return sub_inverse(pq.p, pq.q, 0.0, x)
    if x >= 0.5 * half_period(pq):
        return 1.0
    return invert_monotone(
        lambda s: _arcsin_super(pq.p, pq.q, s), x, 0.0, 1.0, inversion_tolerance()
    )


def _base_cos(pq: PQPair, x: float) -> float:
    s = _base_sin(pq, x)
    if pq.regime is Regime.SUB and s > 0.5:
        # s - 1 is exact here, so 1 - s^q keeps its leading digits
        one_minus_sq = -math.expm1(pq.q * math.log1p(s - 1.0))
    else:
        one_minus_sq = 1.0 - s**pq.q
    return max(one_minus_sq, 0.0) ** (1.0 / pq.p)


def reduce_quarter(t: float, half: float) -> Tuple[int, float]:
    """Split t >= 0 into (quarter index 0..3, distance to the nearest zero/peak of that quarter)."""
    period = 2.0 * half
    r = t - period * math.floor(t / period)
    if r <= 0.5 * half:
        return 0, r
    if r <= half:
        return 1, half - r
    if r <= 1.5 * half:
        return 2, r - half
    return 3, period - r


def sin_pq(pq: PQPair, t: float) -> float:
    if t < 0.0:
        return -sin_pq(pq, -t)
    if pq.regime is Regime.SUB:
        return _base_sin(pq, t)
    quarter, x = reduce_quarter(t, half_period(pq))
    value = _base_sin(pq, x)
    return value if quarter in (0, 1) else -value


def cos_pq(pq: PQPair, t: float) -> float:
    """Derivative of the extended sin_pq; equals (1 - sin_pq^q)^(1/p) on [0, pi_pq / 2]."""
    t = abs(t)
    if pq.regime is Regime.SUB:
        return _base_cos(pq, t)
    quarter, x = reduce_quarter(t, half_period(pq))
    value = _base_cos(pq, x)
    return value if quarter in (0, 3) else -value
