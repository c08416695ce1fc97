"""
Generalized Jacobian elliptic functions sn_pq, cn_pq, dn_pq, am_pq and the complete
integral K_pq(k).

arcsn_pq(sigma, k) integrates ((1 - s^q)(1 - k^q s^q))^(-1/p) from 0 to sigma and
K_pq(k) = arcsn_pq(1, k). In the SUPER regime sn_pq is extended to an odd 4K periodic
function with sn(t) = sn(2K - t); in the SUB regime it is odd and saturates at +/-1.

Integrands are written in terms of the gap e = 1 - s so that the factors 1 - s^q
and 1 - k^q s^q keep their leading digits as s -> 1 and k -> 1.
"""
import logging
import math
from functools import lru_cache
from typing import List, Union

from core.config import inversion_tolerance
from core.errors import DivergentError, DomainError, NearDivergentModulusError, QuadratureError
from models.domain import Modulus, PQPair, QuadratureSpec, Regime
from services.gtrig import arcsin_pq, reduce_quarter, sin_pq, sub_arc, sub_inverse
from services.numerics import integrate, invert_monotone

logger = logging.getLogger(__name__)

K_LIMIT = 1e8

ModulusLike = Union[Modulus, float]


def _as_modulus(k: ModulusLike) -> Modulus:
    return k if isinstance(k, Modulus) else Modulus(k=k)


def _one_minus_pow(q: float, gap: float) -> float:
    """1 - (1 - gap)^q without cancellation."""
    return -math.expm1(q * math.log1p(-gap))


def _decade_edges(c: float, upper: float) -> List[float]:
    """0, c, 10c, 100c, ... below upper, then upper; resolves the knee of the integrand at e ~ c."""
    edges = [0.0]
    edge = c
    while edge < upper:
        edges.append(edge)
        edge *= 10.0
    edges.append(upper)
    return edges


class EllipticContext:
    """sn/cn/dn for one (p, q, k); K is computed once at construction."""

    def __init__(self, pq: PQPair, k: ModulusLike):
        self.pq = pq
        self.modulus = _as_modulus(k)
        self.kq = self.k**pq.q
        if self.k > 0.5:
            self.one_minus_kq = -math.expm1(pq.q * math.log1p(self.k - 1.0))
        else:
            self.one_minus_kq = 1.0 - self.kq
        if self.one_minus_kq <= 0.0:
            raise NearDivergentModulusError(f"k={self.k} gives k^q = 1 in double precision")
        self._spec = QuadratureSpec(left_exponent=1.0 / pq.p) if pq.regime is Regime.SUPER else None
        self.K = self._complete() if pq.regime is Regime.SUPER else math.inf

    @property
    def k(self) -> float:
        return self.modulus.k

    def _integrand(self, s: float) -> float:
        p, q = self.pq.p, self.pq.q
        return ((1.0 - s**q) * (1.0 - self.kq * s**q)) ** (-1.0 / p)

    def _gap_integrand(self, gap: float) -> float:
        if gap >= 1.0:
            return 1.0
        p, q = self.pq.p, self.pq.q
        one_minus_sq = _one_minus_pow(q, gap)
        # 1 - kq s^q = (1 - kq) + kq (1 - s^q)
        return (one_minus_sq * (self.one_minus_kq + self.kq * one_minus_sq)) ** (-1.0 / p)

    def _tail(self, gap: float) -> float:
        """Integral of the arc integrand over s in [1 - gap, 1]."""
        edges = _decade_edges(self.one_minus_kq, gap) if self.one_minus_kq < 0.1 else [0.0, gap]
        total = integrate(self._gap_integrand, edges[0], edges[1], self._spec)
        for lo, hi in zip(edges[1:], edges[2:]):
            total += integrate(self._gap_integrand, lo, hi)
        return total

    def _complete(self) -> float:
        try:
            value = self._tail(1.0)
        except QuadratureError as exc:
            if self.pq.p <= 2:
                raise NearDivergentModulusError(f"K_pq diverges as k -> 1 for p={self.pq.p}: {exc}") from exc
            raise
        if value > K_LIMIT:
            raise NearDivergentModulusError(f"K_pq(k={self.k}) = {value:.3e} exceeds {K_LIMIT:.0e}")
        logger.debug("K_pq(p=%s, q=%s, k=%s) = %.17g", self.pq.p, self.pq.q, self.k, value)
        return value

    def arcsn(self, sigma: float) -> float:
        if not 0.0 <= sigma <= 1.0:
            raise DomainError(f"arcsn_pq needs sigma in [0, 1], got {sigma}")
        if self.pq.regime is Regime.SUB:
            if sigma == 1.0:
                raise DivergentError(f"arcsn_pq(1) is infinite for p={self.pq.p} <= 1")
            return sub_arc(self.pq.p, self.pq.q, self.kq, sigma)
        if sigma == 0.0:
            return 0.0
        if sigma == 1.0:
            return self.K
        if sigma <= 0.5:
            return integrate(self._integrand, 0.0, sigma)
        return self.K - self._tail(1.0 - sigma)

    def _base_sn(self, x: float) -> float:
        if x <= 0.0:
            return 0.0
        if self.pq.regime is Regime.SUB:
            return sub_inverse(self.pq.p, self.pq.q, self.kq, x)
        if x >= self.K:
            return 1.0
        return invert_monotone(self.arcsn, x, 0.0, 1.0, inversion_tolerance())

    def _one_minus_snq(self, s: float) -> float:
        if s > 0.5:
            return _one_minus_pow(self.pq.q, 1.0 - s)
        return 1.0 - s**self.pq.q

    def sn(self, t: float) -> float:
        if t < 0.0:
            return -self.sn(-t)
        if self.pq.regime is Regime.SUB:
            return self._base_sn(t)
        quarter, x = reduce_quarter(t, 2.0 * self.K)
        value = self._base_sn(x)
        return value if quarter in (0, 1) else -value

    def cn(self, t: float) -> float:
        t = abs(t)
        if self.pq.regime is Regime.SUB:
            return self._one_minus_snq(self._base_sn(t)) ** (1.0 / self.pq.p)
        quarter, x = reduce_quarter(t, 2.0 * self.K)
        value = max(self._one_minus_snq(self._base_sn(x)), 0.0) ** (1.0 / self.pq.p)
        return value if quarter in (0, 3) else -value

    def sn_derivative(self, t: float) -> float:
        """cn(t) dn(t) from a single inversion."""
        t_abs = abs(t)
        p = self.pq.p
        if self.pq.regime is Regime.SUB:
            s = self._base_sn(t_abs)
            sign = 1.0
        else:
            quarter, x = reduce_quarter(t_abs, 2.0 * self.K)
            s = self._base_sn(x)
            sign = 1.0 if quarter in (0, 3) else -1.0
        cn = max(self._one_minus_snq(s), 0.0) ** (1.0 / p)
        dn = (1.0 - self.kq * s**self.pq.q) ** (1.0 / p)
        return sign * cn * dn

    def dn(self, t: float) -> float:
        s = abs(self.sn(t))
        return (1.0 - self.kq * s**self.pq.q) ** (1.0 / self.pq.p)

    def am(self, t: float) -> float:
        if not 0.0 <= t <= self.K:
            raise DomainError(f"am_pq needs t in [0, K={self.K}], got {t}")
        return arcsin_pq(self.pq, self.sn(t))


@lru_cache(maxsize=256)
def _cached_context(p: float, q: float, k: float) -> EllipticContext:
    return EllipticContext(PQPair(p=p, q=q), Modulus(k=k))


def elliptic_context(pq: PQPair, k: ModulusLike) -> EllipticContext:
    return _cached_context(pq.p, pq.q, _as_modulus(k).k)


def arcsn_pq(pq: PQPair, k: ModulusLike, sigma: float) -> float:
    return elliptic_context(pq, k).arcsn(sigma)


def complete_K(pq: PQPair, k: ModulusLike) -> float:
    if pq.regime is Regime.SUB:
        raise DivergentError(f"K_pq is infinite for p={pq.p} <= 1")
    return elliptic_context(pq, k).K


def sn_pq(pq: PQPair, k: ModulusLike, t: float) -> float:
    return elliptic_context(pq, k).sn(t)


def cn_pq(pq: PQPair, k: ModulusLike, t: float) -> float:
    return elliptic_context(pq, k).cn(t)


def dn_pq(pq: PQPair, k: ModulusLike, t: float) -> float:
    return elliptic_context(pq, k).dn(t)


def am_pq(pq: PQPair, k: ModulusLike, t: float) -> float:
    return elliptic_context(pq, k).am(t)


def limit_K(pq: PQPair) -> float:
    """lim K_pq(k) as k -> 1: pi_{p/2,q} / 2 for p > 2, infinite otherwise.

    Evaluated by quadrature of (1 - s^q)^(-2/p), whose merged endpoint exponent is
    integrable only for p > 2.
    """
    if pq.p <= 2:
        return math.inf
    p, q = pq.p, pq.q

    def merged(gap: float) -> float:
        return 1.0 if gap >= 1.0 else _one_minus_pow(q, gap) ** (-2.0 / p)

    return integrate(merged, 0.0, 1.0, QuadratureSpec(left_exponent=2.0 / p))


def limit_sn(pq: PQPair, t: float) -> float:
    """lim sn_pq(t, k) as k -> 1, namely sin_{p/2,q}(t); for p <= 2 that sine saturates at 1."""
    return sin_pq(pq.halved(), t)