"""
Classical (p = q = 2) Jacobi elliptic functions by the arithmetic-geometric mean and
descending Landen transformation. Independent of the quadrature code paths; used as
a reference by the verification suite and the tests.
"""
import math
from typing import List, NamedTuple, Tuple

from core.errors import DomainError

_MAX_STEPS = 40


class JacobiValues(NamedTuple):
    sn: float
    cn: float
    dn: float
    am: float


def _agm_sequence(k: float) -> Tuple[List[float], List[float]]:
    if not 0.0 <= k < 1.0:
        raise DomainError(f"modulus must lie in [0, 1), got {k}")
    a, b, c = 1.0, math.sqrt((1.0 - k) * (1.0 + k)), k
    a_seq, c_seq = [a], [c]
    for _ in range(_MAX_STEPS):
        if abs(c) <= 2.2e-16 * a:
            break
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        a_seq.append(a)
        c_seq.append(c)
    return a_seq, c_seq


def agm_K(k: float) -> float:
    """Complete elliptic integral of the first kind, K(k) = pi / (2 AGM(1, k'))."""
    a_seq, _ = _agm_sequence(k)
    return math.pi / (2.0 * a_seq[-1])


def jacobi_elliptic(u: float, k: float) -> JacobiValues:
    a_seq, c_seq = _agm_sequence(k)
    n = len(a_seq) - 1
    phi = 2.0**n * a_seq[n] * u
    for j in range(n, 0, -1):
        phi = 0.5 * (phi + math.asin(c_seq[j] / a_seq[j] * math.sin(phi)))
    sn, cn = math.sin(phi), math.cos(phi)
    return JacobiValues(sn=sn, cn=cn, dn=math.sqrt(1.0 - (k * sn) ** 2), am=phi)
