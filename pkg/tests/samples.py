"""
Shared parameter sets and reference values for the tests.
"""
import math

# (p, q) pairs spanning p < 2, p = 2, p > 2 and q < p, q = p, q > p
PQ_SWEEP = [(1.5, 1.2), (1.5, 3.0), (2.0, 2.0), (2.0, 4.0), (3.0, 2.0), (4.0, 4.0)]

MODULI = [0.0, 0.5, 0.9]

# pairs below p = 1 where sin_pq saturates instead of oscillating
SUB_PAIRS = [(0.5, 2.0), (1.0, 2.0), (1.0, 3.0)]

PI_22 = math.pi
K_22_HALF = 1.68575035481260  # K(0.5) for the classical Jacobi functions


def pi_pp(p: float) -> float:
    """Closed form of the half-period when p = q."""
    return 2.0 * math.pi / (p * math.sin(math.pi / p))


FLATCORE_T = 10.0
FLATCORE_PQ = (4.0, 2.0)
