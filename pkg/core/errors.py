"""
Error types raised by the numerical and spectral services.

All of them derive from ValueError so callers can treat any of them, and
pydantic validation failures, as bad input.
"""


class GEllipticError(ValueError):
    """Base class for library errors."""


class DomainError(GEllipticError):
    """An argument lies outside the domain of the requested function."""

    def __init__(self, detail: str):
        super().__init__(f"domain: {detail}")


class DivergentError(GEllipticError):
    """The requested quantity diverges (SUB regime endpoints, K_pq with p <= 1)."""

    def __init__(self, detail: str):
        super().__init__(f"divergent: {detail}")


class QuadratureError(GEllipticError):
    """Adaptive quadrature did not reach the requested tolerance."""

    def __init__(self, detail: str):
        super().__init__(f"quadrature failure: {detail}")


class NonIntegrableError(GEllipticError):
    """A declared endpoint exponent is >= 1."""

    def __init__(self, detail: str):
        super().__init__(f"non-integrable singularity: {detail}")


class BracketError(GEllipticError):
    """The target value is not bracketed by the function values at the ends."""

    def __init__(self, detail: str):
        super().__init__(f"bracket failure: {detail}")


class MinimizationError(GEllipticError):
    def __init__(self, detail: str):
        super().__init__(f"minimization failure: {detail}")


class NearDivergentModulusError(GEllipticError):
    """K_pq(k) would exceed the representable limit for this modulus."""

    def __init__(self, detail: str):
        super().__init__(f"near-divergent modulus: {detail}")


class RegimeError(GEllipticError):
    """The operation is not defined in the (p, q) regime of the problem."""


class NearSingularSampleError(GEllipticError):
    def __init__(self, detail: str):
        super().__init__(f"near-singular sample point: {detail}")
