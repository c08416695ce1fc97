"""
Validated input types: tolerances, exponent pairs, moduli and problem descriptions.
"""
from enum import Enum
from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from core.errors import DomainError, NonIntegrableError


class Regime(str, Enum):
    """SUPER: p > 1, finite half-period. SUB: 0 < p <= 1, sin_pq saturates at 1."""

    SUPER = "SUPER"
    SUB = "SUB"


class EigenKind(str, Enum):
    E_INTERIOR = "E_INTERIOR"
    PE_INTERIOR = "PE_INTERIOR"
    PE_FLATCORE = "PE_FLATCORE"


class Tolerance(BaseModel):
    model_config = ConfigDict(frozen=True)

    rel: float = Field(default=1e-12, gt=0)
    abs: float = Field(default=1e-12, gt=0)
    max_iter: int = Field(default=200, ge=1)


class QuadratureSpec(BaseModel):
    """Declared algebraic endpoint singularities, integrand ~ (s - a)^(-left_exponent)."""

    model_config = ConfigDict(frozen=True)

    left_exponent: float = 0.0
    right_exponent: float = 0.0
    tol: Tolerance = Field(default_factory=Tolerance)

    @model_validator(mode="after")
    def _integrable(self) -> "QuadratureSpec":
        for side, exponent in (("left", self.left_exponent), ("right", self.right_exponent)):
            if exponent >= 1:
                raise NonIntegrableError(f"{side} endpoint exponent {exponent} >= 1")
        return self


class PQPair(BaseModel):
    model_config = ConfigDict(frozen=True)

    p: float = Field(gt=0, allow_inf_nan=False)
    q: float = Field(gt=0, allow_inf_nan=False)

    @property
    def regime(self) -> Regime:
        # p = 1 belongs to the SUB branch
        return Regime.SUPER if self.p > 1 else Regime.SUB

    @property
    def p_star(self) -> float:
        if self.p <= 1:
            raise DomainError(f"conjugate exponent p* needs p > 1, got p={self.p}")
        return self.p / (self.p - 1)

    def halved(self) -> "PQPair":
        """The pair (p/2, q) governing the k -> 1 limit and the flat-core humps."""
        return PQPair(p=self.p / 2, q=self.q)


class HalfPeriod(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: float

    @model_validator(mode="after")
    def _positive(self) -> "HalfPeriod":
        if not self.value > 0:
            raise DomainError(f"half-period must be positive, got {self.value}")
        return self

    @property
    def is_finite(self) -> bool:
        return self.value != float("inf")


class Modulus(BaseModel):
    model_config = ConfigDict(frozen=True)

    k: float = Field(ge=0, lt=1)


class ProblemSpec(BaseModel):
    """(E_pq) / (PE_pq) on (0, T); lam is only needed by the inverse queries."""

    model_config = ConfigDict(frozen=True)

    pq: PQPair
    T: float = Field(gt=0, allow_inf_nan=False)
    lam: Optional[float] = Field(default=None, gt=0, allow_inf_nan=False)

    @model_validator(mode="after")
    def _exponents(self) -> "ProblemSpec":
        if self.pq.p <= 1 or self.pq.q <= 1:
            raise DomainError(f"eigenvalue problems need p > 1 and q > 1, got p={self.pq.p}, q={self.pq.q}")
        return self

    @property
    def p(self) -> float:
        return self.pq.p

    @property
    def q(self) -> float:
        return self.pq.q

    @property
    def p_star(self) -> float:
        return self.pq.p_star

    def require_lambda(self) -> float:
        if self.lam is None:
            raise DomainError("this query needs lambda")
        return self.lam


class OutputSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    format: Literal["csv", "json"] = "csv"
    samples: int = Field(default=201, ge=2)
    path: Optional[Path] = None
