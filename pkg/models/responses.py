import math
from typing import Any, Callable, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from models.domain import EigenKind


class ConstantResponse(BaseModel):
    """Dumped with exclude_unset, so exactly one key appears."""

    pi_pq: Optional[float] = None
    K_pq: Optional[float] = None


class FunctionTrace(BaseModel):
    meta: Dict[str, Any]
    t: List[float]
    u: List[float]

    @model_validator(mode="after")
    def _ordered(self) -> "FunctionTrace":
        if len(self.t) != len(self.u):
            raise ValueError("t and u columns differ in length")
        if any(b <= a for a, b in zip(self.t, self.t[1:])):
            raise ValueError("t must be strictly increasing")
        return self


class EigenSolution(BaseModel):
    """Closed-form eigenfunction descriptor; call it to evaluate u(t)."""

    model_config = ConfigDict(frozen=True)

    kind: EigenKind
    n: int = Field(ge=1)
    p: float
    q: float
    T: float
    lam: float
    amplitude: float
    modulus: Optional[float] = None
    pauses: List[float] = Field(default_factory=list)
    breakpoints: List[float] = Field(default_factory=list)
    singular_points: List[float] = Field(default_factory=list, exclude=True)
    evaluator: Callable[[float], float] = Field(exclude=True, repr=False)
    derivative: Callable[[float], float] = Field(exclude=True, repr=False)

    @model_validator(mode="after")
    def _kind_invariants(self) -> "EigenSolution":
        if self.kind is EigenKind.PE_INTERIOR:
            if self.modulus is None or not 0 < self.amplitude < 1:
                raise ValueError("interior (PE) solutions need a modulus and 0 < R < 1")
        if self.kind is EigenKind.PE_FLATCORE:
            if len(self.pauses) != self.n or sum(self.pauses) >= self.T:
                raise ValueError("flat-core solutions need n pauses summing to less than T")
        return self

    def __call__(self, t: float) -> float:
        return self.evaluator(t)

    @property
    def tau(self) -> float:
        return math.fsum(self.pauses)

    def core_intervals(self) -> List[Tuple[float, float]]:
        """Closed intervals on which u is identically +1 or -1 (flat-core kind only)."""
        if self.kind is not EigenKind.PE_FLATCORE:
            return []
        half = (self.T - self.tau) / (2 * self.n)
        return [
            (self.breakpoints[j - 1] + half, self.breakpoints[j] - half)
            for j in range(1, self.n + 1)
        ]


class IVPSolution(BaseModel):
    """Solution of the initial value problem u(0)=0, u'(0)=alpha."""

    model_config = ConfigDict(frozen=True)

    p: float
    q: float
    lam: float
    alpha: float
    R: float
    modulus: Optional[float] = None
    omega: float
    evaluator: Callable[[float], float] = Field(exclude=True, repr=False)
    derivative: Callable[[float], float] = Field(exclude=True, repr=False)

    def __call__(self, t: float) -> float:
        return self.evaluator(t)


class BranchReport(BaseModel):
    type: Literal["interior", "flatcore"]
    branch: Literal["upper", "lower", "degenerate", "family", "unique"]
    k: Optional[float] = None
    ell: Optional[float] = None
    R: Optional[float] = None
    tau: Optional[float] = None
    pauses: Optional[List[float]] = None
    family: Optional[str] = None
    lambda_check: Optional[float] = None


class ModeReport(BaseModel):
    n: int
    branches: List[BranchReport] = Field(default_factory=list)
    unresolved: bool = False

    @property
    def is_empty(self) -> bool:
        return not self.branches


class SpectrumThresholds(BaseModel):
    lambda_1: Optional[float] = None
    k_star: Optional[float] = None
    onsets: List[float] = Field(default_factory=list)
    flatcore_onsets: List[float] = Field(default_factory=list)


class SpectrumReport(BaseModel):
    meta: Dict[str, Any]
    thresholds: SpectrumThresholds
    modes: List[ModeReport]

    def mode(self, n: int) -> ModeReport:
        return self.modes[n - 1]


class BranchPoint(BaseModel):
    lam: float
    amplitude: float
    k: Optional[float] = None
    tau: Optional[float] = None


class VerificationGroupResult(BaseModel):
    name: str
    passed: bool
    checks: int
    max_residual: float
    detail: str = ""


class VerificationReport(BaseModel):
    seed: int
    groups: List[VerificationGroupResult]

    @property
    def passed(self) -> bool:
        return all(group.passed for group in self.groups)


class BranchDiagram(BaseModel):
    meta: Dict[str, Any]
    points: List[BranchPoint]
