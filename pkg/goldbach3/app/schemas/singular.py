"""Singular series and admissibility schemas."""

from enum import Enum

from pydantic import BaseModel, Field


class CaseLabel(str, Enum):
    """How a prime interacts with (n; q_i, a_i).

    FINITE_PART: p divides all three moduli.
    A / B: p divides no modulus; p | n or not.
    C / D: p divides exactly one modulus q_j; p | n - a_j or not.
    E / F: p divides exactly two moduli q_j, q_k; p | n - a_j - a_k or not.
    """

    FINITE_PART = "FINITE_PART"
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"
    F = "F"


class ZeroReasonKind(str, Enum):
    GENERAL_CONDITION_FAILED = "GENERAL_CONDITION_FAILED"
    E_CASE = "E_CASE"
    P2_VANISHING = "P2_VANISHING"


class ZeroReason(BaseModel):
    """Why the singular series vanishes; ``prime`` is None for the congruence."""

    kind: ZeroReasonKind
    prime: int | None = None

    def __str__(self) -> str:
        if self.prime is None:
            return self.kind.value
        return f"{self.kind.value}({self.prime})"


class PrimeCase(BaseModel):
    """Classification of one prime with its local Euler factor.

    ``witness`` lists the 1-based indices j (and k) of the moduli p divides.
    """

    p: int
    label: CaseLabel
    witness: list[int] = Field(default_factory=list)
    factor: float


class SingularSeriesValue(BaseModel):
    """Rigorous enclosure [lower, upper] of the singular series."""

    lower: float
    upper: float
    finite_part: float
    pmax: int
    zero_reason: ZeroReason | None = None
    cases: list[PrimeCase] = Field(default_factory=list)

    @property
    def midpoint(self) -> float:
        return (self.lower + self.upper) / 2

    @property
    def width(self) -> float:
        return self.upper - self.lower


class PartialSeries(BaseModel):
    """Σ_{q<=Q} λ(q), or a refusal when the series is 0 by definition."""

    Q: int
    value: float
    refused: bool = False
    reason: str | None = None
    tail_bound: float | None = None


class AdmissibilityVerdict(BaseModel):
    """Whether a triple is admissible, with the failing prime otherwise."""

    admissible: bool
    reason: ZeroReason | None = None
    prime: int | None = None
    label: CaseLabel | None = None


class ConstructionResult(BaseModel):
    """Residues produced by the admissible-triple construction."""

    n: int
    q1: int | None = None
    a1: int | None = None
    q2: int
    a2: int
    q3: int
    a3: int
