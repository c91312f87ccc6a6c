"""Schemas for the Montgomery identity and sieve ratio explorers."""

from dataclasses import dataclass

import numpy as np
from pydantic import BaseModel


@dataclass(frozen=True)
class WeightSequence:
    """Complex weights b_1..b_n, stored 0-based (values[m - 1] = b_m)."""

    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=np.complex128)
        if values.ndim != 1 or values.size < 1:
            msg = "weight sequence must be a non-empty 1-d array"
            raise ValueError(msg)
        if not np.all(np.isfinite(values)):
            msg = "weight sequence must be finite"
            raise ValueError(msg)
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return int(self.values.size)

    def scaled(self, c: complex) -> "WeightSequence":
        return WeightSequence(self.values * c)


class MontgomeryCheck(BaseModel):
    """(1/d) Σ_h |f_h(d)|^2 against Σ_{(a,d)=1} |T(a/d)|^2."""

    d: int
    lhs: float
    rhs: float


class SieveRatioReport(BaseModel):
    """Ratio of the exact left side to the two right-hand terms.

    e1 and e2 split lhs by τ(q) > H and τ(q) <= H.
    """

    n: int
    Q: int
    H: float
    lhs: float
    rhs1: float
    rhs2: float
    ratio: float
    e1: float
    e2: float
    cauchy_schwarz: float
    seed: int | None = None


class LargeSieveCheck(BaseModel):
    """Σ_{d<=Q} Σ_{(a,d)=1} |T(a/d)|^2 <= (n - 1 + Q^2) Σ |b_m|^2."""

    Q: int
    lhs: float
    rhs: float

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs * (1 + 1e-12)
