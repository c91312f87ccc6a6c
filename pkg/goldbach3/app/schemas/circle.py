"""Exponential sum and arc geometry schemas."""

from dataclasses import dataclass

import numpy as np
from pydantic import BaseModel, Field


class Arc(BaseModel):
    """The open interval ]a/q - R/(qn), a/q + R/(qn)[.

    (a, q) = (1, 1) is the wrap arc around 0 ≡ 1.
    """

    a: int
    q: int = Field(..., ge=1)
    center: float
    halfwidth: float


class ArcSet(BaseModel):
    """Major arcs for parameters (n, R) on the domain [-R/n, 1 - R/n)."""

    n: int
    R: float
    arcs: list[Arc] = Field(default_factory=list)
    domain: tuple[float, float]

    def contains(self, alpha: float) -> bool:
        """Membership of ``alpha`` (reduced into the domain) in the major arcs."""
        lo, hi = self.domain
        alpha = lo + (alpha - lo) % 1.0
        return alpha < hi and any(
            abs(alpha - arc.center) < arc.halfwidth for arc in self.arcs
        )

    def disjoint(self) -> bool:
        """Whether no two arcs overlap."""
        spans = sorted(
            (arc.center - arc.halfwidth, arc.center + arc.halfwidth)
            for arc in self.arcs
        )
        return all(left[1] <= right[0] for left, right in zip(spans, spans[1:]))


@dataclass(frozen=True)
class ExpSumGrid:
    """S_1, S_2, S_3 and M sampled at α = k/N, k = 0..N-1."""

    n: int
    N: int
    s1: np.ndarray
    s2: np.ndarray
    s3: np.ndarray
    m: np.ndarray

    @property
    def alphas(self) -> np.ndarray:
        return np.arange(self.N) / self.N

    def s(self, j: int) -> np.ndarray:
        """Grid of S_j for j in {1, 2, 3}."""
        return (self.s1, self.s2, self.s3)[j - 1]


class ArcIntegral(BaseModel):
    """Grid split of J3 into major and minor arc parts."""

    j3: float
    j3_major: float
    j3_minor: float
    major_points: int
    minor_points: int


class MinorArcSup(BaseModel):
    """max |S_3(α)|^2 over minor-arc grid points; alpha is None if there are none."""

    value: float
    alpha: float | None = None


class ArcReport(BaseModel):
    """One row of the ``arcs`` command."""

    n: int
    R: float
    N: int
    j3: float
    j3_major: float
    j3_minor: float
    H_truncated: float
    main_term: float
    major_deviation: float
    j2_minor_max: float
    s3_minor_sup: float
