"""Problem instance and Ramanujan-sum schemas."""

import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator


class Constraint(BaseModel):
    """The instance (n; a1,q1; a2,q2; a3,q3).

    Each residue is reduced modulo its modulus and coprime to it, so
    a_i = 0 is only possible when q_i = 1.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(..., description="Target integer")
    a1: int = Field(0, ge=0)
    q1: int = Field(1, ge=1)
    a2: int = Field(0, ge=0)
    q2: int = Field(1, ge=1)
    a3: int = Field(0, ge=0)
    q3: int = Field(1, ge=1)

    @model_validator(mode="after")
    def _reduced_residues(self) -> "Constraint":
        for index, (a, q) in enumerate(self.pairs, start=1):
            if a >= q:
                msg = f"a{index}={a} is not reduced modulo q{index}={q}"
                raise ValueError(msg)
            if math.gcd(a, q) != 1:
                msg = f"gcd(a{index}, q{index}) = gcd({a}, {q}) != 1"
                raise ValueError(msg)
        return self

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """((a1, q1), (a2, q2), (a3, q3))."""
        return (self.a1, self.q1), (self.a2, self.q2), (self.a3, self.q3)

    @property
    def moduli(self) -> tuple[int, int, int]:
        return self.q1, self.q2, self.q3

    @property
    def residues(self) -> tuple[int, int, int]:
        return self.a1, self.a2, self.a3

    @property
    def d(self) -> int:
        """gcd(q1, q2, q3)."""
        return math.gcd(self.q1, self.q2, self.q3)

    def permuted(self, order: tuple[int, int, int]) -> "Constraint":
        """Reorder the three (a, q) pairs; ``order`` holds 0-based indices."""
        pairs = self.pairs
        (a1, q1), (a2, q2), (a3, q3) = (pairs[i] for i in order)
        return Constraint(n=self.n, a1=a1, q1=q1, a2=a2, q2=q2, a3=a3, q3=q3)


class ComplexValue(BaseModel):
    """A complex number in output-friendly form."""

    re: float
    im: float

    @classmethod
    def of(cls, z: complex) -> "ComplexValue":
        return cls(re=z.real, im=z.imag)

    def to_complex(self) -> complex:
        return complex(self.re, self.im)

    def is_real(self, tolerance: float = 1e-9) -> bool:
        """|im| <= tolerance * max(1, |re|)."""
        return abs(self.im) <= tolerance * max(1.0, abs(self.re))


class BMethod(str, Enum):
    """Evaluation route for b(q)."""

    DEFINITIONAL = "definitional"
    EULER = "euler"
    CROSSCHECK = "crosscheck"


class RamanujanRow(BaseModel):
    """One line of the ``ramanujan`` command output."""

    q: int
    b_re: float
    b_im: float
    lam: float
