"""Arithmetic table and modular-arithmetic schemas."""

from dataclasses import dataclass

import numpy as np
from pydantic import BaseModel, Field, model_validator


@dataclass(frozen=True)
class MangoldtTable:
    """Sieved arithmetic tables for 0..limit (index 0 is unused).

    Attributes:
        limit: Largest covered integer N
        spf: Smallest prime factor (uint32, spf[1] = 1)
        mangoldt: Von Mangoldt values Λ(m), natural log
        mu: Möbius values in {-1, 0, 1}
        phi: Euler totient values
        is_prime: Primality bit array
        exponent: k when m = p^k, else 0
    """

    limit: int
    spf: np.ndarray
    mangoldt: np.ndarray
    mu: np.ndarray
    phi: np.ndarray
    is_prime: np.ndarray
    exponent: np.ndarray

    @property
    def is_prime_power(self) -> np.ndarray:
        """Boolean array, True exactly at prime powers."""
        return self.exponent > 0

    def covers(self, m: int) -> bool:
        """Whether ``m`` lies inside the table."""
        return 0 <= m <= self.limit


class ArithmeticValues(BaseModel):
    """Values of the classical multiplicative functions at m."""

    m: int = Field(..., ge=1)
    mu: int = Field(..., description="Möbius function")
    phi: int = Field(..., description="Euler totient")
    tau: int = Field(..., description="Number of divisors")
    omega: int = Field(..., description="Number of distinct prime factors")
    sigma: int = Field(..., description="Sum of divisors")


class Congruence(BaseModel):
    """A single congruence x ≡ residue (mod modulus)."""

    residue: int
    modulus: int = Field(..., ge=1)

    @model_validator(mode="after")
    def _residue_in_range(self) -> "Congruence":
        if not 0 <= self.residue < self.modulus:
            msg = f"residue {self.residue} is not in [0, {self.modulus})"
            raise ValueError(msg)
        return self


class CongruenceSystem(BaseModel):
    """An ordered list of congruences; moduli need not be coprime."""

    congruences: list[Congruence] = Field(default_factory=list)

    @classmethod
    def of(cls, *pairs: tuple[int, int]) -> "CongruenceSystem":
        """Build a system from (residue, modulus) pairs."""
        return cls(
            congruences=[Congruence(residue=r, modulus=m) for r, m in pairs]
        )


class CrtResult(BaseModel):
    """Outcome of solving a congruence system.

    Exactly one of (residue, modulus) or conflict is populated. The conflict
    holds 1-based positions of the first incompatible pair of entries.
    """

    compatible: bool
    residue: int | None = None
    modulus: int | None = None
    conflict: tuple[int, int] | None = None
