"""Sieved arithmetic tables and modular utilities."""

import logging
import math
from functools import lru_cache, reduce

import numpy as np

from goldbach3.app.config import settings
from goldbach3.app.core.exceptions import (
    CapacityError,
    InvalidArgumentError,
    OutOfRangeError,
)
from goldbach3.app.schemas.arith import (
    ArithmeticValues,
    CongruenceSystem,
    CrtResult,
    MangoldtTable,
)

logger = logging.getLogger(__name__)

# spf is persisted as u32
_MAX_LIMIT = 2**32 - 1


def smallest_prime_factors(limit: int) -> np.ndarray:
    """
    Sieve the smallest prime factor of every integer up to ``limit``.

    Args:
        limit: Upper bound (inclusive)

    Returns:
        uint32 array with spf[0] = 0, spf[1] = 1 and spf[p] = p for primes
    """
    spf = np.zeros(limit + 1, dtype=np.uint32)
    if limit >= 1:
        spf[1] = 1
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            block = spf[p * p :: p]
            block[block == 0] = p
    unmarked = spf == 0
    unmarked[0] = False
    spf[unmarked] = np.nonzero(unmarked)[0]
    return spf


def tables_from_spf(spf: np.ndarray) -> MangoldtTable:
    """
    Derive Λ, μ, φ, primality and prime-power exponents from an spf array.

    Args:
        spf: Smallest-prime-factor array as produced by smallest_prime_factors

    Returns:
        Frozen MangoldtTable covering 0..len(spf)-1
    """
    limit = len(spf) - 1
    idx = np.arange(limit + 1, dtype=np.int64)
    spf64 = spf.astype(np.int64)

    is_prime = (spf64 == idx) & (idx >= 2)
    primes = np.nonzero(is_prime)[0]

    exponent = np.zeros(limit + 1, dtype=np.int8)
    mangoldt = np.zeros(limit + 1, dtype=np.float64)
    exponent[primes] = 1
    mangoldt[primes] = np.log(primes.astype(np.float64))
    for p in primes[primes <= math.isqrt(limit)].tolist():
        log_p = math.log(p)
        pk, k = p * p, 2
        while pk <= limit:
            exponent[pk] = k
            mangoldt[pk] = log_p
            pk *= p
            k += 1

    # m = p * rest with p = spf[m] < m, so blocks [2^j, 2^(j+1)) only read
    # values from earlier blocks.
    mu = np.zeros(limit + 1, dtype=np.int8)
    phi = np.zeros(limit + 1, dtype=np.int64)
    if limit >= 1:
        mu[1] = 1
        phi[1] = 1
    lo = 2
    while lo <= limit:
        hi = min(2 * lo, limit + 1)
        p = spf64[lo:hi]
        rest = idx[lo:hi] // p
        square = spf64[rest] == p
        phi[lo:hi] = np.where(square, phi[rest] * p, phi[rest] * (p - 1))
        mu[lo:hi] = np.where(square, 0, -mu[rest])
        lo = hi

    for array in (spf, mangoldt, mu, phi, is_prime, exponent):
        array.flags.writeable = False

    return MangoldtTable(
        limit=limit,
        spf=spf,
        mangoldt=mangoldt,
        mu=mu,
        phi=phi,
        is_prime=is_prime,
        exponent=exponent,
    )


def build_tables(limit: int, *, ceiling: int | None = None) -> MangoldtTable:
    """
    Build the frozen arithmetic tables up to ``limit``.

    Args:
        limit: Table size N (N >= 2)
        ceiling: Memory ceiling override; defaults to settings.table_ceiling

    Returns:
        Immutable MangoldtTable

    Raises:
        InvalidArgumentError: If limit < 2
        CapacityError: If limit exceeds the memory ceiling
    """
    ceiling = settings.table_ceiling if ceiling is None else ceiling
    if limit < 2:
        msg = f"table limit must be at least 2, got {limit}"
        raise InvalidArgumentError(msg)
    if limit > min(ceiling, _MAX_LIMIT):
        msg = f"table limit {limit} exceeds the memory ceiling {ceiling}"
        raise CapacityError(msg, ceiling=ceiling)

    logger.debug("Sieving tables up to %d", limit)
    return tables_from_spf(smallest_prime_factors(limit))


def require_range(table: MangoldtTable, value: float, what: str = "argument") -> None:
    """Raise OutOfRangeError when floor(``value``) exceeds the table limit."""
    if math.floor(value) > table.limit:
        msg = f"{what} {value} exceeds the table limit {table.limit}"
        raise OutOfRangeError(msg)


@lru_cache(maxsize=4096)
def _trial_factorize(m: int) -> tuple[tuple[int, int], ...]:
    factors: list[tuple[int, int]] = []
    for p in (2, 3):
        k = 0
        while m % p == 0:
            m //= p
            k += 1
        if k:
            factors.append((p, k))
    p = 5
    step = 2
    while p * p <= m:
        k = 0
        while m % p == 0:
            m //= p
            k += 1
        if k:
            factors.append((p, k))
        p += step
        step = 6 - step
    if m > 1:
        factors.append((m, 1))
    return tuple(factors)


def factorize(m: int, table: MangoldtTable | None = None) -> dict[int, int]:
    """
    Factor a positive integer.

    Args:
        m: Integer to factor (m >= 1)
        table: Optional table; its spf array is used when it covers m

    Returns:
        Mapping prime -> exponent, in increasing prime order
    """
    if m < 1:
        msg = f"cannot factor {m}"
        raise InvalidArgumentError(msg)
    if table is None or m > table.limit:
        return dict(_trial_factorize(m))

    factors: dict[int, int] = {}
    spf = table.spf
    while m > 1:
        p = int(spf[m])
        k = 0
        while m % p == 0:
            m //= p
            k += 1
        factors[p] = k
    return factors


def prime_divisors(m: int, table: MangoldtTable | None = None) -> list[int]:
    """Distinct prime divisors of m in increasing order."""
    return list(factorize(m, table))


def phi(m: int) -> int:
    """Euler totient of any positive integer."""
    result = m
    for p in factorize(m):
        result = result // p * (p - 1)
    return result


def mobius(m: int) -> int:
    """Möbius function of any positive integer."""
    factors = factorize(m)
    if any(k > 1 for k in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def valuation(m: int, p: int) -> int:
    """Exponent of the prime p in m (m != 0)."""
    k = 0
    while m % p == 0:
        m //= p
        k += 1
    return k


def gcd_many(*values: int) -> int:
    """Greatest common divisor of all arguments."""
    return reduce(math.gcd, values, 0)


def lcm_many(*values: int) -> int:
    """Least common multiple of all arguments (1 for none)."""
    return reduce(math.lcm, values, 1)


def multiplicative_functions(m: int, table: MangoldtTable) -> ArithmeticValues:
    """
    Evaluate μ, φ, τ, ω and σ at m.

    Args:
        m: Positive integer inside the table
        table: Arithmetic tables

    Returns:
        Exact integer values

    Raises:
        OutOfRangeError: If m exceeds the table limit
    """
    if m < 1:
        msg = f"m must be positive, got {m}"
        raise InvalidArgumentError(msg)
    require_range(table, m, "m")

    factors = factorize(m, table)
    tau = 1
    sigma = 1
    for p, k in factors.items():
        tau *= k + 1
        sigma *= (p ** (k + 1) - 1) // (p - 1)

    return ArithmeticValues(
        m=m,
        mu=int(table.mu[m]),
        phi=int(table.phi[m]),
        tau=tau,
        omega=len(factors),
        sigma=sigma,
    )


def crt_solve(system: CongruenceSystem) -> CrtResult:
    """
    Solve a system of congruences with arbitrary moduli.

    Args:
        system: Congruences to combine

    Returns:
        The unique residue modulo the lcm of the moduli, or the first pair of
        entries (1-based) that cannot hold simultaneously
    """
    residue, modulus = 0, 1
    for position, congruence in enumerate(system.congruences):
        r, m = congruence.residue, congruence.modulus
        g = math.gcd(modulus, m)
        if (r - residue) % g:
            return CrtResult(
                compatible=False,
                conflict=_first_conflict(system, position),
            )
        # residue + modulus * t ≡ r (mod m)
        step = modulus // g
        t = ((r - residue) // g) * pow(step, -1, m // g) % (m // g) if m // g > 1 else 0
        residue += modulus * t
        modulus *= m // g
        residue %= modulus

    return CrtResult(compatible=True, residue=residue, modulus=modulus)


def _first_conflict(system: CongruenceSystem, position: int) -> tuple[int, int]:
    # Pairwise compatibility implies joint compatibility for congruences, so
    # some earlier entry conflicts with this one on its own.
    target = system.congruences[position]
    for earlier, congruence in enumerate(system.congruences[:position]):
        g = math.gcd(congruence.modulus, target.modulus)
        if (congruence.residue - target.residue) % g:
            return earlier + 1, position + 1
    return position, position + 1


def primes_up_to(x: float, table: MangoldtTable) -> np.ndarray:
    """Primes p <= x as an int64 array."""
    require_range(table, x, "x")
    return np.nonzero(table.is_prime[: int(x) + 1])[0]


def prime_powers_up_to(x: float, table: MangoldtTable) -> np.ndarray:
    """Prime powers m <= x (exponent >= 1) as an int64 array."""
    require_range(table, x, "x")
    return np.nonzero(table.exponent[: int(x) + 1])[0]
