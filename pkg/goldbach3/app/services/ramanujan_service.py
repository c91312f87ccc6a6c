"""Constrained Ramanujan sums and the coefficients b(q), λ(q)."""

import cmath
import logging
import math
from functools import lru_cache

import numpy as np

from goldbach3.app.config import settings
from goldbach3.app.core.exceptions import (
    CapacityError,
    Goldbach3Error,
    InvalidArgumentError,
)
from goldbach3.app.schemas.ramanujan import BMethod, ComplexValue, Constraint
from goldbach3.app.services import arith_service

logger = logging.getLogger(__name__)


def e(num: int, den: int) -> complex:
    """e(num/den) = exp(2πi num/den), reduced modulo 1 first."""
    return cmath.exp(2j * math.pi * (num % den) / den)


def _check_coprime(a: int, q: int, what: str) -> None:
    if q < 1:
        msg = f"{what}: modulus must be >= 1, got {q}"
        raise InvalidArgumentError(msg)
    if math.gcd(a, q) != 1:
        msg = f"{what}: gcd({a}, {q}) != 1"
        raise InvalidArgumentError(msg)


def _constrained(a: int, q: int, a_j: int, q_j: int) -> complex:
    d = math.gcd(q_j, q)
    rest = q // d
    if math.gcd(d, rest) > 1:
        return 0j
    mu = arith_service.mobius(rest)
    if mu == 0:
        return 0j
    u = pow(rest, -1, d)
    return mu * e(a * u * a_j, d)


def ramanujan_constrained(a: int, q: int, a_j: int, q_j: int) -> ComplexValue:
    """
    Closed form of c_j(a, q).

    With d = (q_j, q) and u the inverse of q/d modulo d the value is 0 when
    (d, q/d) > 1 and μ(q/d)·e(a·u·a_j/d) otherwise.

    Raises:
        InvalidArgumentError: If gcd(a, q) != 1 or gcd(a_j, q_j) != 1
    """
    _check_coprime(a, q, "a, q")
    _check_coprime(a_j, q_j, "a_j, q_j")
    return ComplexValue.of(_constrained(a, q, a_j, q_j))


def ramanujan_bruteforce(
    a: int, q: int, a_j: int, q_j: int, *, ceiling: int | None = None
) -> ComplexValue:
    """
    Literal sum of e(m a/q) over 1 <= m <= q, (m, q) = 1, m ≡ a_j mod (q_j, q).

    Raises:
        InvalidArgumentError: On non-reduced arguments
        CapacityError: If q exceeds the oracle ceiling
    """
    _check_coprime(a, q, "a, q")
    _check_coprime(a_j, q_j, "a_j, q_j")
    ceiling = settings.oracle_ceiling if ceiling is None else ceiling
    if q > ceiling:
        msg = f"q={q} exceeds the brute-force oracle ceiling {ceiling}"
        raise CapacityError(msg, ceiling=ceiling)

    d = math.gcd(q_j, q)
    m = np.arange(1, q + 1, dtype=np.int64)
    m = m[(np.gcd(m, q) == 1) & (m % d == a_j % d)]
    total = np.exp(2j * np.pi * ((m * a) % q) / q).sum()
    return ComplexValue.of(complex(total))


def _b_definitional(q: int, c: Constraint) -> complex:
    if q == 1:
        return 1 + 0j
    total = 0j
    for a in range(1, q):
        if math.gcd(a, q) != 1:
            continue
        product = 1 + 0j
        for a_j, q_j in c.pairs:
            product *= _constrained(a, q, a_j, q_j)
            if product == 0:
                break
        else:
            total += product * e(-c.n * a, q)
    return total


def _ramanujan_sum(q: int, m: int) -> int:
    """Classical c_q(m) = Σ_{d | (q, m)} μ(q/d) d."""
    g = math.gcd(q, m)
    return sum(
        arith_service.mobius(q // d) * d for d in range(1, g + 1) if g % d == 0
    )


def b_prime_power(p: int, k: int, c: Constraint) -> float:
    """
    b(p^k) by classification.

    p^k | (q1, q2, q3): the Ramanujan sum c_{p^k}(a1 + a2 + a3 - n), which is
    φ(p^k) under the general condition. k = 1 otherwise: the six-case table.
    Anything else vanishes.
    """
    if k < 1:
        msg = f"exponent must be >= 1, got {k}"
        raise InvalidArgumentError(msg)
    pk = p**k
    if c.d % pk == 0:
        return float(_ramanujan_sum(pk, sum(c.residues) - c.n))
    if k > 1:
        return 0.0

    dividing = [j for j, q_j in enumerate(c.moduli) if q_j % p == 0]
    if not dividing:
        return float(1 - p) if c.n % p == 0 else 1.0
    if len(dividing) == 1:
        (j,) = dividing
        return float(p - 1) if (c.n - c.residues[j]) % p == 0 else -1.0
    j, k2 = dividing
    return float(1 - p) if (c.n - c.residues[j] - c.residues[k2]) % p == 0 else 1.0


def _euler_b(q: int, c: Constraint) -> float:
    value = 1.0
    for p, k in arith_service.factorize(q).items():
        value *= b_prime_power(p, k, c)
        if value == 0:
            break
    return value


def b_coeff(
    q: int, c: Constraint, method: BMethod = BMethod.DEFINITIONAL
) -> ComplexValue:
    """
    b(q) = Σ_{a<q, (a,q)=1} (c1 c2 c3)(a, q) e(-n a/q), with b(1) = 1.

    Args:
        q: Modulus (q >= 1)
        c: Constraint
        method: definitional sum, Euler product over prime powers, or both
            with a consistency check

    Returns:
        b(q); the imaginary part is numerically zero

    Raises:
        Goldbach3Error: In crosscheck mode when the two routes disagree
    """
    if q < 1:
        msg = f"q must be >= 1, got {q}"
        raise InvalidArgumentError(msg)
    if method == BMethod.EULER:
        return ComplexValue(re=_euler_b(q, c), im=0.0)

    value = _b_definitional(q, c)
    if method == BMethod.CROSSCHECK:
        euler = _euler_b(q, c)
        if abs(value - euler) > settings.tolerance * max(1.0, abs(euler)):
            msg = f"b({q}) disagrees: definitional {value}, Euler product {euler}"
            raise Goldbach3Error(msg)
    return ComplexValue.of(value)


def _phi_ratio(p: int, k: int, q_i: int) -> float:
    """φ(q_i)/φ([q_i, p^k])."""
    nu = arith_service.valuation(q_i, p)
    if nu >= k:
        return 1.0
    if nu == 0:
        return 1.0 / (p ** (k - 1) * (p - 1))
    return 1.0 / p ** (k - nu)


def lambda_prime_power(p: int, k: int, c: Constraint) -> float:
    """λ(p^k) = b(p^k) ∏_i φ(q_i)/φ([q_i, p^k])."""
    b = b_prime_power(p, k, c)
    if b == 0:
        return 0.0
    return b * math.prod(_phi_ratio(p, k, q_i) for q_i in c.moduli)


def lambda_coeff(q: int, c: Constraint) -> float:
    """
    λ(q) = b(q) ∏_i φ(q_i)/φ([q_i, q]), evaluated multiplicatively.

    Returns:
        1 for q = 1
    """
    if q < 1:
        msg = f"q must be >= 1, got {q}"
        raise InvalidArgumentError(msg)
    value = 1.0
    for p, k in arith_service.factorize(q).items():
        value *= lambda_prime_power(p, k, c)
        if value == 0:
            break
    return value


@lru_cache(maxsize=8)
def _prime_power_split(Q: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(pk, rest, primes) with m = pk[m] * rest[m], pk[m] the spf-power part."""
    spf = arith_service.smallest_prime_factors(Q).astype(np.int64)
    idx = np.arange(Q + 1, dtype=np.int64)
    pk = np.ones(Q + 1, dtype=np.int64)
    lo = 2
    while lo <= Q:
        hi = min(2 * lo, Q + 1)
        p = spf[lo:hi]
        quotient = idx[lo:hi] // p
        pk[lo:hi] = np.where(spf[quotient] == p, pk[quotient] * p, p)
        lo = hi
    rest = np.ones(Q + 1, dtype=np.int64)
    rest[1:] = idx[1:] // pk[1:]
    primes = np.nonzero((spf == idx) & (idx >= 2))[0]
    for array in (pk, rest, primes):
        array.flags.writeable = False
    return pk, rest, primes


def lambda_table(Q: int, c: Constraint) -> np.ndarray:
    """
    λ(q) for q = 0..Q (entry 0 unused, set to 0), built multiplicatively.

    Generic primes (dividing none of n, q1, q2, q3) get 1/(p-1)^3 at p and 0
    at higher powers; the remaining primes go through lambda_prime_power.
    """
    if Q < 1:
        msg = f"Q must be >= 1, got {Q}"
        raise InvalidArgumentError(msg)
    lam = np.zeros(Q + 1)
    lam[1] = 1.0
    if Q == 1:
        return lam

    pk, rest, primes = _prime_power_split(Q)
    local = np.zeros(Q + 1)
    p_float = primes.astype(np.float64)
    local[primes] = 1.0 / (p_float - 1.0) ** 3

    special = set(arith_service.prime_divisors(abs(c.n))) if c.n else set()
    for q_i in c.moduli:
        special.update(arith_service.prime_divisors(q_i))
    if c.n == 0:
        special.update(primes.tolist())
    for p in sorted(special):
        if p > Q:
            continue
        power, k = p, 1
        while power <= Q:
            local[power] = lambda_prime_power(p, k, c)
            power *= p
            k += 1

    lo = 2
    while lo <= Q:
        hi = min(2 * lo, Q + 1)
        lam[lo:hi] = local[pk[lo:hi]] * lam[rest[lo:hi]]
        lo = hi
    return lam
