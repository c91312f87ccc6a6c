"""Montgomery's identity, Möbius inversion of progression counts, sieve ratios."""

import logging
import math

import numpy as np

from goldbach3.app.core.exceptions import InvalidArgumentError
from goldbach3.app.schemas.arith import MangoldtTable
from goldbach3.app.schemas.sievecheck import (
    LargeSieveCheck,
    MontgomeryCheck,
    SieveRatioReport,
    WeightSequence,
)
from goldbach3.app.services import arith_service

logger = logging.getLogger(__name__)


def _divisors(q: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(q) + 1) if q % d == 0]
    return sorted(set(small + [q // d for d in small]))


def progression_sums(b: WeightSequence, q: int) -> np.ndarray:
    """N(a, q) for every a in 0..q-1 (complex)."""
    if q < 1:
        msg = f"q must be >= 1, got {q}"
        raise InvalidArgumentError(msg)
    classes = np.arange(1, b.n + 1) % q
    real = np.bincount(classes, weights=b.values.real, minlength=q)
    imag = np.bincount(classes, weights=b.values.imag, minlength=q)
    return real + 1j * imag


def progression_sum(b: WeightSequence, a: int, q: int) -> complex:
    """N(a, q) = Σ_{m<=n, m≡a (q)} b_m."""
    if q < 1 or not 0 <= a < q:
        msg = f"need 0 <= a < q, got a={a}, q={q}"
        raise InvalidArgumentError(msg)
    start = a if a >= 1 else q
    return complex(b.values[start - 1 :: q].sum())


def f_profile(q: int, b: WeightSequence) -> np.ndarray:
    """f_h(q) for h = 0..q-1."""
    h = np.arange(q)
    result = np.zeros(q, dtype=np.complex128)
    for d in _divisors(q):
        mu = arith_service.mobius(d)
        if mu == 0:
            continue
        e = q // d
        result += mu * e * progression_sums(b, e)[h % e]
    return result


def f_coeff(h: int, q: int, b: WeightSequence) -> complex:
    """f_h(q) = Σ_{d|q} μ(d) (q/d) N(h mod q/d, q/d)."""
    if q < 1 or not 0 <= h < q:
        msg = f"need 0 <= h < q, got h={h}, q={q}"
        raise InvalidArgumentError(msg)
    total = 0j
    for d in _divisors(q):
        mu = arith_service.mobius(d)
        if mu:
            e = q // d
            total += mu * e * progression_sum(b, h % e, e)
    return total


def exp_sums_at(d: int, b: WeightSequence) -> np.ndarray:
    """T(a/d) = Σ_m b_m e(am/d) for a = 0..d-1."""
    folded = progression_sums(b, d)
    return d * np.fft.ifft(folded)


def _reduced_mask(d: int) -> np.ndarray:
    a = np.arange(d)
    return np.gcd(a, d) == 1


def montgomery_check(d: int, b: WeightSequence) -> MontgomeryCheck:
    """
    Both sides of (1/d) Σ_{h<d} |f_h(d)|^2 = Σ_{a<d, (a,d)=1} |T(a/d)|^2.

    The left side uses the divisor sums, the right side the exponential sums;
    neither is derived from the other.
    """
    if d < 1:
        msg = f"d must be >= 1, got {d}"
        raise InvalidArgumentError(msg)
    lhs = float(np.sum(np.abs(f_profile(d, b)) ** 2) / d)
    t = exp_sums_at(d, b)
    rhs = float(np.sum(np.abs(t[_reduced_mask(d)]) ** 2))
    return MontgomeryCheck(d=d, lhs=lhs, rhs=rhs)


def sieve_ratio(
    Q: int,
    H: float,
    b: WeightSequence,
    *,
    seed: int | None = None,
) -> SieveRatioReport:
    """
    Exact Σ_{Q<q<=2Q} q max_a |N(a, q)|^2 against the sieve bound's right side.

    rhs1 = (n^2 + Q^2) H^-1 (log Q) max|b_m|^2 and
    rhs2 = (n + Q^2) H (log Q) Σ|b_m|^2 with log Q clamped to >= 1.

    Args:
        Q: Dyadic scale (q ranges over Q < q <= 2Q)
        H: Positive balancing parameter
        b: Weights
        seed: Recorded in the report when b came from a seeded generator

    Returns:
        SieveRatioReport; ratio is 0 for an all-zero sequence
    """
    if Q < 1 or H <= 0:
        msg = f"need Q >= 1 and H > 0, got Q={Q}, H={H}"
        raise InvalidArgumentError(msg)
    n = b.n
    squares = np.abs(b.values) ** 2
    max_sq = float(squares.max())
    total_sq = math.fsum(squares.tolist())
    log_q = max(math.log(Q), 1.0)

    e1 = e2 = 0.0
    for q in range(Q + 1, 2 * Q + 1):
        term = q * float(np.max(np.abs(progression_sums(b, q)) ** 2))
        tau = math.prod(k + 1 for k in arith_service.factorize(q).values())
        if tau > H:
            e1 += term
        else:
            e2 += term
    lhs = e1 + e2

    rhs1 = (n**2 + Q**2) / H * log_q * max_sq
    rhs2 = (n + Q**2) * H * log_q * total_sq
    denominator = rhs1 + rhs2
    ratio = lhs / denominator if denominator > 0 else 0.0
    logger.debug("sieve ratio n=%d Q=%d H=%s -> %s", n, Q, H, ratio)
    return SieveRatioReport(
        n=n,
        Q=Q,
        H=H,
        lhs=lhs,
        rhs1=rhs1,
        rhs2=rhs2,
        ratio=ratio,
        e1=e1,
        e2=e2,
        cauchy_schwarz=n * Q * total_sq,
        seed=seed,
    )


def large_sieve_check(Q: int, b: WeightSequence) -> LargeSieveCheck:
    """Σ_{d<=Q} Σ_{(a,d)=1} |T(a/d)|^2 against (n - 1 + Q^2) Σ|b_m|^2."""
    if Q < 1:
        msg = f"Q must be >= 1, got {Q}"
        raise InvalidArgumentError(msg)
    lhs = 0.0
    for d in range(1, Q + 1):
        t = exp_sums_at(d, b)
        lhs += float(np.sum(np.abs(t[_reduced_mask(d)]) ** 2))
    rhs = (b.n - 1 + Q**2) * float(np.sum(np.abs(b.values) ** 2))
    return LargeSieveCheck(Q=Q, lhs=lhs, rhs=rhs)


def mangoldt_weights(n: int, table: MangoldtTable) -> WeightSequence:
    """b_m = Λ(m) for m = 1..n."""
    arith_service.require_range(table, n, "n")
    return WeightSequence(table.mangoldt[1 : n + 1].astype(np.complex128))


def random_weights(n: int, seed: int) -> WeightSequence:
    """Seeded standard complex Gaussian weights."""
    rng = np.random.default_rng(seed)
    return WeightSequence(rng.standard_normal(n) + 1j * rng.standard_normal(n))
