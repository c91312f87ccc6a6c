"""Exponential sums on a DFT grid, major/minor arcs and the truncated H(n)."""

import logging
import math

import numpy as np

from goldbach3.app.core.exceptions import InvalidArgumentError
from goldbach3.app.schemas.arith import MangoldtTable
from goldbach3.app.schemas.circle import (
    Arc,
    ArcIntegral,
    ArcReport,
    ArcSet,
    ExpSumGrid,
    MinorArcSup,
)
from goldbach3.app.schemas.ramanujan import ComplexValue, Constraint
from goldbach3.app.services import ramanujan_service, singular_service
from goldbach3.app.services.arith_service import phi, require_range
from goldbach3.app.services.counting_service import main_term, progression_weights

logger = logging.getLogger(__name__)


def _check_R(R: float) -> None:
    if R < 1:
        msg = f"R must be >= 1, got {R}"
        raise InvalidArgumentError(msg)


def _check_grid(n: int, N: int) -> None:
    if N < 2 * n + 1:
        msg = f"grid size N={N} aliases: need N >= 2n+1 = {2 * n + 1}"
        raise InvalidArgumentError(msg)


def exp_sum(j: int, alpha: float, c: Constraint, table: MangoldtTable) -> ComplexValue:
    """
    S_j(α) = Σ_{m<=n, m≡a_j (q_j)} Λ(m) e(αm), by direct summation.

    Args:
        j: Progression index in {1, 2, 3}
        alpha: Real frequency
        c: Constraint
        table: Arithmetic tables covering n
    """
    if j not in (1, 2, 3):
        msg = f"j must be 1, 2 or 3, got {j}"
        raise InvalidArgumentError(msg)
    a_j, q_j = c.pairs[j - 1]
    weights = progression_weights(a_j, q_j, c.n, table)
    m = np.nonzero(weights)[0]
    phase = np.mod(alpha * m, 1.0)
    total = np.sum(weights[m] * np.exp(2j * np.pi * phase))
    return ComplexValue.of(complex(total))


def m_sum(alpha: float, n: int) -> ComplexValue:
    """M(α) = Σ_{m=1}^{n} e(αm)."""
    m = np.arange(1, n + 1)
    return ComplexValue.of(complex(np.exp(2j * np.pi * np.mod(alpha * m, 1.0)).sum()))


def _grid_sum(weights: np.ndarray, N: int) -> np.ndarray:
    """Σ_m w_m e(km/N) for k = 0..N-1, folding m modulo N."""
    folded = np.bincount(np.arange(weights.size) % N, weights=weights, minlength=N)
    return N * np.fft.ifft(folded)


def exp_sum_grid(c: Constraint, N: int, table: MangoldtTable) -> ExpSumGrid:
    """
    S_1, S_2, S_3 and M at α = k/N via one inverse FFT each.

    Args:
        c: Constraint
        N: Grid size (>= 1); N >= n + 1 avoids folding
        table: Arithmetic tables covering n
    """
    if N < 1:
        msg = f"grid size must be >= 1, got {N}"
        raise InvalidArgumentError(msg)
    n = c.n
    require_range(table, n, "n")
    sums = [
        _grid_sum(progression_weights(a_j, q_j, n, table), N) for a_j, q_j in c.pairs
    ]
    ones = np.ones(n + 1)
    ones[0] = 0.0
    logger.debug("Exponential sum grid n=%d N=%d", n, N)
    return ExpSumGrid(n=n, N=N, s1=sums[0], s2=sums[1], s3=sums[2], m=_grid_sum(ones, N))


def _grid_terms(c: Constraint, N: int, table: MangoldtTable) -> np.ndarray:
    """(1/N) S1 S2 S3(k/N) e(-nk/N) for every k."""
    grid = exp_sum_grid(c, N, table)
    k = np.arange(N)
    twiddle = np.exp(-2j * np.pi * ((c.n * k) % N) / N)
    return grid.s1 * grid.s2 * grid.s3 * twiddle / N


def dft_identity(c: Constraint, N: int, table: MangoldtTable) -> float:
    """
    (1/N) Σ_k S1 S2 S3(k/N) e(-nk/N), which equals J3(n) for N >= 2n+1.

    Raises:
        InvalidArgumentError: If N < 2n+1
    """
    _check_grid(c.n, N)
    total = complex(_grid_terms(c, N, table).sum())
    if abs(total.imag) > 1e-6 * max(1.0, abs(total.real)):
        logger.warning("DFT identity has imaginary part %s", total.imag)
    return total.real


def arc_membership_mask(alphas: np.ndarray, n: int, R: float) -> np.ndarray:
    """
    Whether each α lies in a major arc.

    α is first reduced into the domain [-R/n, 1 - R/n). The wrap arc covers
    |α| < R/n; for 2 <= q <= R the arcs around a/q with (a, q) = 1 are tested
    at a = floor(αq) and floor(αq) + 1.
    """
    _check_R(R)
    lo = -R / n
    alphas = lo + np.mod(np.asarray(alphas, dtype=np.float64) - lo, 1.0)
    mask = np.abs(alphas) < R / n
    for q in range(2, math.floor(R) + 1):
        base = np.floor(alphas * q)
        for a in (base, base + 1):
            valid = (a > 0) & (a < q) & (np.gcd(a.astype(np.int64), q) == 1)
            mask |= valid & (np.abs(alphas - a / q) < R / (q * n))
    return mask


def _grid_mask(n: int, R: float, N: int) -> np.ndarray:
    """Major-arc membership of k/N, decided in integer arithmetic."""
    _check_R(R)
    k = np.arange(N, dtype=np.int64)
    # k/N -> α in the domain: subtract 1 once k/N >= 1 - R/n
    shifted = np.where(k * n >= (n - R) * N, k - N, k)
    mask = np.abs(shifted) * n < R * N
    for q in range(2, math.floor(R) + 1):
        base = np.floor_divide(shifted * q, N)
        for a in (base, base + 1):
            valid = (a > 0) & (a < q) & (np.gcd(a, q) == 1)
            mask |= valid & (np.abs(shifted * q - a * N) * n < R * N)
    return mask


def arcs_build(n: int, R: float) -> ArcSet:
    """
    Major arcs ]a/q - R/(qn), a/q + R/(qn)[ for q <= R, plus the wrap arc (1, 1).

    Raises:
        InvalidArgumentError: If R < 1
    """
    _check_R(R)
    if n < 1:
        msg = f"n must be >= 1, got {n}"
        raise InvalidArgumentError(msg)
    arcs = [Arc(a=1, q=1, center=0.0, halfwidth=R / n)]
    for q in range(2, math.floor(R) + 1):
        arcs.extend(
            Arc(a=a, q=q, center=a / q, halfwidth=R / (q * n))
            for a in range(1, q)
            if math.gcd(a, q) == 1
        )
    return ArcSet(n=n, R=R, arcs=arcs, domain=(-R / n, 1 - R / n))


def major_arc_integral(
    c: Constraint, R: float, N: int, table: MangoldtTable
) -> ArcIntegral:
    """
    Split the grid identity for J3 into major and minor arc parts.

    j3_minor is j3 - j3_major, with both sums taken over the same grid
    terms.
    """
    _check_grid(c.n, N)
    terms = _grid_terms(c, N, table)
    mask = _grid_mask(c.n, R, N)
    total = complex(terms.sum())
    major = complex(terms[mask].sum())
    return ArcIntegral(
        j3=total.real,
        j3_major=major.real,
        j3_minor=total.real - major.real,
        major_points=int(mask.sum()),
        minor_points=int(N - mask.sum()),
    )


def j2_arc_profiles(
    c: Constraint, R: float, N: int, table: MangoldtTable
) -> tuple[np.ndarray, np.ndarray]:
    """
    Major and minor arc parts of J2(m) for m = 0..n on the grid.

    Returns:
        (J2 major, J2 minor); their sum is the grid-exact J2 profile
    """
    _check_grid(c.n, N)
    grid = exp_sum_grid(c, N, table)
    mask = _grid_mask(c.n, R, N)
    pair = grid.s2 * grid.s3
    full = np.fft.fft(pair)[: c.n + 1].real / N
    major = np.fft.fft(np.where(mask, pair, 0))[: c.n + 1].real / N
    return major, full - major


def minor_arc_sup(c: Constraint, R: float, N: int, table: MangoldtTable) -> MinorArcSup:
    """max |S_3(α)|^2 over grid points in the minor arcs."""
    _check_grid(c.n, N)
    grid = exp_sum_grid(c, N, table)
    minor = ~_grid_mask(c.n, R, N)
    if not minor.any():
        return MinorArcSup(value=0.0)
    power = np.where(minor, np.abs(grid.s3) ** 2, -1.0)
    k = int(np.argmax(power))
    alpha = k / N
    if alpha >= 1 - R / c.n:
        alpha -= 1.0
    return MinorArcSup(value=float(power[k]), alpha=alpha)


def truncated_H(c: Constraint, R: float, table: MangoldtTable | None = None) -> float:
    """Σ_{q<=R} λ(q) · n^2 / (2 φ(q1) φ(q2) φ(q3))."""
    _check_R(R)
    lam = ramanujan_service.lambda_table(math.floor(R), c)
    scale = c.n**2 / (2 * phi(c.q1) * phi(c.q2) * phi(c.q3))
    return math.fsum(lam[1:].tolist()) * scale


def arc_report(
    c: Constraint,
    R: float,
    N: int,
    table: MangoldtTable,
    *,
    pmax: int | None = None,
) -> ArcReport:
    """Major/minor split of J3 next to H(n), the main term and minor-arc sizes."""
    integral = major_arc_integral(c, R, N, table)
    _, j2_minor = j2_arc_profiles(c, R, N, table)
    s3 = singular_service.singular_series(c, pmax)
    main = main_term(c, s3.midpoint)
    return ArcReport(
        n=c.n,
        R=R,
        N=N,
        j3=integral.j3,
        j3_major=integral.j3_major,
        j3_minor=integral.j3_minor,
        H_truncated=truncated_H(c, R, table),
        main_term=main,
        major_deviation=abs(integral.j3_major - main),
        j2_minor_max=float(np.max(np.abs(j2_minor))),
        s3_minor_sup=minor_arc_sup(c, R, N, table).value,
    )
