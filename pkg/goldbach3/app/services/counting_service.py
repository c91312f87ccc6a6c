"""Exact representation counts, J2 profiles, main terms and deviation scans."""

import logging
import math
from functools import partial

import numpy as np

from goldbach3.app.config import settings
from goldbach3.app.core.exceptions import ConvolutionDriftError, InvalidArgumentError
from goldbach3.app.core.workers import map_ordered
from goldbach3.app.schemas.arith import MangoldtTable
from goldbach3.app.schemas.counting import (
    DeviationRow,
    DeviationScan,
    RepCounts,
    ResiduePolicy,
)
from goldbach3.app.schemas.ramanujan import Constraint
from goldbach3.app.services import singular_service
from goldbach3.app.services.arith_service import phi, require_range
from goldbach3.app.services.progressions_service import reduced_residues

logger = logging.getLogger(__name__)

# any nonzero J2 value is at least Λ(2)^2
_J2_FLOOR = math.log(2) ** 2 / 2


def progression_weights(a: int, q: int, n: int, table: MangoldtTable) -> np.ndarray:
    """Λ(m) for m ≡ a (mod q), 0 elsewhere, indexed 0..n."""
    require_range(table, n, "n")
    weights = np.zeros(n + 1)
    weights[a::q] = table.mangoldt[a : n + 1 : q]
    return weights


def _support(a: int, q: int, n: int, table: MangoldtTable) -> np.ndarray:
    """Prime powers m <= n with m ≡ a (mod q), ascending."""
    return np.nonzero(table.exponent[a : n + 1 : q])[0] * q + a


def count_direct(c: Constraint, table: MangoldtTable) -> RepCounts:
    """
    Enumerate m1 + m2 + m3 = n over prime powers in the three progressions.

    Args:
        c: Constraint
        table: Arithmetic tables covering n

    Returns:
        RepCounts with J3, R3, r3 and the W split by exponents
    """
    n = c.n
    require_range(table, max(n, 0), "n")
    counts = RepCounts(n=n, constraint=c)
    if n < 6:
        return counts

    lam = table.mangoldt
    expo = table.exponent
    p1 = _support(c.a1, c.q1, n, table)
    p2 = _support(c.a2, c.q2, n, table)
    in3 = np.zeros(n + 1, dtype=bool)
    in3[_support(c.a3, c.q3, n, table)] = True

    j3 = 0.0
    r3big = 0.0
    r3 = w1 = w2 = w3 = w4 = 0
    for m1 in p1.tolist():
        if m1 > n - 4:
            break
        m2 = p2[: np.searchsorted(p2, n - m1 - 2, side="right")]
        m3 = n - m1 - m2
        hit = in3[m3]
        if not hit.any():
            continue
        m2, m3 = m2[hit], m3[hit]
        weights = lam[m2] * lam[m3]
        j3 += lam[m1] * weights.sum()

        e2, e3 = expo[m2], expo[m3]
        if expo[m1] == 1:
            primes = (e2 == 1) & (e3 == 1)
            r3 += int(primes.sum())
            r3big += lam[m1] * weights[primes].sum()
            w2 += int((e2 >= 2).sum())
            w4 += int(((e2 == 1) & (e3 >= 2)).sum())
        else:
            w1 += int((e2 >= 2).sum())
            w3 += int((e2 == 1).sum())

    return RepCounts(
        n=n,
        constraint=c,
        j3=float(j3),
        r3big=float(r3big),
        r3=r3,
        w1=w1,
        w2=w2,
        w3=w3,
        w4=w4,
        w_total=w1 + w2 + w3 + w4,
    )


def _direct_at(left: np.ndarray, right: np.ndarray, m: int) -> float:
    return float(np.dot(left[: m + 1], right[m::-1]))


def convolve_profiles(
    left: np.ndarray,
    right: np.ndarray,
    *,
    crossover: int | None = None,
    spot_checks: int | None = None,
    seed: int = 0,
) -> np.ndarray:
    """
    First len(left) terms of the convolution of two equal-length sequences.

    Direct convolution up to ``crossover`` terms, a real FFT above it. FFT
    results are snapped to 0 below the smallest possible nonzero value and
    compared with the direct sum at ``spot_checks`` random indices.

    Raises:
        ConvolutionDriftError: If a spot check disagrees
    """
    crossover = settings.conv_crossover if crossover is None else crossover
    spot_checks = settings.conv_spot_checks if spot_checks is None else spot_checks
    size = left.size
    if size <= crossover:
        logger.debug("Direct convolution of length %d", size)
        return np.convolve(left, right)[:size]

    length = 1 << (2 * size - 1).bit_length()
    logger.debug("FFT convolution of length %d (transform %d)", size, length)
    product = np.fft.rfft(left, length) * np.fft.rfft(right, length)
    result = np.fft.irfft(product, length)[:size]
    result[np.abs(result) < _J2_FLOOR] = 0.0

    rng = np.random.default_rng(seed)
    budget = 64 * np.finfo(float).eps * math.log2(length)
    budget *= float(np.linalg.norm(left) * np.linalg.norm(right))
    for m in rng.integers(0, size, size=spot_checks).tolist():
        expected = _direct_at(left, right, m)
        allowed = settings.tolerance * abs(expected) + budget
        if abs(result[m] - expected) > allowed:
            msg = f"FFT convolution drifted at index {m}: {result[m]} vs {expected}"
            raise ConvolutionDriftError(msg)
    return result


def j2_profile(
    c: Constraint,
    table: MangoldtTable,
    *,
    crossover: int | None = None,
    seed: int = 0,
) -> np.ndarray:
    """
    J2(m) = Σ_{m2 + m3 = m} Λ(m2)Λ(m3) over the progressions (a2, q2), (a3, q3).

    Returns:
        Array of length n + 1, entry m holding J2(m)
    """
    n = c.n
    if n < 0:
        msg = f"n must be >= 0, got {n}"
        raise InvalidArgumentError(msg)
    left = progression_weights(c.a2, c.q2, n, table)
    right = progression_weights(c.a3, c.q3, n, table)
    return convolve_profiles(left, right, crossover=crossover, seed=seed)


def count_convolution(
    c: Constraint,
    table: MangoldtTable,
    *,
    crossover: int | None = None,
    profile: np.ndarray | None = None,
) -> float:
    """
    J3(n) = Σ_{m1 ≡ a1 (q1)} Λ(m1) J2(n - m1).

    Args:
        c: Constraint
        table: Arithmetic tables covering n
        crossover: Direct/FFT switch override
        profile: Precomputed j2_profile for the (a2,q2),(a3,q3) part

    Returns:
        J3(n) as a float
    """
    n = c.n
    if n < 6:
        return 0.0
    if profile is None:
        profile = j2_profile(c, table, crossover=crossover)
    first = progression_weights(c.a1, c.q1, n, table)
    return float(np.dot(first, profile[n::-1]))


def main_term(c: Constraint, s3: float) -> float:
    """n^2 s3 / (2 φ(q1) φ(q2) φ(q3))."""
    if s3 < 0:
        msg = f"s3 must be >= 0, got {s3}"
        raise InvalidArgumentError(msg)
    return c.n**2 * s3 / (2 * phi(c.q1) * phi(c.q2) * phi(c.q3))


def scan_residues(
    q: int,
    policy: ResiduePolicy,
    seed: int,
    *,
    exact_limit: int | None = None,
    samples: int | None = None,
) -> tuple[list[int], bool]:
    """
    Residues over which the max is taken for modulus q.

    Returns:
        (sorted residues, whether they are a strict sample of the reduced set)
    """
    exact_limit = settings.exact_residue_limit if exact_limit is None else exact_limit
    samples = settings.sampled_residues if samples is None else samples
    residues = reduced_residues(q)
    exhaustive = policy == ResiduePolicy.EXHAUSTIVE or (
        policy == ResiduePolicy.AUTO and q <= exact_limit
    )
    if exhaustive or len(residues) <= samples:
        return residues, False
    rng = np.random.default_rng([seed, q])
    chosen = rng.choice(len(residues), size=samples, replace=False)
    return sorted(residues[i] for i in chosen.tolist()), True


def _scan_cell(
    n: int,
    q1_cells: list[tuple[int, list[int], bool]],
    table: MangoldtTable,
    pmax: int | None,
    crossover: int | None,
    cell: tuple[int, int, int, int, bool],
) -> list[DeviationRow]:
    q3, a3, q2, a2, cell_sampled = cell
    base = Constraint(n=n, q2=q2, a2=a2, q3=q3, a3=a3)
    profile = j2_profile(base, table, crossover=crossover)
    rows = []
    for q1, residues, sampled in q1_cells:
        for a1 in residues:
            c = Constraint(n=n, q1=q1, a1=a1, q2=q2, a2=a2, q3=q3, a3=a3)
            j3 = count_convolution(c, table, profile=profile)
            s3 = singular_service.singular_series(c, pmax)
            main = main_term(c, s3.midpoint)
            abs_dev = abs(j3 - main)
            rows.append(
                DeviationRow(
                    n=n,
                    q1=q1,
                    a1=a1,
                    q2=q2,
                    a2=a2,
                    q3=q3,
                    a3=a3,
                    j3=j3,
                    s3_lower=s3.lower,
                    s3_upper=s3.upper,
                    s3_mid=s3.midpoint,
                    main=main,
                    abs_dev=abs_dev,
                    rel_dev=abs_dev / max(main, 1.0),
                    sampled=sampled or cell_sampled,
                )
            )
    return rows


def deviation_scan(
    n: int,
    q1_range: list[int],
    q2_range: list[int],
    q3_range: list[int],
    table: MangoldtTable,
    *,
    policy: ResiduePolicy = ResiduePolicy.AUTO,
    seed: int = 0,
    pmax: int | None = None,
    threads: int | None = None,
    crossover: int | None = None,
) -> DeviationScan:
    """
    |J3 - main term| over all moduli in the ranges and chosen residues.

    One J2 profile is computed per (q2, a2, q3, a3) cell and reused for every
    (q1, a1). The aggregate is the maximum over (q3, a3) of
    Σ_{q2} max_{a2} Σ_{q1} max_{a1} |dev|; rows with a vanishing series count
    with main term 0.

    Args:
        n: Target integer inside the table
        q1_range, q2_range, q3_range: Moduli to scan
        table: Arithmetic tables
        policy: Residue policy for the maxima
        seed: Seed for residue sampling
        pmax: Singular series truncation
        threads: Worker pool size
        crossover: Direct/FFT switch override

    Returns:
        DeviationScan with rows sorted by rel_dev descending
    """
    require_range(table, n, "n")
    if not (q1_range and q2_range and q3_range):
        return DeviationScan(n=n)

    def residues_of(q: int) -> tuple[list[int], bool]:
        return scan_residues(q, policy, seed)

    q1_cells = [(q1, *residues_of(q1)) for q1 in sorted(set(q1_range))]
    cells = []
    for q3 in sorted(set(q3_range)):
        a3s, sampled3 = residues_of(q3)
        for q2 in sorted(set(q2_range)):
            a2s, sampled2 = residues_of(q2)
            cells.extend((q3, a3, q2, a2, sampled3 or sampled2) for a3 in a3s for a2 in a2s)

    logger.info("Deviation scan n=%d: %d J2 cells", n, len(cells))
    worker = partial(_scan_cell, n, q1_cells, table, pmax, crossover)
    rows = [row for chunk in map_ordered(worker, cells, threads) for row in chunk]

    per_a3: dict[str, float] = {}
    nested: dict[tuple[int, int], dict[int, dict[int, float]]] = {}
    inner: dict[tuple[int, int, int, int, int], float] = {}
    for row in rows:
        key = (row.q3, row.a3, row.q2, row.a2, row.q1)
        inner[key] = max(inner.get(key, 0.0), row.abs_dev)
    for (q3, a3, q2, a2, _q1), value in inner.items():
        by_q2 = nested.setdefault((q3, a3), {}).setdefault(q2, {})
        by_q2[a2] = by_q2.get(a2, 0.0) + value
    for (q3, a3), by_q2 in nested.items():
        per_a3[f"{q3}:{a3}"] = math.fsum(max(sums.values()) for sums in by_q2.values())

    sampled_cells = sum(1 for row in rows if row.sampled)
    if sampled_cells:
        logger.warning("%d scan rows use a sampled residue maximum", sampled_cells)

    rows.sort(key=lambda r: (-r.rel_dev, r.q1, r.a1, r.q2, r.a2, r.q3, r.a3))
    return DeviationScan(
        n=n,
        rows=rows,
        per_a3=per_a3,
        aggregate=max(per_a3.values(), default=0.0),
        sampled_cells=sampled_cells,
        row_count=len(rows),
    )
