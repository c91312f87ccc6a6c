"""Chebyshev sums over progressions and the discrepancy Δ(x, h)."""

import logging
import math
from functools import partial

import numpy as np

from goldbach3.app.core.exceptions import InvalidArgumentError
from goldbach3.app.core.workers import map_ordered
from goldbach3.app.schemas.arith import MangoldtTable
from goldbach3.app.schemas.progressions import (
    BombieriVinogradovReport,
    DiscrepancyRecord,
)
from goldbach3.app.services.arith_service import phi, require_range

logger = logging.getLogger(__name__)


def reduced_residues(h: int) -> list[int]:
    """Residues l in [0, h) with gcd(l, h) = 1; [0] for h = 1."""
    if h == 1:
        return [0]
    return [l for l in range(1, h) if math.gcd(l, h) == 1]


def _check_progression(h: int, l: int) -> None:
    if h < 1:
        msg = f"modulus must be >= 1, got {h}"
        raise InvalidArgumentError(msg)
    if not 0 <= l < h:
        msg = f"residue {l} is not in [0, {h})"
        raise InvalidArgumentError(msg)


def psi(y: float, h: int, l: int, table: MangoldtTable) -> float:
    """
    Σ_{m<=y, m≡l (h)} Λ(m).

    Args:
        y: Real upper bound
        h: Modulus
        l: Residue, 0 <= l < h
        table: Arithmetic tables covering y

    Returns:
        Exact sum of the stored Λ values over the progression
    """
    _check_progression(h, l)
    require_range(table, y, "y")
    if y < 1:
        return 0.0
    return float(table.mangoldt[l : math.floor(y) + 1 : h].sum())


def discrepancy(x: float, h: int, table: MangoldtTable) -> DiscrepancyRecord:
    """
    Δ(x, h) = max_{y<=x} max_{(l,h)=1} |ψ(y; h, l) - y/φ(h)|.

    Between jumps |ψ - y/φ(h)| is monotone, so only the jump points, their
    left limits and y = x are candidates.

    Args:
        x: Real bound, 1 <= x <= table.limit
        h: Modulus
        table: Arithmetic tables

    Returns:
        DiscrepancyRecord with the first maximizing (l, y) in scan order
    """
    if h < 1 or x < 1:
        msg = f"discrepancy needs h >= 1 and x >= 1, got h={h}, x={x}"
        raise InvalidArgumentError(msg)
    require_range(table, x, "x")

    top = math.floor(x)
    phi_h = phi(h)
    best: DiscrepancyRecord | None = None

    for l in reduced_residues(h):
        ms = np.nonzero(table.exponent[l : top + 1 : h])[0] * h + l
        lam = table.mangoldt[ms]
        running = np.cumsum(lam)
        expected = ms / phi_h
        # interleave: left limit at m, value at m; then the endpoint y = x
        candidates = np.empty(2 * ms.size + 1)
        candidates[0:-1:2] = np.abs(running - lam - expected)
        candidates[1:-1:2] = np.abs(running - expected)
        candidates[-1] = abs((running[-1] if ms.size else 0.0) - x / phi_h)
        k = int(np.argmax(candidates))
        value = float(candidates[k])
        if best is not None and value <= best.value:
            continue
        if k == candidates.size - 1:
            argmax_y, left = float(x), False
        else:
            argmax_y, left = float(ms[k // 2]), k % 2 == 0
        best = DiscrepancyRecord(
            x=x, h=h, value=value, argmax_y=argmax_y, argmax_l=l, left_limit=left
        )

    assert best is not None
    return best


def discrepancy_profile(h: int, X: int, table: MangoldtTable) -> np.ndarray:
    """
    Δ(x, h) for every integer x in 1..X in one sweep.

    Returns:
        Array of length X; entry x - 1 holds Δ(x, h)
    """
    if h < 1 or X < 1:
        msg = f"discrepancy_profile needs h >= 1 and X >= 1, got h={h}, X={X}"
        raise InvalidArgumentError(msg)
    require_range(table, X, "X")

    phi_h = phi(h)
    xs = np.arange(X + 1, dtype=np.float64)
    best = np.zeros(X + 1)
    for l in reduced_residues(h):
        seq = np.zeros(X + 1)
        seq[l::h] = table.mangoldt[l : X + 1 : h]
        running = np.cumsum(seq)
        expected = xs / phi_h
        at_jump = np.where(
            seq > 0,
            np.maximum(np.abs(running - expected), np.abs(running - seq - expected)),
            0.0,
        )
        best = np.maximum(best, np.maximum.accumulate(at_jump))
        best = np.maximum(best, np.abs(running - expected))
    return best[1:]


def bv_sum(
    x: float,
    U: int,
    table: MangoldtTable,
    *,
    D: float = 1.0,
    threads: int | None = None,
) -> BombieriVinogradovReport:
    """
    Σ_{h<=U} Δ(x, h) with the comparison terms x/(log x)^D and U√x(log Ux)^6.

    Args:
        x: Real bound inside the table
        U: Largest modulus (U = 0 gives the empty sum)
        table: Arithmetic tables
        D: Exponent of the log-power term; report-only
        threads: Worker pool size

    Returns:
        BombieriVinogradovReport with one DiscrepancyRecord per h
    """
    if U < 0:
        msg = f"U must be >= 0, got {U}"
        raise InvalidArgumentError(msg)
    require_range(table, x, "x")

    rows = map_ordered(partial(_discrepancy_at, x, table), range(1, U + 1), threads)
    total = math.fsum(row.value for row in rows)
    logger.debug("bv_sum x=%s U=%d -> %s", x, U, total)

    log_power = x / math.log(x) ** D if x > 1 else None
    large_sieve = U * math.sqrt(x) * math.log(U * x) ** 6 if U * x > 1 else None
    return BombieriVinogradovReport(
        x=x,
        U=U,
        D=D,
        sum=total,
        rows=rows,
        log_power_term=log_power,
        large_sieve_term=large_sieve,
    )


def _discrepancy_at(x: float, table: MangoldtTable, h: int) -> DiscrepancyRecord:
    return discrepancy(x, h, table)
