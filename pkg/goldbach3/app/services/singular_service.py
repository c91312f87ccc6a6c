"""Case classification, the singular series and admissible-residue constructions."""

import logging
import math
from functools import lru_cache

import numpy as np

from goldbach3.app.config import settings
from goldbach3.app.core.exceptions import (
    ImpossibleRequestError,
    InvalidArgumentError,
)
from goldbach3.app.schemas.arith import CongruenceSystem
from goldbach3.app.schemas.ramanujan import Constraint
from goldbach3.app.schemas.singular import (
    AdmissibilityVerdict,
    CaseLabel,
    ConstructionResult,
    PartialSeries,
    PrimeCase,
    SingularSeriesValue,
    ZeroReason,
    ZeroReasonKind,
)
from goldbach3.app.services import arith_service, ramanujan_service

logger = logging.getLogger(__name__)

# relative float slack added on both sides of the enclosure
_ROUNDING = 1e-13


def general_condition(c: Constraint) -> bool:
    """n ≡ a1 + a2 + a3 (mod gcd(q1, q2, q3))."""
    return (c.n - sum(c.residues)) % c.d == 0


def _local_factor(p: int, label: CaseLabel) -> float:
    if label in (CaseLabel.A, CaseLabel.D):
        return 1.0 - 1.0 / (p - 1) ** 2
    if label == CaseLabel.B:
        return 1.0 + 1.0 / (p - 1) ** 3
    if label in (CaseLabel.C, CaseLabel.F):
        return p / (p - 1)
    return 0.0


def classify_prime(p: int, c: Constraint) -> PrimeCase:
    """
    Label p as FINITE_PART or one of A..F and attach its Euler factor.

    FINITE_PART carries p^ν with p^ν || (q1, q2, q3); the other labels carry
    1 + λ(p).
    """
    if p < 2:
        msg = f"{p} is not prime"
        raise InvalidArgumentError(msg)
    dividing = [j for j, q_j in enumerate(c.moduli) if q_j % p == 0]
    witness = [j + 1 for j in dividing]

    if len(dividing) == 3:
        nu = arith_service.valuation(c.d, p)
        return PrimeCase(
            p=p, label=CaseLabel.FINITE_PART, witness=witness, factor=float(p**nu)
        )
    if not dividing:
        label = CaseLabel.A if c.n % p == 0 else CaseLabel.B
    elif len(dividing) == 1:
        hit = (c.n - c.residues[dividing[0]]) % p == 0
        label = CaseLabel.C if hit else CaseLabel.D
    else:
        j, k = dividing
        hit = (c.n - c.residues[j] - c.residues[k]) % p == 0
        label = CaseLabel.E if hit else CaseLabel.F
    return PrimeCase(p=p, label=label, witness=witness, factor=_local_factor(p, label))


def classified_primes(c: Constraint) -> list[int]:
    """Primes dividing 2 n q1 q2 q3, ascending."""
    primes = {2}
    for value in (c.n, *c.moduli):
        if value:
            primes.update(arith_service.prime_divisors(abs(value)))
    return sorted(primes)


def classify(c: Constraint) -> list[PrimeCase]:
    return [classify_prime(p, c) for p in classified_primes(c)]


def zero_reason(c: Constraint, cases: list[PrimeCase] | None = None) -> ZeroReason | None:
    """
    First reason the singular series vanishes, or None.

    The congruence is checked first, then primes in ascending order: case E
    at any prime, or p = 2 in case A or D.
    """
    if not general_condition(c):
        return ZeroReason(kind=ZeroReasonKind.GENERAL_CONDITION_FAILED)
    for case in cases if cases is not None else classify(c):
        if case.label == CaseLabel.E:
            return ZeroReason(kind=ZeroReasonKind.E_CASE, prime=case.p)
        if case.p == 2 and case.label in (CaseLabel.A, CaseLabel.D):
            return ZeroReason(kind=ZeroReasonKind.P2_VANISHING, prime=2)
    return None


@lru_cache(maxsize=8)
def _generic_log_sum(pmax: int) -> float:
    """Σ log(1 + 1/(p-1)^3) over primes p <= pmax."""
    spf = arith_service.smallest_prime_factors(pmax)
    idx = np.arange(pmax + 1)
    primes = np.nonzero((spf == idx) & (idx >= 2))[0]
    logs = np.log1p(1.0 / (primes.astype(np.float64) - 1.0) ** 3)
    return math.fsum(logs.tolist())


def tail_constant(pmax: int) -> float:
    """exp(1/(2(pmax-1)^2)), an upper bound for the B product beyond pmax."""
    return math.exp(1.0 / (2.0 * (pmax - 1) ** 2))


def singular_series(c: Constraint, pmax: int | None = None) -> SingularSeriesValue:
    """
    Enclose the singular series.

    The classified primes (dividing 2 n q1 q2 q3) contribute their exact
    factors; every other prime p <= pmax contributes 1 + 1/(p-1)^3. The
    omitted primes beyond pmax multiply by at most tail_constant(pmax).

    Args:
        c: Constraint
        pmax: Truncation bound (>= 3); defaults to settings.default_pmax

    Returns:
        SingularSeriesValue; zero_reason set means lower = upper = 0
    """
    pmax = settings.default_pmax if pmax is None else pmax
    if pmax < 3:
        msg = f"pmax must be >= 3, got {pmax}"
        raise InvalidArgumentError(msg)

    cases = classify(c)
    reason = zero_reason(c, cases)
    if reason is not None:
        logger.debug("Singular series vanishes: %s", reason)
        return SingularSeriesValue(
            lower=0.0,
            upper=0.0,
            finite_part=0.0,
            pmax=pmax,
            zero_reason=reason,
            cases=cases,
        )

    finite_part = 1.0
    log_product = _generic_log_sum(pmax)
    for case in cases:
        if case.p <= pmax:
            log_product -= math.log1p(1.0 / (case.p - 1) ** 3)
        if case.label == CaseLabel.B:
            log_product += math.log(case.factor)
        else:
            finite_part *= case.factor
    product = finite_part * math.exp(log_product)

    lower = product * (1.0 - _ROUNDING)
    upper = product * tail_constant(pmax) * (1.0 + _ROUNDING)
    return SingularSeriesValue(
        lower=lower, upper=upper, finite_part=finite_part, pmax=pmax, cases=cases
    )


def series_magnitude_bound(c: Constraint) -> float:
    """
    (q1,q2)(q1,q3)(q2,q3)/d · τ(q1)^4 τ(q2)^4 τ(q3)^4 (log n)^11.

    Structural size of the series from its absolute-convergence estimate;
    the implied constant is unknown, so this is report-only.
    """
    q1, q2, q3 = c.moduli
    pairwise = math.gcd(q1, q2) * math.gcd(q1, q3) * math.gcd(q2, q3) / c.d
    taus = math.prod(_tau(q) ** 4 for q in c.moduli)
    return pairwise * taus * math.log(max(abs(c.n), 3)) ** 11


def _tau(q: int) -> int:
    return math.prod(k + 1 for k in arith_service.factorize(q).values())


def tail_bound(c: Constraint, Q: int) -> float:
    """(1/Q) · series_magnitude_bound(c): size of Σ_{q>=Q} |λ(q)|, report-only."""
    return series_magnitude_bound(c) / Q


def series_partial_sum(c: Constraint, Q: int) -> PartialSeries:
    """
    Σ_{q<=Q} λ(q).

    Refuses (refused=True, value 0) when the congruence fails, since the
    series is defined to be 0 there.
    """
    if Q < 1:
        msg = f"Q must be >= 1, got {Q}"
        raise InvalidArgumentError(msg)
    if not general_condition(c):
        return PartialSeries(
            Q=Q,
            value=0.0,
            refused=True,
            reason=ZeroReasonKind.GENERAL_CONDITION_FAILED.value,
        )
    lam = ramanujan_service.lambda_table(Q, c)
    return PartialSeries(
        Q=Q, value=math.fsum(lam[1:].tolist()), tail_bound=tail_bound(c, Q)
    )


def is_admissible(c: Constraint) -> AdmissibilityVerdict:
    """
    Admissibility by classification.

    Reduced residues are guaranteed by Constraint; the verdict fails on the
    congruence or on the first vanishing prime.
    """
    cases = classify(c)
    reason = zero_reason(c, cases)
    if reason is None:
        return AdmissibilityVerdict(admissible=True)
    label = None
    if reason.prime is not None:
        label = next(case.label for case in cases if case.p == reason.prime)
    return AdmissibilityVerdict(
        admissible=False, reason=reason, prime=reason.prime, label=label
    )


def _smallest_shift(base: int, p: int) -> int:
    """Smallest h in [1, p-1] with base + h ≢ 0 (mod p)."""
    for h in range(1, p):
        if (base + h) % p:
            return h
    msg = f"no valid shift modulo {p}"
    raise ImpossibleRequestError(msg)


def _coprime_lift(residue: int, modulus: int, target: int) -> int:
    """Smallest x ≡ residue (mod modulus) in [0, target) with gcd(x, target) = 1."""
    if target == 1:
        return 0
    x = residue % modulus
    while x < target:
        if math.gcd(x, target) == 1:
            return x
        x += modulus
    msg = f"no residue modulo {target} coprime to it in class {residue} mod {modulus}"
    raise ImpossibleRequestError(msg)


def _require_odd(n: int) -> None:
    if n % 2 == 0:
        msg = f"n={n} is even: no admissible triple exists"
        raise ImpossibleRequestError(msg)


def construct_a2(n: int, q3: int, a3: int, q2: int) -> int:
    """
    An admissible a2 for (n; a3, q3) and q2.

    For every p | (q2, q3) choose the smallest h_p in [1, p-1] with
    n - a3 + h_p ≢ 0 (mod p) and require a2 ≡ n - a3 + h_p (mod p); return
    the smallest solution coprime to q2.

    Raises:
        ImpossibleRequestError: If n is even
        InvalidArgumentError: If a3 is not a reduced residue modulo q3
    """
    _require_odd(n)
    if q2 < 1 or q3 < 1 or not 0 <= a3 < q3 or math.gcd(a3, q3) != 1:
        msg = f"invalid (a3, q3) = ({a3}, {q3}) or q2 = {q2}"
        raise InvalidArgumentError(msg)

    congruences = []
    for p in arith_service.prime_divisors(math.gcd(q2, q3)):
        h = _smallest_shift(n - a3, p)
        congruences.append(((n - a3 + h) % p, p))
    solution = arith_service.crt_solve(CongruenceSystem.of(*congruences))
    a2 = _coprime_lift(solution.residue or 0, solution.modulus or 1, q2)
    logger.debug("construct_a2(n=%d, q3=%d, a3=%d, q2=%d) -> %d", n, q3, a3, q2, a2)
    return a2


def construct_a1(n: int, q3: int, a3: int, q2: int, a2: int, q1: int) -> int:
    """
    An a1 completing an admissible triple.

    Conditions, each a congruence for a1:
      modulo d = (q1, q2, q3): a1 ≡ n - a2 - a3;
      p | (q1, q3), p ∤ q2: a1 ≡ n - a3 + k_p (mod p), smallest valid k_p;
      p | (q1, q2), p ∤ q3: a1 ≡ n - a2 + l_p (mod p), smallest valid l_p;
    then the smallest solution coprime to q1.

    Raises:
        ImpossibleRequestError: If n is even, or a2 violates the condition
            n ≢ a2 + a3 (mod p) for some p | (q2, q3)
    """
    _require_odd(n)
    for a, q, name in ((a3, q3, "3"), (a2, q2, "2")):
        if q < 1 or not 0 <= a < q or math.gcd(a, q) != 1:
            msg = f"invalid (a{name}, q{name}) = ({a}, {q})"
            raise InvalidArgumentError(msg)
    if q1 < 1:
        msg = f"q1 must be >= 1, got {q1}"
        raise InvalidArgumentError(msg)

    for p in arith_service.prime_divisors(math.gcd(q2, q3)):
        if (n - a2 - a3) % p == 0:
            msg = f"a2={a2} fails n ≢ a2 + a3 at p={p}"
            raise ImpossibleRequestError(msg)

    d = math.gcd(q1, q2, q3)
    congruences = [((n - a2 - a3) % d, d)]
    for p in arith_service.prime_divisors(q1):
        if q3 % p == 0 and q2 % p:
            k = _smallest_shift(n - a3, p)
            congruences.append(((n - a3 + k) % p, p))
        elif q2 % p == 0 and q3 % p:
            l = _smallest_shift(n - a2, p)
            congruences.append(((n - a2 + l) % p, p))
    solution = arith_service.crt_solve(CongruenceSystem.of(*congruences))
    if not solution.compatible:
        msg = f"conditions on a1 are incompatible at entries {solution.conflict}"
        raise ImpossibleRequestError(msg)
    a1 = _coprime_lift(solution.residue or 0, solution.modulus or 1, q1)
    logger.debug("construct_a1(..., q1=%d) -> %d", q1, a1)
    return a1


def construct_triple(
    n: int, q3: int, a3: int, q2: int, q1: int | None = None
) -> ConstructionResult:
    """construct_a2, then construct_a1 when q1 is given."""
    a2 = construct_a2(n, q3, a3, q2)
    a1 = construct_a1(n, q3, a3, q2, a2, q1) if q1 is not None else None
    return ConstructionResult(n=n, q1=q1, a1=a1, q2=q2, a2=a2, q3=q3, a3=a3)
