"""Progression sum and discrepancy schemas."""

from pydantic import BaseModel, Field


class DiscrepancyRecord(BaseModel):
    """Δ(x, h) together with where the maximum is attained.

    When ``left_limit`` is true the maximum is the limit y -> argmax_y from
    the left, i.e. just before the jump at argmax_y.
    """

    x: float
    h: int = Field(..., ge=1)
    value: float
    argmax_y: float
    argmax_l: int
    left_limit: bool = False


class BombieriVinogradovReport(BaseModel):
    """Σ_{h<=U} Δ(x, h) with the two comparison quantities.

    The comparison terms are report-only; ``None`` when undefined
    (x <= 1 for the log-power term, U = 0 for the large-sieve term).
    """

    x: float
    U: int = Field(..., ge=0)
    D: float
    sum: float
    rows: list[DiscrepancyRecord] = Field(default_factory=list)
    log_power_term: float | None = None
    large_sieve_term: float | None = None
