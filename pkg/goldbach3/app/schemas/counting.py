"""Representation count and deviation scan schemas."""

from enum import Enum

from pydantic import BaseModel, Field, model_validator

from goldbach3.app.schemas.ramanujan import Constraint


class RepCounts(BaseModel):
    """Exact representation counts for one constraint.

    w1..w4 split the prime-power defect W by exponents (l, j, k) of
    (m1, m2, m3): (1) l,j >= 2, (2) l = 1, j >= 2, (3) l >= 2, j = 1,
    (4) l = j = 1, k >= 2.
    """

    n: int
    constraint: Constraint
    j3: float = 0.0
    r3big: float = 0.0
    r3: int = Field(0, ge=0)
    w1: int = 0
    w2: int = 0
    w3: int = 0
    w4: int = 0
    w_total: int = 0

    @model_validator(mode="after")
    def _w_split(self) -> "RepCounts":
        if self.w_total != self.w1 + self.w2 + self.w3 + self.w4:
            msg = "w_total must equal w1 + w2 + w3 + w4"
            raise ValueError(msg)
        return self


class Engine(str, Enum):
    DIRECT = "direct"
    CONV = "conv"
    BOTH = "both"


class ResiduePolicy(str, Enum):
    """How the max over residues is taken in scans."""

    AUTO = "auto"
    EXHAUSTIVE = "exhaustive"
    SAMPLED = "sampled"


class DeviationRow(BaseModel):
    """J3 against the main term for one constraint."""

    n: int
    q1: int
    a1: int
    q2: int
    a2: int
    q3: int
    a3: int
    j3: float
    s3_lower: float
    s3_upper: float
    s3_mid: float
    main: float
    abs_dev: float
    rel_dev: float
    sampled: bool = False


class DeviationScan(BaseModel):
    """Rows sorted by rel_dev descending plus the nested aggregate.

    ``per_a3`` holds Σ_{q2} max_{a2} Σ_{q1} max_{a1} |dev| for each
    (q3, a3) cell; ``aggregate`` is the largest of them.
    """

    n: int
    rows: list[DeviationRow] = Field(default_factory=list)
    per_a3: dict[str, float] = Field(default_factory=dict)
    aggregate: float = 0.0
    sampled_cells: int = 0
    row_count: int = 0
