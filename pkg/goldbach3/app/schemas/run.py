"""Run configuration schemas for the command line front end."""

from enum import Enum
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, model_validator

from goldbach3.app.schemas.counting import Engine, ResiduePolicy


class OutputFormat(str, Enum):
    CSV = "csv"
    JSON = "json"


class RunConfig(BaseModel):
    """Fully resolved configuration of one CLI invocation.

    Echoed into every output header, so it must not contain anything that
    differs between identical runs.
    """

    model_config = ConfigDict(extra="forbid")

    command: str
    action: str | None = None
    n: int | None = None
    q1: int | None = None
    a1: int | None = None
    q2: int | None = None
    a2: int | None = None
    q3: int | None = None
    a3: int | None = None
    q1_range: list[int] | None = None
    q2_range: list[int] | None = None
    q3_range: list[int] | None = None
    residues: ResiduePolicy | None = None
    x: float | None = None
    h: int | None = None
    U: int | None = None
    D: float | None = None
    R: float | None = None
    N: int | None = Field(None, description="Grid size for arc computations")
    Q: int | None = None
    H: float | None = None
    d: int | None = None
    n_values: list[int] | None = None
    Q_values: list[int] | None = None
    H_values: list[float] | None = None
    d_values: list[int] | None = None
    q_values: list[int] | None = None
    partial_Q: int | None = None
    weights: str | None = None
    limit: int | None = None
    pmax: int | None = None
    engine: Engine | None = None
    method: str | None = None
    output_format: OutputFormat = OutputFormat.CSV
    output: Path | None = None
    seed: int = 0
    threads: int | None = Field(None, ge=1)
    cache_dir: Path | None = None

    @model_validator(mode="after")
    def _positive_sizes(self) -> "RunConfig":
        for name in ("R", "N", "Q", "H", "pmax", "limit"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                msg = f"{name} must be positive, got {value}"
                raise ValueError(msg)
        for name in (
            "q1_range",
            "q2_range",
            "q3_range",
            "Q_values",
            "H_values",
            "d_values",
            "q_values",
        ):
            values = getattr(self, name)
            if values and min(values) <= 0:
                msg = f"{name} entries must be positive"
                raise ValueError(msg)
        return self

    def header_dict(self) -> dict:
        """Config as echoed in output headers; paths and pool size do not affect results."""
        return self.model_dump(
            mode="json", exclude_none=True, exclude={"output", "cache_dir", "threads"}
        )
