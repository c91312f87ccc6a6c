"""Application configuration."""

from pathlib import Path

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings.

    Every field can be overridden with a ``GOLDBACH3_``-prefixed environment
    variable or a ``.env`` file, e.g. ``GOLDBACH3_CACHE_DIR``.
    """

    model_config = SettingsConfigDict(
        env_prefix="GOLDBACH3_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    app_name: str = "goldbach3"
    app_version: str = "0.1.0"
    debug: bool = False
    log_level: str = "WARNING"

    # Tables
    cache_dir: Path = Path("./.g3cache")
    table_ceiling: int = 10**8
    oracle_ceiling: int = 10**5

    # Singular series
    default_pmax: int = 10**5

    # Convolution engine
    conv_crossover: int = 2**14
    conv_spot_checks: int = 16

    # Deviation scans
    exact_residue_limit: int = 64
    sampled_residues: int = 32

    # Numerics
    tolerance: float = 1e-9

    # Workers (None means os.cpu_count())
    threads: int | None = None


settings = Settings()
