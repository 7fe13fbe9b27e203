"""Tuning lab configuration."""

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class LabSettings(BaseSettings):
    """Campaign-level defaults, overridable from the environment.

    Every field can be set with a ``TUNING_LAB_`` prefixed variable
    (e.g. ``TUNING_LAB_WORKERS=4``) or from a ``.env`` file. Values given
    in a campaign file always win over these defaults.
    """

    model_config = SettingsConfigDict(
        env_prefix="TUNING_LAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    runs: int = Field(
        default=20, ge=1, description="Runs per configuration (N)"
    )
    budget: int = Field(
        default=140, ge=1, description="Iteration budget per run"
    )
    intervals: int = Field(
        default=14, ge=1, description="Number of APC intervals (n)"
    )
    z_l: float = Field(default=4.0, ge=1.0, description="Weight of F_A")
    workers: int = Field(default=1, ge=1, description="Worker processes")
    oracle_limit: int = Field(
        default=10_000_000,
        ge=1,
        description="Largest cardinality the brute-force oracle enumerates",
    )
    validation_runs: int = Field(
        default=50, ge=1, description="Runs of the final validation"
    )
    drop_threshold: float = Field(
        default=0.25,
        ge=0.0,
        le=1.0,
        description="Phase-2 share of the group-mean span that is kept",
    )
    tolerance: float = Field(
        default=1e-9, ge=0.0, description="Success tolerance vs the oracle"
    )

    log_level: str = Field(default="INFO", description="Log level")
    log_format: str = Field(
        default="json", description="Log format: json or text"
    )


def get_settings() -> LabSettings:
    """Get tuning lab settings."""
    return LabSettings()
