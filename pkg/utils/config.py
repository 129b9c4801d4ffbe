"""Configuration management for the Nichols algebra engine."""

import os

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

RANK_METHODS = ("exact", "multipoint")
HEIGHT_CONVENTIONS = ("characteristic-zero", "literal")
OUTPUT_FORMATS = ("text", "json", "csv")


class Settings(BaseSettings):
    """Engine settings loaded from environment variables or a key=value file."""

    model_config = SettingsConfigDict(
        env_prefix="NICHOLS_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore",
    )

    # Database
    database_url: str = Field(default="sqlite:///./nichols_results.db")
    store_results: bool = Field(default=False)

    # Degree budgets
    max_degree: int = Field(default=10, ge=1, le=24)
    max_letters: int = Field(default=14, ge=1, le=24)
    series_order: int = Field(default=7, ge=1, le=16)
    construction_order: int = Field(default=6, ge=2, le=16)

    # Linear algebra
    rank_method: str = Field(default="multipoint")
    rank_points: int = Field(default=3, ge=1, le=32)
    rank_seed: int = Field(default=1)
    height_convention: str = Field(default="characteristic-zero")
    cache_size: int = Field(default=200000, ge=0)

    # Output
    jobs: int = Field(default=1, ge=1, le=64)
    output_format: str = Field(default="text")
    include_timings: bool = Field(default=False)
    debug: bool = Field(default=False)

    @field_validator("rank_method")
    @classmethod
    def validate_rank_method(cls, v: str) -> str:
        if v.lower() not in RANK_METHODS:
            raise ValueError(f"Rank method must be one of: {list(RANK_METHODS)}")
        return v.lower()

    @field_validator("height_convention")
    @classmethod
    def validate_height_convention(cls, v: str) -> str:
        if v.lower() not in HEIGHT_CONVENTIONS:
            raise ValueError(
                f"Height convention must be one of: {list(HEIGHT_CONVENTIONS)}"
            )
        return v.lower()

    @field_validator("output_format")
    @classmethod
    def validate_output_format(cls, v: str) -> str:
        if v.lower() not in OUTPUT_FORMATS:
            raise ValueError(f"Output format must be one of: {list(OUTPUT_FORMATS)}")
        return v.lower()

    @property
    def database_label(self) -> str:
        """Database URL without credentials, for log lines."""
        url = self.database_url
        return url.split("@")[-1] if "@" in url else url


def load_settings(path: str | None = None) -> Settings:
    """Build settings from a key=value file, falling back to NICHOLS_CONFIG."""
    path = path or os.environ.get("NICHOLS_CONFIG")
    if not path:
        return Settings()
    if not os.path.exists(path):
        raise ValueError(f"Config file not found: {path}")
    return Settings(_env_file=path)


# Global settings instance
settings = load_settings()
