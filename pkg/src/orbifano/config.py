from __future__ import annotations

from pathlib import Path
from typing import Literal, Optional

from dotenv import load_dotenv
from pydantic import Field, field_validator
from pydantic_settings import BaseSettings

# Load .env early for CLI usage
load_dotenv(override=False)


LogLevel = Literal["DEBUG", "INFO", "WARNING", "ERROR"]
MMPMode = Literal["raw", "curated"]


class Settings(BaseSettings):
    registry_path: Optional[Path] = Field(default=None)
    log_level: LogLevel = Field(default="WARNING")
    mmp_mode: MMPMode = Field(default="raw")
    series_terms: int = Field(default=12)
    svg_scale: int = Field(default=40)
    progress: bool = Field(default=False)

    class Config:
        env_prefix = "ORBIFANO_"
        env_file = ".env"
        env_file_encoding = "utf-8"
        extra = "ignore"  # Ignore extra environment variables

    @field_validator("registry_path", mode="before")
    @classmethod
    def _registry_optional(cls, v: object) -> Optional[Path]:
        """Empty string means the embedded registry."""
        if v is None or (isinstance(v, str) and v.strip() == ""):
            return None
        return Path(v)  # type: ignore[arg-type]

    @field_validator("log_level", mode="before")
    @classmethod
    def _level_upper(cls, v: object) -> object:
        return v.upper() if isinstance(v, str) else v

    @field_validator("series_terms")
    @classmethod
    def _terms_positive(cls, v: int) -> int:
        if v < 1:
            raise ValueError("series_terms must be at least 1")
        return v

    @field_validator("svg_scale")
    @classmethod
    def _scale_minimum(cls, v: int) -> int:
        if v < 4:
            raise ValueError("svg_scale must be at least 4")
        return v


settings = Settings()
