"""
Runtime configuration.

Values come from the environment (a `.env` file in the working directory is
loaded first) and can be overridden programmatically, e.g. by the CLI flags
`--max-order` and `--workers`.

    SUBCENSUS_MAX_ORDER        order cap for constructed groups (default 2048)
    SUBCENSUS_LOG              log level: DEBUG, INFO, WARNING, ERROR (default WARNING)
    SUBCENSUS_WORKERS          processes used by catalog verification (default 1)
    SUBCENSUS_EXHAUSTIVE_ASSOC largest order checked for associativity over all triples (default 128)
"""

from __future__ import annotations

import logging
import os
import typing

from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, field_validator

_LEVELS = ("DEBUG", "INFO", "WARNING", "WARN", "ERROR", "CRITICAL")


class Settings(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_order: int = Field(default=2048, ge=1)
    log_level: str = "WARNING"
    workers: int = Field(default=1, ge=1)
    exhaustive_assoc_limit: int = Field(default=128, ge=1)

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        level = value.strip().upper()
        if level not in _LEVELS:
            raise ValueError(f"Invalid log level: {value}. Must be one of {', '.join(_LEVELS)}")
        return "WARNING" if level == "WARN" else level

    @classmethod
    def from_env(cls) -> "Settings":
        """Build settings from environment variables (after loading .env)"""
        load_dotenv()
        raw: typing.Dict[str, str] = {}
        for field, var in (
            ("max_order", "SUBCENSUS_MAX_ORDER"),
            ("log_level", "SUBCENSUS_LOG"),
            ("workers", "SUBCENSUS_WORKERS"),
            ("exhaustive_assoc_limit", "SUBCENSUS_EXHAUSTIVE_ASSOC"),
        ):
            if os.environ.get(var):
                raw[field] = os.environ[var]
        return cls.model_validate(raw)


_settings: typing.Optional[Settings] = None


def get_settings() -> Settings:
    """Return the active settings, reading the environment on first use"""
    global _settings
    if _settings is None:
        _settings = Settings.from_env()
    return _settings


def configure(**overrides: typing.Any) -> Settings:
    """Replace selected settings fields; returns the new settings"""
    global _settings
    current = get_settings()
    _settings = Settings.model_validate({**current.model_dump(), **overrides})
    return _settings


def reset_settings() -> None:
    """Forget overrides; the environment is read again on next use"""
    global _settings
    _settings = None


def max_order(cap: typing.Optional[int] = None) -> int:
    """Resolve an explicit cap argument against the configured one"""
    return get_settings().max_order if cap is None else cap


def setup_logging() -> None:
    """Configure the root logger at the configured level"""
    logging.basicConfig(
        level=getattr(logging, get_settings().log_level),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
