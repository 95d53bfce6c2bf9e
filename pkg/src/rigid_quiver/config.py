"""Configuration loading and validation for rigid-quiver."""

import logging
import os
import re
import sys
from pathlib import Path
from typing import Literal, Optional

import yaml
from pydantic import BaseModel, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger(__name__)

DEFAULT_PRIME = 32003
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


def is_prime(p: int) -> bool:
    """Trial-division primality test (p is small)."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class FieldSettings(BaseModel):
    """Default coefficient field for explicit representations."""

    default: Literal["prime", "rationals"] = Field(
        default="prime", description="Field used when --field is not given"
    )
    prime: int = Field(default=DEFAULT_PRIME, description="Characteristic of the prime field")

    @field_validator("prime")
    @classmethod
    def validate_prime(cls, v: int) -> int:
        """Reject composite characteristics."""
        if not is_prime(v):
            raise ValueError(f"Field characteristic must be prime, got {v}")
        return v


class OracleConfig(BaseModel):
    """Brute-force oracle limits."""

    max_total_dim: int = Field(
        default=14, ge=0, le=40, description="Largest total dimension the DFS oracle accepts"
    )


class VerificationConfig(BaseModel):
    """Sizes of the batch verification suites."""

    max_total_dim: int = Field(
        default=6, ge=0, description="Total-dimension bound for oracle sweeps on type A"
    )
    samples: int = Field(default=200, ge=0, description="Random representations per case")
    random_cases: int = Field(default=100, ge=0, description="Random cases per rank suite")
    closed_form_cases: int = Field(default=500, ge=0, description="Equioriented cases")
    single_sink_cases: int = Field(default=200, ge=0, description="Single-sink cases")
    structural_cases: int = Field(default=100, ge=0, description="Random d per large quiver")
    max_rank: int = Field(default=8, ge=1, le=8, description="Largest rank in the battery")


class LoggingConfig(BaseModel):
    """Log verbosity; --verbose overrides it with DEBUG."""

    level: str = Field(default="WARNING", description="DEBUG, INFO, WARNING, ERROR or CRITICAL")

    @field_validator("level")
    @classmethod
    def validate_level(cls, v: str) -> str:
        level = v.strip().upper()
        if level not in LOG_LEVELS:
            raise ValueError(f"Log level must be one of {', '.join(LOG_LEVELS)}, got {v!r}")
        return level


class Config(BaseSettings):
    """Main configuration for rigid-quiver.

    Environment variables use the ``RIGIDQ_`` prefix; ``RIGIDQ_SEED`` is the
    seed fallback for randomized commands.
    """

    model_config = SettingsConfigDict(
        env_prefix="RIGIDQ_",
        env_nested_delimiter="__",
    )

    seed: int = Field(default=20240601, ge=0, lt=2**64, description="Default random seed")
    field: FieldSettings = Field(default_factory=FieldSettings)
    oracle: OracleConfig = Field(default_factory=OracleConfig)
    verification: VerificationConfig = Field(default_factory=VerificationConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)

    @classmethod
    def from_yaml(cls, path: Path | str) -> "Config":
        """Read a rigidq.yaml file; an empty file gives the defaults.

        Raises:
            FileNotFoundError: If the file is missing
            ValueError: If the top level is not a mapping or a value is invalid
        """
        path = Path(path)
        if not path.is_file():
            raise FileNotFoundError(f"Configuration file not found: {path}")

        data = yaml.safe_load(path.read_text()) or {}
        if not isinstance(data, dict):
            raise ValueError(f"{path}: expected a mapping of sections, got {type(data).__name__}")
        return cls(**_expand_env(data))

    @classmethod
    def find_config(cls) -> Optional[Path]:
        """First of ./rigidq.yaml, ./rigidq.yml, ~/.config/rigid-quiver/config.yaml that exists."""
        return next((p for p in _search_paths() if p.is_file()), None)

    @classmethod
    def load(cls, config_path: Optional[Path | str] = None) -> "Config":
        """An explicit file, else the first file found, else defaults plus environment.

        Raises:
            FileNotFoundError: If an explicit path is given but not found
        """
        path = Path(config_path) if config_path else cls.find_config()
        if path is None:
            logger.debug("No configuration file; using defaults")
            return cls()
        logger.debug(f"Loading configuration from {path}")
        return cls.from_yaml(path)


def _search_paths() -> tuple[Path, ...]:
    return (
        Path("rigidq.yaml"),
        Path("rigidq.yml"),
        Path.home() / ".config" / "rigid-quiver" / "config.yaml",
    )


_ENV_REF = re.compile(r"^\$\{(\w+)(?::-(.*))?\}$")


def _expand_env(value):
    """Replace ``${VAR}`` or ``${VAR:-default}`` string values from the environment.

    An unset variable without a default keeps the reference text, so pydantic
    reports it against the field it was meant for.
    """
    if isinstance(value, dict):
        return {key: _expand_env(item) for key, item in value.items()}
    if isinstance(value, list):
        return [_expand_env(item) for item in value]
    if isinstance(value, str):
        match = _ENV_REF.match(value)
        if match:
            name, default = match.groups()
            return os.environ.get(name, value if default is None else default)
    return value


LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(config: Config, log_file: Optional[Path] = None) -> None:
    """Route log records to stderr, and to log_file when given, at config.logging.level."""
    level = getattr(logging, config.logging.level)
    formatter = logging.Formatter(LOG_FORMAT, "%Y-%m-%d %H:%M:%S")

    # stdout carries tables and JSON
    handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if log_file:
        log_file = Path(log_file)
        log_file.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file))

    root = logging.getLogger()
    root.handlers.clear()
    root.setLevel(level)
    for handler in handlers:
        handler.setLevel(level)
        handler.setFormatter(formatter)
        root.addHandler(handler)
