"""Configuration management for zeta linear form runs."""

import os
import tomllib
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional

from dotenv import load_dotenv
from loguru import logger

from src.errors import InvalidInputError

BACKENDS = ("auto", "enumeration", "reduction")


@dataclass
class LoggingConfig:
    """Logging configuration."""

    level: str = "INFO"
    log_file: Optional[str] = None

    def __post_init__(self):
        """Ensure log directory exists."""
        if self.log_file:
            Path(self.log_file).parent.mkdir(parents=True, exist_ok=True)


@dataclass
class PerformanceConfig:
    """Parallelism settings for verification grids."""

    max_workers: int = 1


@dataclass
class Settings:
    """Process-wide defaults read from the environment."""

    logging: LoggingConfig
    performance: PerformanceConfig
    precision: int = 60
    backend: str = "auto"
    seed: int = 20240101

    @classmethod
    def from_env(cls) -> "Settings":
        """Load settings from environment variables (and a .env file if present)."""
        load_dotenv()

        logging_config = LoggingConfig(
            level=os.getenv("LOG_LEVEL", "INFO"),
            log_file=os.getenv("LOG_FILE") or None,
        )
        performance = PerformanceConfig(max_workers=int(os.getenv("MAX_WORKERS", "1")))

        settings = cls(
            logging=logging_config,
            performance=performance,
            precision=int(os.getenv("ZETAFORMS_DIGITS", "60")),
            backend=os.getenv("ZETAFORMS_BACKEND", "auto"),
            seed=int(os.getenv("ZETAFORMS_SEED", "20240101")),
        )
        if settings.backend not in BACKENDS:
            logger.warning(f"Unknown backend {settings.backend!r}, falling back to auto")
            settings.backend = "auto"
        if settings.precision < 10:
            raise InvalidInputError(
                f"ZETAFORMS_DIGITS must be at least 10, got {settings.precision}"
            )

        logger.debug("Settings loaded from environment")
        return settings

    def log_summary(self) -> None:
        """Log a summary of the active settings."""
        logger.info(f"Precision: {self.precision} digits")
        logger.info(f"Backend: {self.backend}")
        logger.info(f"Workers: {self.performance.max_workers}")
        logger.info(f"Log level: {self.logging.level}")


@dataclass
class RunConfig:
    """One run: validated parameters plus execution options."""

    params: Any
    precision: int
    backend: str = "auto"
    weighted_rows: bool = False
    oracle_checks: bool = True
    outputs: Dict[str, str] = field(default_factory=dict)
    source: Optional[Path] = None

    @classmethod
    def from_toml(cls, path: Path, settings: Optional["Settings"] = None) -> "RunConfig":
        """Read a TOML run file with a ``[params]`` table and an optional ``[run]`` table.

        Args:
            path: TOML file location
            settings: Defaults for options missing from ``[run]``

        Returns:
            Validated run configuration

        Raises:
            OSError: If the file cannot be read
            tomllib.TOMLDecodeError: If the file is not valid TOML
            pydantic.ValidationError: If ``[params]`` fails validation
        """
        from src.construct.params import Params

        settings = settings or get_settings()
        with open(path, "rb") as fh:
            raw = tomllib.load(fh)

        if "params" not in raw:
            raise InvalidInputError(f"{path} has no [params] table")
        params = Params.model_validate(raw["params"])
        run = raw.get("run", {})

        backend = run.get("backend", settings.backend)
        if backend not in BACKENDS:
            raise InvalidInputError(f"backend must be one of {BACKENDS}, got {backend!r}")

        config = cls(
            params=params,
            precision=int(run.get("precision", settings.precision)),
            backend=backend,
            weighted_rows=bool(run.get("weighted_rows", False)),
            oracle_checks=bool(run.get("oracle_checks", True)),
            outputs={str(k): str(v) for k, v in run.get("outputs", {}).items()},
            source=Path(path),
        )
        logger.info(f"Loaded run config from {path}: {params.describe()}")
        return config


# Global settings instance
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get or create global settings instance."""
    global _settings
    if _settings is None:
        _settings = Settings.from_env()
    return _settings


def reload_settings() -> Settings:
    """Reload settings from environment."""
    global _settings
    _settings = Settings.from_env()
    return _settings
