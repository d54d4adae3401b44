"""
Configuration module - Loads and validates precision and run settings.
"""

import os
from typing import Optional
from dotenv import load_dotenv


class ConfigError(Exception):
    """Exception raised for configuration errors."""
    pass


_LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


class Config:
    """Application configuration read from the environment (and an optional .env file)."""

    def __init__(self, env_file: Optional[str] = None) -> None:
        """
        Initialize configuration.

        Args:
            env_file: Path to .env file (optional)

        Raises:
            ConfigError: If a setting is malformed or out of range
        """
        # Load environment variables
        if env_file:
            if not os.path.exists(env_file):
                raise ConfigError(f"Environment file not found: {env_file}")
            load_dotenv(env_file)
        else:
            load_dotenv()

        self.precision = self._read_int("LNK_PRECISION", 128)
        self.precision_cap = self._read_int("LNK_PRECISION_CAP", 4096)
        self.log_level = os.getenv("LNK_LOG_LEVEL", "INFO").upper()
        self.selftest_scale = self._read_float("LNK_SELFTEST_SCALE", 1.0)

        # Validate configuration
        self._validate()

    @staticmethod
    def _read_int(name: str, default: int) -> int:
        raw = os.getenv(name)
        if raw is None or raw.strip() == "":
            return default
        try:
            return int(raw)
        except ValueError as e:
            raise ConfigError(f"{name} must be an integer, got {raw!r}") from e

    @staticmethod
    def _read_float(name: str, default: float) -> float:
        raw = os.getenv(name)
        if raw is None or raw.strip() == "":
            return default
        try:
            return float(raw)
        except ValueError as e:
            raise ConfigError(f"{name} must be a number, got {raw!r}") from e

    def _validate(self) -> None:
        """
        Validate the settings.

        Raises:
            ConfigError: If validation fails
        """
        if self.precision < 16:
            raise ConfigError(f"LNK_PRECISION must be at least 16 bits, got {self.precision}")

        if self.precision_cap < self.precision:
            raise ConfigError(
                f"LNK_PRECISION_CAP ({self.precision_cap}) must not be below "
                f"LNK_PRECISION ({self.precision})"
            )

        if self.log_level not in _LOG_LEVELS:
            raise ConfigError(
                f"LNK_LOG_LEVEL must be one of {', '.join(_LOG_LEVELS)}, got {self.log_level}"
            )

        if not 0 < self.selftest_scale <= 1:
            raise ConfigError(
                f"LNK_SELFTEST_SCALE must lie in (0, 1], got {self.selftest_scale}"
            )

    def override(
        self,
        precision: Optional[int] = None,
        precision_cap: Optional[int] = None,
    ) -> "Config":
        """
        Apply command-line overrides and re-validate.

        Args:
            precision: Starting precision in bits
            precision_cap: Escalation cap in bits

        Returns:
            self
        """
        if precision is not None:
            self.precision = precision
            if precision_cap is None and self.precision_cap < precision:
                self.precision_cap = precision
        if precision_cap is not None:
            self.precision_cap = precision_cap
        self._validate()
        return self

    def __repr__(self) -> str:
        """Config representation."""
        return (
            f"Config(precision={self.precision}, precision_cap={self.precision_cap}, "
            f"log_level={self.log_level}, selftest_scale={self.selftest_scale})"
        )
