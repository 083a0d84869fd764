"""Runtime settings read from the environment (and an optional .env file)."""

import logging
import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

from .errors import ConfigurationError

# Load environment variables
load_dotenv()

DEFAULT_MAX_VARS = 16
DEFAULT_MAX_CONTEXTS = 2 ** 20
DEFAULT_MAX_WORLDS = 2 ** 20
DEFAULT_TOTALITY_CAP = 2 ** 20


def _int_setting(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigurationError(f"{name} must be an integer, got {raw!r}")
    if value <= 0:
        raise ConfigurationError(f"{name} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class Settings:
    """Search and enumeration caps plus the log level."""

    max_vars: int = DEFAULT_MAX_VARS
    max_contexts: int = DEFAULT_MAX_CONTEXTS
    max_worlds: int = DEFAULT_MAX_WORLDS
    totality_cap: int = DEFAULT_TOTALITY_CAP
    log_level: str = 'WARNING'

    @classmethod
    def from_env(cls) -> 'Settings':
        level = os.getenv('CAUSET_LOG_LEVEL', 'WARNING').upper()
        if not isinstance(logging.getLevelName(level), int):
            raise ConfigurationError(f"CAUSET_LOG_LEVEL is not a log level: {level!r}")
        return cls(
            max_vars=_int_setting('CAUSET_MAX_VARS', DEFAULT_MAX_VARS),
            max_contexts=_int_setting('CAUSET_MAX_CONTEXTS', DEFAULT_MAX_CONTEXTS),
            max_worlds=_int_setting('CAUSET_MAX_WORLDS', DEFAULT_MAX_WORLDS),
            totality_cap=_int_setting('CAUSET_TOTALITY_CAP', DEFAULT_TOTALITY_CAP),
            log_level=level,
        )


def get_settings() -> Settings:
    """Read the settings afresh, so tests and the CLI see environment changes."""
    return Settings.from_env()


def resolve_cap(explicit: Optional[int], field: str) -> int:
    if explicit is not None:
        return explicit
    return getattr(get_settings(), field)
