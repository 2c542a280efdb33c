from __future__ import annotations

import os
from functools import lru_cache

from dotenv import load_dotenv
from pydantic import ValidationError

from monoclass.errors import ConfigError
from monoclass.numerics.tolerance import Tolerance

load_dotenv()

_TOLERANCE_ENV = {
    "abs": ("MONOCLASS_TOL_ABS", float),
    "eig_rel": ("MONOCLASS_TOL_EIG_REL", float),
    "bisect_rel": ("MONOCLASS_TOL_BISECT_REL", float),
    "max_iter": ("MONOCLASS_MAX_ITER", int),
    "sample_budget": ("MONOCLASS_SAMPLE_BUDGET", int),
}

WORKERS_ENV = "MONOCLASS_WORKERS"
LOG_LEVEL_ENV = "MONOCLASS_LOG_LEVEL"


def _read_env(name: str, cast: type) -> object | None:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return None
    try:
        return cast(raw.strip())
    except ValueError as exc:
        raise ConfigError(f"{name}={raw!r} is not a valid {cast.__name__}") from exc


def tolerance_from_env() -> Tolerance:
    """
    Build a Tolerance from MONOCLASS_* variables, falling back to field defaults.
    """
    overrides = {}
    for field, (env_name, cast) in _TOLERANCE_ENV.items():
        value = _read_env(env_name, cast)
        if value is not None:
            overrides[field] = value
    try:
        return Tolerance(**overrides)
    except ValidationError as exc:
        raise ConfigError(f"Invalid tolerance configuration: {exc}") from exc


@lru_cache(maxsize=1)
def default_tolerance() -> Tolerance:
    return tolerance_from_env()


def worker_count() -> int:
    value = _read_env(WORKERS_ENV, int)
    if value is None:
        return 4
    if value < 1:
        raise ConfigError(f"{WORKERS_ENV} must be >= 1, got {value}")
    return value


def log_level() -> str:
    return (os.getenv(LOG_LEVEL_ENV) or "WARNING").upper()
