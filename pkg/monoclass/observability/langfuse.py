from __future__ import annotations

import logging
import os
import time
from functools import lru_cache, wraps
from typing import Any, Callable, Optional, TypeVar

try:
    from langfuse import Langfuse, observe
except Exception:  # pragma: no cover - optional dependency
    Langfuse = None  # type: ignore
    observe = None  # type: ignore

logger = logging.getLogger(__name__)

F = TypeVar("F", bound=Callable[..., Any])

LANGFUSE_PUBLIC_KEY = os.getenv("LANGFUSE_PUBLIC_KEY")
LANGFUSE_SECRET_KEY = os.getenv("LANGFUSE_SECRET_KEY")
LANGFUSE_BASE_URL = os.getenv("LANGFUSE_BASE_URL", "https://cloud.langfuse.com")

LANGFUSE_ENABLED = bool(
    Langfuse and observe and LANGFUSE_PUBLIC_KEY and LANGFUSE_SECRET_KEY and LANGFUSE_BASE_URL
)


@lru_cache(maxsize=1)
def get_langfuse_client() -> Optional["Langfuse"]:
    if not LANGFUSE_ENABLED:
        return None
    return Langfuse(  # type: ignore[call-arg]
        public_key=LANGFUSE_PUBLIC_KEY,
        secret_key=LANGFUSE_SECRET_KEY,
        host=LANGFUSE_BASE_URL,
    )


def _timed(name: str, func: F) -> F:
    @wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        started = time.perf_counter()
        try:
            return func(*args, **kwargs)
        finally:
            logger.debug("%s took %.3f ms", name, 1000 * (time.perf_counter() - started))

    return wrapper  # type: ignore[return-value]


def observe_span(name: Optional[str] = None) -> Callable[[F], F]:
    """
    Trace a call as a Langfuse span when tracing is configured; otherwise log
    its wall time at debug level.
    """

    def decorator(func: F) -> F:
        span_name = name or func.__qualname__
        if get_langfuse_client() is None:
            return _timed(span_name, func)
        return observe(name=span_name)(func)  # type: ignore[misc]

    return decorator
