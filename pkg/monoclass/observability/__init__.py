from .langfuse import (
    LANGFUSE_ENABLED,
    get_langfuse_client,
    observe_span,
)

__all__ = [
    "LANGFUSE_ENABLED",
    "get_langfuse_client",
    "observe_span",
]
