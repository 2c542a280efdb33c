from __future__ import annotations

import math
from typing import Any

SIGNIFICANT_DIGITS = 12


def round_sig(value: float, digits: int = SIGNIFICANT_DIGITS) -> float:
    if not math.isfinite(value) or value == 0.0:
        return value
    return float(f"{value:.{digits}g}")


def round_floats(obj: Any, digits: int = SIGNIFICANT_DIGITS) -> Any:
    """
    Recursively round every float inside dicts/lists/tuples to `digits`
    significant digits. Booleans and ints pass through untouched.
    """
    if isinstance(obj, bool) or isinstance(obj, int):
        return obj
    if isinstance(obj, float):
        return round_sig(obj, digits)
    if isinstance(obj, dict):
        return {k: round_floats(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_floats(v, digits) for v in obj]
    return obj


def format_number(value: float, digits: int = SIGNIFICANT_DIGITS) -> str:
    return f"{value:.{digits}g}"
