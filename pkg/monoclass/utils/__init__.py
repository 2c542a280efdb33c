from .formatting import SIGNIFICANT_DIGITS, format_number, round_floats, round_sig
from .matrix_parser import parse_matrix, parse_relation_rows, parse_rows, read_source

__all__ = [
    "SIGNIFICANT_DIGITS",
    "format_number",
    "round_floats",
    "round_sig",
    "parse_matrix",
    "parse_relation_rows",
    "parse_rows",
    "read_source",
]
