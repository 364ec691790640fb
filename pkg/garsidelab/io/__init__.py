from .graph_writer import graph_to_json, write_dot
from .json_encoder import GarsideJSONEncoder, braid_from_json, braid_to_json, dumps
from .words import (
    format_braid,
    format_matrix,
    format_word,
    matrix_from_json,
    matrix_to_json,
    parse_braid,
    parse_matrix,
    parse_word,
)

__all__ = [
    "GarsideJSONEncoder",
    "braid_from_json",
    "braid_to_json",
    "dumps",
    "format_braid",
    "format_matrix",
    "format_word",
    "graph_to_json",
    "matrix_from_json",
    "matrix_to_json",
    "parse_braid",
    "parse_matrix",
    "parse_word",
    "write_dot",
]
