"""Exact toolkit for the sturdiness of set families over small ground sets."""

from .families import (
    FamilyDocument,
    ParseError,
    SetFamily,
    Subset,
    avoid,
    avoid_link,
    complement_family,
    link,
    link_avoid,
    link_trace,
    parse_document,
    parse_family,
    restrict_family,
    serialize_family,
    sym_diff_distance,
)
from .metrics import (
    LinkMatrix,
    MetricReport,
    degree_vector,
    diameter,
    diversity,
    is_hamming_ball,
    is_intersecting,
    is_iu,
    is_r_wise_t_intersecting,
    is_shifted,
    is_t_intersecting,
    is_u_union,
    link_matrix,
    metric_report,
    min_degree,
    split_check,
    sturdiness,
    t_transversal_number,
    transversal_number,
    union_width,
)

__version__ = "0.1.0"

__all__ = [
    "FamilyDocument",
    "LinkMatrix",
    "MetricReport",
    "ParseError",
    "SetFamily",
    "Subset",
    "avoid",
    "avoid_link",
    "complement_family",
    "degree_vector",
    "diameter",
    "diversity",
    "is_hamming_ball",
    "is_intersecting",
    "is_iu",
    "is_r_wise_t_intersecting",
    "is_shifted",
    "is_t_intersecting",
    "is_u_union",
    "link",
    "link_avoid",
    "link_matrix",
    "link_trace",
    "metric_report",
    "min_degree",
    "parse_document",
    "parse_family",
    "restrict_family",
    "serialize_family",
    "split_check",
    "sturdiness",
    "sym_diff_distance",
    "t_transversal_number",
    "transversal_number",
    "union_width",
]
