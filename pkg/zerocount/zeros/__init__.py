from .counting import CountResult, N_exact, S_exact, bound_sandwich, count, main_term
from .isolation import (
    block_edges,
    count_by_argument,
    find_zeros,
    mean_gap,
    s_by_argument,
    scan_block,
    scan_step,
)
from .zero_list import ZeroList, ingest_zeros

__all__ = [
    "CountResult",
    "N_exact",
    "S_exact",
    "ZeroList",
    "block_edges",
    "bound_sandwich",
    "count",
    "count_by_argument",
    "find_zeros",
    "ingest_zeros",
    "main_term",
    "mean_gap",
    "s_by_argument",
    "scan_block",
    "scan_step",
]
