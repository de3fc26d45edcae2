from .clusters import ClusterRow, ClusterTable, cluster_first, window_counts
from .epsilon import (
    ChunkExtremes,
    ChunkMean,
    StudyRecord,
    deviation,
    eps_at,
    eps_minus,
    eps_minus_infima,
    eps_plus,
    interval_averages,
    interval_extremes,
    records,
    root_term,
    scan_extremes,
)
from .report import TSVReport
from .theorem import (
    TheoremMargins,
    appendix_theorem_check,
    check_points,
    theorem_margins,
)

__all__ = [
    "ChunkExtremes",
    "ChunkMean",
    "ClusterRow",
    "ClusterTable",
    "StudyRecord",
    "TSVReport",
    "TheoremMargins",
    "appendix_theorem_check",
    "check_points",
    "cluster_first",
    "deviation",
    "eps_at",
    "eps_minus",
    "eps_minus_infima",
    "eps_plus",
    "interval_averages",
    "interval_extremes",
    "records",
    "root_term",
    "scan_extremes",
    "theorem_margins",
    "window_counts",
]
