from .stats import pearson, sd_profile
from .reports import (
    SweepRow,
    shot_sweep_report,
    fold_aggregate,
    label_histogram,
    comparison_table,
    icc_table_row,
)

__all__ = [
    "pearson",
    "sd_profile",
    "SweepRow",
    "shot_sweep_report",
    "fold_aggregate",
    "label_histogram",
    "comparison_table",
    "icc_table_row",
]
