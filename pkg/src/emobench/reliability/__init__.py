from .fdist import f_cdf, f_quantile
from .icc import IccResult, anova_oneway, icc1, icc1k, interpretation_band, complete_matrix
from .simulate import simulate_raters

__all__ = [
    "f_cdf",
    "f_quantile",
    "IccResult",
    "anova_oneway",
    "icc1",
    "icc1k",
    "interpretation_band",
    "complete_matrix",
    "simulate_raters",
]
