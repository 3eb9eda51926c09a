"""Exact Taylor coefficients of inverse Schwarz triangle functions."""

from trimap.errors import DomainError
from trimap.series import (
    RationalSeries,
    series_add,
    series_compose,
    series_mul,
    series_pow,
    series_recip,
    series_revert,
)

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "RationalSeries",
    "series_add",
    "series_compose",
    "series_mul",
    "series_pow",
    "series_recip",
    "series_revert",
    "__version__",
]
