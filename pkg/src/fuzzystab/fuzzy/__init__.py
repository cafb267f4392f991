"""
@file
@brief Shortcuts to *fuzzy*.
"""

from .fuzzy_core import (  # noqa
    Box, LevelGrid, FuzzyBox, box_hausdorff, sup_metric, norm, enforce_nesting,
    add, scale, h_difference, diameter, resample)
from .fuzzy_calculus import (  # noqa
    FuzzyPath, HSchedule, h_derivative, integrate, integrate_scalar, primitive)
from .fuzzy_exceptions import (  # noqa
    FuzzyException, DimensionMismatch, GridMismatch, NestingError,
    NoHDifference, NotHDifferentiable)
