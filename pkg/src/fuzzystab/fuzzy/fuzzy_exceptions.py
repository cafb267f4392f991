"""
@file
@brief Exceptions raised by fuzzy set arithmetic and calculus.
"""


class FuzzyException(ValueError):
    """
    base class for every exception raised by :mod:`fuzzystab.fuzzy`
    """
    pass


class DimensionMismatch(FuzzyException):
    """
    raised when two fuzzy sets do not live in the same space
    """
    pass


class GridMismatch(FuzzyException):
    """
    raised when two fuzzy sets are not defined on the same level grid
    """
    pass


class NestingError(FuzzyException):
    """
    raised when level cuts are not nested
    (a cut must contain every cut of a higher level)
    """
    pass


class NoHDifference(FuzzyException):
    """
    Raised when the Hukuhara difference *x - y* does not exist,
    *level* and *coordinate* tell where the width of *y* exceeds
    the width of *x* (or where the result is not nested).
    """

    def __init__(self, message, level=None, coordinate=None):
        FuzzyException.__init__(self, message)
        self.level = level
        self.coordinate = coordinate


class NotHDifferentiable(FuzzyException):
    """
    Raised when a fuzzy path has no H-derivative at a given time.
    """

    def __init__(self, message, t=None):
        FuzzyException.__init__(self, message)
        self.t = t
