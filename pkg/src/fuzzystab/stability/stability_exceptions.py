"""
@file
@brief Exceptions raised while checking stability hypotheses.
"""


class StabilityException(ValueError):
    """
    base class for exceptions raised by :mod:`fuzzystab.stability`
    """
    pass


class OutsideDomain(StabilityException):
    """
    raised when a Lyapunov function is evaluated outside
    the ball :math:`S(\\rho)`
    """
    pass


class MissingHypothesis(StabilityException):
    """
    raised when a theorem needs a field the specification does not define
    """
    pass


class ProbePrecondition(StabilityException):
    """
    raised when :math:`g(t, 0) \\neq 0` for a sampled time
    """
    pass
