"""
@file
@brief Exceptions raised by the solvers.
"""


class SolveError(RuntimeError):
    """
    base class of solver failures, *t* is the time
    the failure was detected (None if unknown)
    """

    def __init__(self, message, t=None):
        RuntimeError.__init__(self, message)
        self.t = t


class DomainExit(SolveError):
    """
    raised when a solution leaves the ball :math:`S(\\rho)`
    """

    def __init__(self, message, t=None, distance=None):
        SolveError.__init__(self, message, t=t)
        self.distance = distance


class WidthViolation(SolveError):
    """
    raised when a step shrinks a cut, the solution would not be
    H-differentiable anymore
    """
    pass


class NoConvergence(SolveError):
    """
    raised when step halving does not reach the requested tolerance
    """
    pass


class Blowup(SolveError):
    """
    raised when a scalar solution escapes in finite time
    """
    pass


class NonMonotoneEps(SolveError):
    """
    raised when the :math:`\\epsilon`-shifted solutions
    are not decreasing with :math:`\\epsilon`
    """
    pass


class ComparisonPrecondition(ValueError):
    """
    raised when the comparison lemma cannot be applied
    to the given trajectories
    """
    pass
