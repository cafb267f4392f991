# -*- coding: utf-8 -*-
"""
@file
@brief Derivative (Hukuhara) and integral (Aumann) of fuzzy-valued
functions :math:`F: [a, b] \\rightarrow E^n`.
"""
import math
import numpy
from scipy.integrate import simpson
from .fuzzy_core import FuzzyBox, h_difference, scale, sup_metric, norm, TOL
from .fuzzy_exceptions import NoHDifference, NotHDifferentiable

#: number of Simpson intervals per unit of time
STEPS_PER_UNIT = 256


class FuzzyPath:
    """
    A fuzzy-valued function defined on a closed interval.
    Every evaluation must return a @see cl FuzzyBox on the same grid
    with the same dimension.

    :param fct: function ``t -> FuzzyBox``
    :param domain: tuple *(a, b)*
    """

    def __init__(self, fct, domain):
        a, b = float(domain[0]), float(domain[1])
        if not a <= b:
            raise ValueError("Empty domain [{}, {}].".format(a, b))
        self.fct = fct
        self.domain = (a, b)
        self._ref = None

    @staticmethod
    def from_endpoints(grid, lo_fct, hi_fct, domain):
        """
        Builds a path from two functions returning the bounds
        of every cut, both return arrays of shape *(L+1, n)*.
        """
        return FuzzyPath(lambda t: FuzzyBox(grid, lo_fct(t), hi_fct(t)),
                         domain)

    def __call__(self, t):
        a, b = self.domain
        if t < a - TOL or t > b + TOL:
            raise ValueError(
                "t={} is outside the domain [{}, {}].".format(t, a, b))
        res = self.fct(t)
        if not isinstance(res, FuzzyBox):
            raise TypeError(
                "A path must return a FuzzyBox not {}.".format(type(res)))
        if self._ref is None:
            self._ref = (res.grid, res.dim)
        elif (res.grid, res.dim) != self._ref:
            raise ValueError(
                "The path changed its grid or its dimension at t={}.".format(t))
        return res

    def __add__(self, other):
        domain = (max(self.domain[0], other.domain[0]),
                  min(self.domain[1], other.domain[1]))
        return FuzzyPath(lambda t: self(t) + other(t), domain)

    def __rmul__(self, lam):
        return FuzzyPath(lambda t: scale(lam, self(t)), self.domain)


class HSchedule:
    """
    Strictly decreasing sequence of positive steps
    realizing the limit :math:`h \\rightarrow 0^+`.
    """
    __slots__ = ("steps",)

    def __init__(self, steps):
        steps = numpy.array(steps, dtype=numpy.float64).ravel()
        if steps.shape[0] < 2:
            raise ValueError("A schedule needs at least two steps.")
        if numpy.any(steps <= 0) or numpy.any(numpy.diff(steps) >= 0):
            raise ValueError(
                "Steps must be positive and strictly decreasing: {}.".format(
                    steps.tolist()))
        steps.flags.writeable = False
        self.steps = steps

    @staticmethod
    def geometric(h0=1e-2, m=8):
        """
        Returns steps :math:`h_0 2^{-k}`, :math:`0 \\leqslant k < m`.
        """
        return HSchedule(h0 * 0.5 ** numpy.arange(m))

    @property
    def finest(self):
        "smallest step"
        return float(self.steps[-1])

    def __repr__(self):
        "usual"
        return "HSchedule({})".format(self.steps.tolist())


def _quotients(F, t0, steps, forward):
    res = []
    for h in steps:
        h = float(h)
        try:
            if forward:
                diff = h_difference(F(t0 + h), F(t0))
            else:
                diff = h_difference(F(t0), F(t0 - h))
        except NoHDifference as e:
            raise NotHDifferentiable(  # pylint: disable=W0707
                "{} H-difference fails at t={} h={}: {}".format(
                    "forward" if forward else "backward", t0, h, e), t=t0)
        res.append(scale(1. / h, diff))
    return res


def h_derivative(F, t0, sched=None, rtol=1e-4, atol=1e-8):
    """
    Estimates the Hukuhara derivative :math:`F'(t_0)`.

    :param F: @see cl FuzzyPath
    :param t0: time
    :param sched: @see cl HSchedule, default is ``HSchedule.geometric()``
    :param rtol: relative tolerance (relative to the quotient magnitude)
    :param atol: absolute tolerance
    :return: the forward quotient of the finest step

    Forward and backward quotients are computed along the schedule.
    Let :math:`\\delta_f, \\delta_b` be the distances between the two
    finest quotients on each side. Both one-sided limits agree if
    the finest forward and backward quotients are closer than
    :math:`2(\\delta_f + \\delta_b) + rtol \\|q\\| + atol`.
    Close to a bound of the domain, the schedule is scaled down to fit
    on both sides if its finest step fits, otherwise
    only the available side is used.
    The function raises @see cl NotHDifferentiable otherwise.
    """
    sched = sched or HSchedule.geometric()
    a, b = F.domain
    steps = sched.steps
    room = min(b - t0, t0 - a)
    if steps[-1] <= room < steps[0]:
        steps = steps * (room / steps[0])
    has_fwd = t0 + steps[0] <= b + TOL
    has_bwd = t0 - steps[0] >= a - TOL
    if not has_fwd and not has_bwd:
        raise ValueError(
            "The domain [{}, {}] is too short for the schedule {}.".format(
                a, b, sched))
    fwd = _quotients(F, t0, steps, True) if has_fwd else None
    bwd = _quotients(F, t0, steps, False) if has_bwd else None
    if fwd is None:
        return bwd[-1]
    if bwd is None:
        return fwd[-1]
    delta_f = sup_metric(fwd[-2], fwd[-1])
    delta_b = sup_metric(bwd[-2], bwd[-1])
    gap = sup_metric(fwd[-1], bwd[-1])
    tol = 2 * (delta_f + delta_b) + rtol * norm(fwd[-1]) + atol
    if gap > tol:
        raise NotHDifferentiable(
            "One-sided quotients disagree at t={}: {} > {}.".format(
                t0, gap, tol), t=t0)
    return fwd[-1]


def _n_intervals(a, b, n_steps):
    if n_steps is None:
        n_steps = int(math.ceil(STEPS_PER_UNIT * (b - a)))
    if n_steps < 1:
        raise ValueError("n_steps must be >= 1 not {}.".format(n_steps))
    n_steps = max(n_steps, 2)
    return n_steps + (n_steps % 2)


def integrate(F, a, b, n_steps=None):
    """
    Aumann integral :math:`\\int_a^b F(t) dt` computed level by level
    with the composite Simpson rule applied to the bounds of every cut.

    :param F: @see cl FuzzyPath
    :param a: lower bound
    :param b: upper bound, *a <= b*
    :param n_steps: number of intervals (rounded up to an even number),
        default is @see va STEPS_PER_UNIT per unit of time
    :return: @see cl FuzzyBox
    """
    if not a <= b:
        raise ValueError("Expecting a <= b not a={} b={}.".format(a, b))
    da, db = F.domain
    if a < da - TOL or b > db + TOL:
        raise ValueError(
            "[{}, {}] is not included in the domain [{}, {}].".format(
                a, b, da, db))
    first = F(a)
    if a == b:
        return FuzzyBox.zero(first.dim, first.grid)
    n = _n_intervals(a, b, n_steps)
    ts = numpy.linspace(a, b, n + 1)
    values = [first] + [F(t) for t in ts[1:]]
    lo = simpson(numpy.stack([v.lo for v in values]), x=ts, axis=0)
    hi = simpson(numpy.stack([v.hi for v in values]), x=ts, axis=0)
    return FuzzyBox(first.grid, lo, hi, tol=1e-10 * max(1., b - a))


def integrate_scalar(f, a, b, n_steps=None):
    """
    Composite Simpson rule for a real function.
    """
    if not a <= b:
        raise ValueError("Expecting a <= b not a={} b={}.".format(a, b))
    if a == b:
        return 0.
    n = _n_intervals(a, b, n_steps)
    ts = numpy.linspace(a, b, n + 1)
    return float(simpson(numpy.array([f(t) for t in ts]), x=ts))


def primitive(F, a, n_steps=None):
    """
    Returns the path :math:`G(t) = \\int_a^t F(\\tau) d\\tau`
    defined on :math:`[a, b]`.
    """
    def fct(t):
        steps = None if n_steps is None else max(
            1, int(math.ceil(n_steps * (t - a))))
        return integrate(F, a, min(max(t, a), F.domain[1]), steps)

    return FuzzyPath(fct, (a, F.domain[1]))
