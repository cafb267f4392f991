# -*- coding: utf-8 -*-
"""
@file
@brief Scalar comparison equation :math:`w' = g(t, w)`,
its maximal solution and the comparison lemma: if
:math:`D^+ m(t) \\leqslant g(t, m(t))` and :math:`m(t_0) \\leqslant w_0`
then :math:`m(t) \\leqslant r(t; t_0, w_0)`.
"""
import numpy
import pandas
from scipy.integrate import solve_ivp
from pyquickhelper.loghelper import noLOG
from ..exprs.scalar_fn import ScalarFn, parse
from .ode_exceptions import (
    Blowup, NoConvergence, NonMonotoneEps, ComparisonPrecondition)
from .rk4 import solve_with_halving, uniform_times, TOL_ODE, MAX_HALVINGS

#: a solution above this threshold escapes in finite time
BLOWUP = 1e12

#: first shift :math:`\\epsilon_0`, then :math:`\\epsilon_k = \\epsilon_0 4^{-k}`
EPS0 = 1e-3

#: default number of shifts
EPS_LEVELS = 6

#: tolerated increase between two consecutive shifted solutions
#: (relative to max(1, |w|))
MONOTONE_SLACK = 1e-9


class ScalarIVP:
    """
    Scalar problem :math:`w' = g(t, w)`, :math:`w(t_0) = w_0`.
    """

    def __init__(self, g, t0=0., w0=0., horizon=1., dt=0.01):
        if isinstance(g, str):
            g = parse(g)
        if not isinstance(g, ScalarFn) and not callable(g):
            raise TypeError("g must be a ScalarFn not {}.".format(type(g)))
        if t0 < 0:
            raise ValueError("t0 must be >= 0 not {}.".format(t0))
        if not horizon > t0:
            raise ValueError("horizon={} must be > t0={}.".format(horizon, t0))
        if not dt > 0:
            raise ValueError("dt must be > 0 not {}.".format(dt))
        self.g = g
        self.t0 = float(t0)
        self.w0 = float(w0)
        self.horizon = float(horizon)
        self.dt = float(dt)

    def __repr__(self):
        "usual"
        return "ScalarIVP({!r}, t0={}, w0={}, horizon={}, dt={})".format(
            str(self.g), self.t0, self.w0, self.horizon, self.dt)


class ScalarTrajectory:
    """
    Sampled scalar function, linearly interpolated.

    :param times: increasing times
    :param values: finite values
    :param upper: optional sampled upper approximation
    """

    def __init__(self, times, values, upper=None):
        times = numpy.array(times, dtype=numpy.float64)
        values = numpy.array(values, dtype=numpy.float64)
        if times.shape != values.shape or times.ndim != 1 or times.shape[0] < 2:
            raise ValueError(
                "times and values must be vectors of the same size "
                "not {} and {}.".format(times.shape, values.shape))
        if numpy.any(numpy.diff(times) <= 0):
            raise ValueError("times must be increasing.")
        if not numpy.all(numpy.isfinite(values)):
            raise ValueError("values must be finite.")
        self.times = times
        self.values = values
        self.upper = upper

    @staticmethod
    def from_function(f, times):
        """
        Samples function *f* at *times*.
        """
        return ScalarTrajectory(times, [f(t) for t in times])

    def __len__(self):
        return self.times.shape[0]

    def __call__(self, t):
        return numpy.interp(t, self.times, self.values)

    def to_dataframe(self):
        "returns a DataFrame with columns *t*, *w*"
        return pandas.DataFrame({"t": self.times, "w": self.values})

    def to_csv(self, filename):
        "writes a CSV file with columns *t*, *w*"
        self.to_dataframe().to_csv(filename, index=False)


def solve_scalar(ivp, tol=TOL_ODE, max_halvings=MAX_HALVINGS, fLOG=noLOG):
    """
    Solves a scalar problem with the Runge-Kutta scheme and step halving,
    it is the solution when *g* is lipschitzian.
    """
    g = ivp.g

    def fct(t, y):
        return numpy.array([g(t, y[0])])

    def post(t, prev, y):
        if abs(y[0]) > BLOWUP:
            raise Blowup("|w| > {} at t={}.".format(BLOWUP, t), t=t)
        return y

    def distance(y1, y2):
        return float(abs(y1[0] - y2[0]))

    times, states = solve_with_halving(
        fct, ivp.t0, numpy.array([ivp.w0]), ivp.horizon, ivp.dt, distance,
        tol=tol, max_halvings=max_halvings, post=post, fLOG=fLOG)
    return ScalarTrajectory(times, states[:, 0])


def _shifted_run(ivp, eps, times, rtol, atol):
    g = ivp.g

    def fct(t, y):
        return [g(t, y[0]) + eps]

    def escape(t, y):
        return abs(y[0]) - BLOWUP

    escape.terminal = True
    sol = solve_ivp(fct, (ivp.t0, ivp.horizon), [ivp.w0], method='DOP853',
                    t_eval=times, rtol=rtol, atol=atol, events=escape)
    if sol.status == 1:
        t = float(sol.t_events[0][0])
        raise Blowup("|w| > {} at t={} (eps={}).".format(BLOWUP, t, eps), t=t)
    if sol.status != 0:
        raise NoConvergence(
            "Integration failed for eps={}: {}".format(eps, sol.message))
    return sol.y[0]


def maximal_solution(ivp, eps_levels=EPS_LEVELS, eps0=EPS0, rtol=1e-10,
                     atol=1e-12, times=None, fLOG=noLOG):
    """
    Estimates the maximal solution :math:`r(t; t_0, w_0)`.

    :param ivp: @see cl ScalarIVP
    :param eps_levels: number of shifts, at least 2
    :param eps0: first shift
    :param rtol: relative tolerance of the integrator
    :param atol: absolute tolerance of the integrator
    :param times: sampling times from *ivp.t0* to *ivp.horizon*,
        every *ivp.dt* if None
    :param fLOG: logging function
    :return: @see cl ScalarTrajectory sampled at *times*

    The function solves :math:`w' = g(t, w) + \\epsilon_k` for
    :math:`\\epsilon_k = \\epsilon_0 4^{-k}` with an adaptive scheme
    (*DOP853*) and checks the solutions decrease with
    :math:`\\epsilon_k`. The returned values extrapolate the two finest
    solutions to :math:`\\epsilon = 0` (the dependence is linear at
    first order), the extrapolation may fall slightly below the finest
    shifted solution which attribute *upper* keeps.
    The function raises @see cl Blowup if :math:`|w|` goes beyond
    :math:`10^{12}`, @see cl NonMonotoneEps if the shifted solutions
    are not ordered.
    """
    if eps_levels < 2:
        raise ValueError("eps_levels must be >= 2 not {}.".format(eps_levels))
    if times is None:
        times = uniform_times(ivp.t0, ivp.horizon, ivp.dt)
    else:
        times = numpy.array(times, dtype=numpy.float64)
        if (times.ndim != 1 or times.shape[0] < 2 or
                numpy.any(numpy.diff(times) <= 0)):
            raise ValueError("times must be an increasing vector.")
        if (abs(times[0] - ivp.t0) > 1e-12 or
                abs(times[-1] - ivp.horizon) > 1e-12):
            raise ValueError(
                "times must span [{}, {}] not [{}, {}].".format(
                    ivp.t0, ivp.horizon, times[0], times[-1]))
        times[0], times[-1] = ivp.t0, ivp.horizon
    runs = []
    for k in range(eps_levels):
        eps = eps0 * 0.25 ** k
        runs.append(_shifted_run(ivp, eps, times, rtol, atol))
        fLOG("[maximal_solution] eps={} w(T)={}".format(eps, runs[-1][-1]))
        if k > 0:
            excess = ((runs[k] - runs[k - 1]) /
                      numpy.maximum(1., numpy.abs(runs[k - 1]))).max()
            if excess > MONOTONE_SLACK:
                raise NonMonotoneEps(
                    "Shifted solutions increase by {} from eps={} "
                    "to eps={}.".format(excess, eps * 4, eps))
    limit = runs[-1] - (runs[-2] - runs[-1]) / 3
    return ScalarTrajectory(times, limit, upper=runs[-1])


class Verdict:
    """
    Result of @see fn lemma_check.

    * *hypothesis_holds*: :math:`D^+m \\leqslant g(t, m)` up to the slack
    * *conclusion_holds*: :math:`m \\leqslant r` up to the tolerance
    * *hypothesis_margin*, *hypothesis_time*: worst value of
      :math:`g(t, m) + slack - D^+m` and where it happens
    * *conclusion_margin*, *conclusion_time*: worst value of
      :math:`r - m` and where it happens
    """

    def __init__(self, hypothesis_holds, conclusion_holds,
                 hypothesis_margin, hypothesis_time,
                 conclusion_margin, conclusion_time):
        self.hypothesis_holds = hypothesis_holds
        self.conclusion_holds = conclusion_holds
        self.hypothesis_margin = hypothesis_margin
        self.hypothesis_time = hypothesis_time
        self.conclusion_margin = conclusion_margin
        self.conclusion_time = conclusion_time

    def to_dict(self):
        "returns a dictionary"
        return dict(hypothesis_holds=self.hypothesis_holds,
                    conclusion_holds=self.conclusion_holds,
                    hypothesis_margin=self.hypothesis_margin,
                    hypothesis_time=self.hypothesis_time,
                    conclusion_margin=self.conclusion_margin,
                    conclusion_time=self.conclusion_time)

    def __repr__(self):
        "usual"
        return "Verdict({})".format(
            ", ".join("{}={!r}".format(k, v) for k, v in self.to_dict().items()))


def lemma_check(m, g, r, slack=1e-6, curvature_factor=10., tol=1e-6,
                span_tol=1e-9):
    """
    Checks the comparison lemma on sampled functions.

    :param m: @see cl ScalarTrajectory, monitored function
    :param g: @see cl ScalarFn, right side of the comparison equation
    :param r: @see cl ScalarTrajectory, maximal solution
    :param slack: constant part of the slack on the hypothesis
    :param curvature_factor: the slack also contains
        *curvature_factor * dt * |m''|*
    :param tol: tolerance on the conclusion
    :param span_tol: tolerance on the time spans
    :return: @see cl Verdict

    The upper Dini derivative of *m* is estimated with forward
    differences. The function raises @see cl ComparisonPrecondition
    if :math:`m(t_0) > r(t_0)` or if the spans differ.
    """
    if isinstance(g, str):
        g = parse(g)
    if (abs(m.times[0] - r.times[0]) > span_tol or
            abs(m.times[-1] - r.times[-1]) > span_tol):
        raise ComparisonPrecondition(
            "Span mismatch [{}, {}] != [{}, {}].".format(
                m.times[0], m.times[-1], r.times[0], r.times[-1]))
    if m.values[0] > r.values[0] + span_tol:
        raise ComparisonPrecondition(
            "m(t0)={} > r(t0)={}, the lemma does not apply.".format(
                m.values[0], r.values[0]))
    t, v = m.times, m.values
    dt = numpy.diff(t)
    dm = numpy.diff(v) / dt
    curv = numpy.zeros(dm.shape)
    if dm.shape[0] > 1:
        c = numpy.abs(numpy.diff(dm)) / ((dt[1:] + dt[:-1]) / 2)
        curv[1:] = c
        curv[0] = c[0]
    gk = numpy.array([g(tk, vk) for tk, vk in zip(t[:-1], v[:-1])])
    hyp = gk + slack + curvature_factor * dt * curv - dm
    conc = r(t) - v
    ih, ic = int(numpy.argmin(hyp)), int(numpy.argmin(conc))
    return Verdict(bool(hyp[ih] >= 0), bool(conc[ic] >= -tol),
                   float(hyp[ih]), float(t[ih]),
                   float(conc[ic]), float(t[ic]))
