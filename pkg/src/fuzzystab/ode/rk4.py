# -*- coding: utf-8 -*-
"""
@file
@brief Classical Runge-Kutta scheme of order 4 with fixed steps
and a step-halving acceptance test.
"""
import math
import numpy
from pyquickhelper.loghelper import noLOG
from .ode_exceptions import NoConvergence

#: tolerance between two consecutive runs at the horizon
TOL_ODE = 1e-8

#: maximum number of halvings of the base step
MAX_HALVINGS = 12


def uniform_times(t0, t_end, dt):
    """
    Returns the uniform grid from *t0* to *t_end* whose step
    is the largest one below *dt* dividing the interval.
    """
    if not t_end > t0:
        raise ValueError("t_end={} must be > t0={}.".format(t_end, t0))
    if not dt > 0:
        raise ValueError("dt must be > 0 not {}.".format(dt))
    n = max(1, int(math.ceil((t_end - t0) / dt - 1e-9)))
    times = numpy.linspace(t0, t_end, n + 1)
    times[-1] = t_end
    return times


def rk4_step(fct, t, y, h):
    """
    One step of the classical scheme for :math:`y' = f(t, y)`.
    """
    k1 = fct(t, y)
    k2 = fct(t + h / 2, y + (h / 2) * k1)
    k3 = fct(t + h / 2, y + (h / 2) * k2)
    k4 = fct(t + h, y + h * k3)
    return y + (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4)


def rk4_run(fct, t0, y0, t_end, dt, post=None):
    """
    Integrates :math:`y' = f(t, y)` on the grid returned by
    @see fn uniform_times.

    :param fct: function ``f(t, y) -> array``
    :param t0: initial time
    :param y0: initial state (array)
    :param t_end: final time
    :param dt: step upper bound
    :param post: function ``post(t, y_previous, y) -> y`` called after
        every step, it may correct the state or raise an exception
    :return: times, states (first dimension is time)
    """
    times = uniform_times(t0, t_end, dt)
    y = numpy.array(y0, dtype=numpy.float64)
    states = numpy.empty((times.shape[0], ) + y.shape, dtype=numpy.float64)
    states[0] = y
    for k in range(times.shape[0] - 1):
        t = times[k]
        ny = rk4_step(fct, t, y, times[k + 1] - t)
        if post is not None:
            ny = post(times[k + 1], y, ny)
        states[k + 1] = ny
        y = ny
    return times, states


def solve_with_halving(fct, t0, y0, t_end, dt, distance, tol=TOL_ODE,
                       max_halvings=MAX_HALVINGS, post=None, fLOG=noLOG):
    """
    Runs @see fn rk4_run with step *dt*, then halves the step until
    two consecutive runs differ by less than *tol* at the horizon.

    :param distance: function ``distance(y1, y2) -> float``
    :param tol: acceptance threshold
    :param max_halvings: maximum number of halvings
    :param fLOG: logging function
    :return: times, states of the finest run

    The function raises @see cl NoConvergence if the tolerance is not
    reached after *max_halvings* halvings.
    """
    times, states = rk4_run(fct, t0, y0, t_end, dt, post=post)
    diff = None
    for k in range(1, max_halvings + 1):
        h = dt * 0.5 ** k
        times2, states2 = rk4_run(fct, t0, y0, t_end, h, post=post)
        diff = distance(states[-1], states2[-1])
        fLOG("[solve_with_halving] halving {} dt={} diff={}".format(k, h, diff))
        if diff <= tol:
            return times2, states2
        times, states = times2, states2
    raise NoConvergence(
        "No convergence after {} halvings, last difference {} > {}.".format(
            max_halvings, diff, tol), t=t_end)
