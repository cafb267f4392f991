# -*- coding: utf-8 -*-
"""
@file
@brief Fuzzy initial value problem :math:`x' = f(t, x)`,
:math:`x(t_0) = x_0` where the derivative is the Hukuhara derivative.
Every level of every coordinate is reduced to a system on its two bounds.
"""
import numpy
import pandas
from pyquickhelper.loghelper import noLOG
from ..fuzzy.fuzzy_core import FuzzyBox, enforce_nesting, norm, scale, TOL
from ..fuzzy.fuzzy_calculus import FuzzyPath
from ..fuzzy.fuzzy_exceptions import NestingError
from ..exprs.scalar_fn import ScalarFn, parse
from .ode_exceptions import DomainExit, WidthViolation
from .rk4 import solve_with_halving, TOL_ODE, MAX_HALVINGS


def _as_fn(f):
    if isinstance(f, str):
        return parse(f)
    if not isinstance(f, ScalarFn) and not callable(f):
        raise TypeError("Unexpected type {} for a function.".format(type(f)))
    return f


class RHS:
    """
    Right side :math:`f(t, x)` of a fuzzy differential equation,
    it gives the derivatives of the bounds of every cut.
    """

    #: True if :math:`f(t, s x) = s f(t, x)` for :math:`s \\geqslant 0`
    is_homogeneous = False

    #: True if the solver must check that widths never decrease
    check_width = True

    def endpoint_derivative(self, t, lo, hi):
        """
        Returns the derivatives *(dlo, dhi)* of the bounds,
        arrays of shape *(L+1, n)*.
        """
        raise NotImplementedError()  # pragma: no cover

    def value(self, t, x):
        """
        Returns :math:`f(t, x)` as a @see cl FuzzyBox, raises
        @see cl WidthViolation if the derivatives are not a fuzzy set.
        """
        dlo, dhi = self.endpoint_derivative(t, x.lo, x.hi)
        try:
            return FuzzyBox(x.grid, dlo, dhi)
        except NestingError as e:
            raise WidthViolation(  # pylint: disable=W0707
                "f(t, x) is not a fuzzy set at t={}: {}".format(t, e), t=t)

    def check_zero(self, dim, times):
        """
        Checks :math:`f(t, \\hat{0}) = \\hat{0}` at the given times.
        """
        pass

    def to_json_dict(self):
        "serialization"
        raise NotImplementedError()  # pragma: no cover


class LinearScalar(RHS):
    """
    :math:`f(t, x) = a(t) x`. When :math:`a(t) < 0`, bounds are swapped:
    ``lo' = min(a lo, a hi)``, ``hi' = max(a lo, a hi)``, widths never
    decrease, a fuzzy state cannot contract to :math:`\\hat{0}`.
    """

    is_homogeneous = True
    check_width = False

    def __init__(self, a):
        self.a = _as_fn(a)

    def coefficient(self, t):
        "returns :math:`a(t)`"
        return self.a(t, 0.)

    def endpoint_derivative(self, t, lo, hi):
        c = self.coefficient(t)
        p = c * lo
        q = c * hi
        return numpy.minimum(p, q), numpy.maximum(p, q)

    def value(self, t, x):
        return scale(self.coefficient(t), x)

    def to_json_dict(self):
        return {"kind": "linear", "a": str(self.a)}

    def __repr__(self):
        "usual"
        return "LinearScalar({!r})".format(str(self.a))


class EndpointField(RHS):
    """
    Decoupled dynamics of the bounds, coordinate *i* follows
    :math:`lo_i' = flo_i(t, lo_i)` and :math:`hi_i' = fhi_i(t, hi_i)`.

    :param flo: list of functions ``f(t, w)``, one per coordinate
    :param fhi: list of functions ``f(t, w)``, one per coordinate
    """

    def __init__(self, flo, fhi):
        if isinstance(flo, (str, ScalarFn)):
            flo = [flo]
        if isinstance(fhi, (str, ScalarFn)):
            fhi = [fhi]
        if len(flo) != len(fhi) or len(flo) == 0:
            raise ValueError(
                "flo and fhi must have the same non null length not "
                "{} and {}.".format(len(flo), len(fhi)))
        self.flo = [_as_fn(f) for f in flo]
        self.fhi = [_as_fn(f) for f in fhi]

    @property
    def dim(self):
        "dimension"
        return len(self.flo)

    def endpoint_derivative(self, t, lo, hi):
        dlo = numpy.empty(lo.shape, dtype=numpy.float64)
        dhi = numpy.empty(hi.shape, dtype=numpy.float64)
        for i, (fl, fh) in enumerate(zip(self.flo, self.fhi)):
            dlo[:, i] = [fl(t, v) for v in lo[:, i]]
            dhi[:, i] = [fh(t, v) for v in hi[:, i]]
        return dlo, dhi

    def check_zero(self, dim, times):
        if dim != self.dim:
            raise ValueError(
                "The field has {} coordinates, the state {}.".format(
                    self.dim, dim))
        for t in times:
            for f in self.flo + self.fhi:
                v = f(t, 0.)
                if abs(v) > TOL:
                    raise ValueError(
                        "f(t, 0) must be 0, {} gives {} at t={}.".format(
                            f, v, t))

    def to_json_dict(self):
        return {"kind": "endpoint", "lo": [str(f) for f in self.flo],
                "hi": [str(f) for f in self.fhi]}

    def __repr__(self):
        "usual"
        return "EndpointField({!r}, {!r})".format(
            [str(f) for f in self.flo], [str(f) for f in self.fhi])


class FuzzyIVP:
    """
    Initial value problem :math:`x' = f(t, x)`, :math:`x(t_0) = x_0`
    restricted to the ball :math:`S(\\rho) = \\{x | d[x, \\hat{0}] < \\rho\\}`.

    :param x0: @see cl FuzzyBox
    :param rhs: @see cl RHS
    :param t0: initial time
    :param horizon: final time
    :param dt: base step
    :param rho: radius of the domain
    """

    def __init__(self, x0, rhs, t0=0., horizon=50., dt=0.05, rho=numpy.inf):
        if not isinstance(x0, FuzzyBox):
            raise TypeError("x0 must be a FuzzyBox not {}.".format(type(x0)))
        if not isinstance(rhs, RHS):
            raise TypeError("rhs must be a RHS not {}.".format(type(rhs)))
        if t0 < 0:
            raise ValueError("t0 must be >= 0 not {}.".format(t0))
        if not horizon > t0:
            raise ValueError(
                "horizon={} must be > t0={}.".format(horizon, t0))
        if not dt > 0:
            raise ValueError("dt must be > 0 not {}.".format(dt))
        if not norm(x0) < rho:
            raise ValueError(
                "x0 must be inside S(rho), d[x0, 0]={} >= rho={}.".format(
                    norm(x0), rho))
        rhs.check_zero(x0.dim, [t0, (t0 + horizon) / 2, horizon])
        self.x0 = x0
        self.rhs = rhs
        self.t0 = float(t0)
        self.horizon = float(horizon)
        self.dt = float(dt)
        self.rho = float(rho)

    def replace(self, **kwargs):
        """
        Returns a copy with some attributes replaced.
        """
        params = dict(x0=self.x0, rhs=self.rhs, t0=self.t0,
                      horizon=self.horizon, dt=self.dt, rho=self.rho)
        params.update(kwargs)
        return FuzzyIVP(**params)

    def __repr__(self):
        "usual"
        return "FuzzyIVP(x0=..., rhs={!r}, t0={}, horizon={}, dt={}, rho={})".format(
            self.rhs, self.t0, self.horizon, self.dt, self.rho)


class Trajectory:
    """
    Sampled solution of a @see cl FuzzyIVP. States between two
    sample times are linearly interpolated bound by bound.

    :param grid: level grid
    :param times: array of *K* increasing times
    :param lo: array of shape *(K, L+1, n)*
    :param hi: array of shape *(K, L+1, n)*
    """

    def __init__(self, grid, times, lo, hi):
        times = numpy.array(times, dtype=numpy.float64)
        if numpy.any(numpy.diff(times) <= 0):
            raise ValueError("times must be increasing.")
        if lo.shape != hi.shape or lo.shape[0] != times.shape[0]:
            raise ValueError(
                "Shape mismatch times {} lo {} hi {}.".format(
                    times.shape, lo.shape, hi.shape))
        self.grid = grid
        self.times = times
        self.lo = lo
        self.hi = hi
        for a in (self.times, self.lo, self.hi):
            a.flags.writeable = False

    def __len__(self):
        return self.times.shape[0]

    @property
    def t0(self):
        "initial time"
        return float(self.times[0])

    @property
    def horizon(self):
        "last time"
        return float(self.times[-1])

    def state(self, k):
        """
        Returns the state at sample *k*.
        """
        return FuzzyBox(self.grid, self.lo[k], self.hi[k])

    @property
    def states(self):
        "all states"
        return [self.state(k) for k in range(len(self))]

    def __call__(self, t):
        if t < self.times[0] - TOL or t > self.times[-1] + TOL:
            raise ValueError(
                "t={} is outside [{}, {}].".format(
                    t, self.times[0], self.times[-1]))
        k = int(numpy.searchsorted(self.times, t, side='right')) - 1
        k = min(max(k, 0), len(self) - 2)
        t1, t2 = self.times[k], self.times[k + 1]
        w = min(max((t - t1) / (t2 - t1), 0.), 1.)
        lo = (1 - w) * self.lo[k] + w * self.lo[k + 1]
        hi = (1 - w) * self.hi[k] + w * self.hi[k + 1]
        return FuzzyBox(self.grid, lo, hi)

    def as_path(self):
        """
        Returns the interpolated trajectory as a @see cl FuzzyPath.
        """
        return FuzzyPath(self, (self.t0, self.horizon))

    def distances(self):
        """
        Returns :math:`d[x(t_k), \\hat{0}]` for every sample.
        """
        return numpy.maximum(numpy.abs(self.lo), numpy.abs(self.hi)).max(axis=(1, 2))

    def diameters(self):
        """
        Returns the widths, array of shape *(K, L+1, n)*.
        """
        return self.hi - self.lo


def solve(ivp, tol=TOL_ODE, max_halvings=MAX_HALVINGS, fLOG=noLOG):
    """
    Solves a fuzzy initial value problem.

    :param ivp: @see cl FuzzyIVP
    :param tol: step-halving tolerance at the horizon
    :param max_halvings: maximum number of halvings
    :param fLOG: logging function
    :return: @see cl Trajectory

    Every level and every coordinate is reduced to the system
    followed by its two bounds, integrated with the classical
    Runge-Kutta scheme. After every step, nesting is restored
    by outward rounding below :math:`10^{-12}`. The function raises
    @see cl DomainExit if the solution leaves :math:`S(\\rho)`,
    @see cl WidthViolation if a width decreases,
    @see cl NoConvergence if the tolerance is never reached.
    """
    rhs = ivp.rhs

    def fct(t, y):
        dlo, dhi = rhs.endpoint_derivative(t, y[0], y[1])
        return numpy.stack([dlo, dhi])

    def post(t, prev, y):
        lo, hi = y[0], y[1]
        if rhs.check_width:
            shrink = (prev[1] - prev[0]) - (hi - lo)
            if shrink.max() > TOL:
                raise WidthViolation(
                    "A width decreases by {} at t={}.".format(shrink.max(), t),
                    t=t)
        try:
            lo, hi = enforce_nesting(lo, hi)
        except NestingError as e:
            raise WidthViolation(  # pylint: disable=W0707
                "Nesting lost at t={}: {}".format(t, e), t=t)
        d = max(numpy.abs(lo).max(), numpy.abs(hi).max())
        if d >= ivp.rho:
            raise DomainExit(
                "The solution leaves S({}) at t={}, d={}.".format(
                    ivp.rho, t, d), t=t, distance=d)
        return numpy.stack([lo, hi])

    def distance(y1, y2):
        return float(numpy.abs(y1 - y2).max())

    fLOG("[solve] {!r}".format(ivp))
    y0 = numpy.stack([ivp.x0.lo, ivp.x0.hi])
    times, states = solve_with_halving(
        fct, ivp.t0, y0, ivp.horizon, ivp.dt, distance, tol=tol,
        max_halvings=max_halvings, post=post, fLOG=fLOG)
    return Trajectory(ivp.x0.grid, times, states[:, 0] + 0., states[:, 1] + 0.)


def distance_to_zero(traj, t):
    """
    Returns :math:`d[x(t), \\hat{0}]` for the interpolated state.
    """
    return norm(traj(t))


def settling_time(traj, eps):
    """
    Returns the first sample time after which
    :math:`d[x(t), \\hat{0}] < \\epsilon` holds until the end
    of the trajectory, None if the last sample is not below *eps*.
    """
    d = traj.distances()
    above = numpy.where(d >= eps)[0]
    if above.shape[0] == 0:
        return traj.t0
    last = int(above[-1])
    if last == len(traj) - 1:
        return None
    return float(traj.times[last + 1])


def trajectory_to_dataframe(traj):
    """
    Converts a trajectory into a :epkg:`pandas` DataFrame with columns
    ``t``, ``d_to_zero`` and ``lo_j_i``, ``hi_j_i`` for every level *j*
    and coordinate *i*.
    """
    data = {"t": traj.times, "d_to_zero": traj.distances()}
    _, n_levels, dim = traj.lo.shape
    for j in range(n_levels):
        for i in range(dim):
            data["lo_{}_{}".format(j, i)] = traj.lo[:, j, i]
            data["hi_{}_{}".format(j, i)] = traj.hi[:, j, i]
    return pandas.DataFrame(data)


def trajectory_to_csv(traj, filename):
    """
    Writes a trajectory into a CSV file (or a buffer),
    see @see fn trajectory_to_dataframe.
    """
    trajectory_to_dataframe(traj).to_csv(filename, index=False)
