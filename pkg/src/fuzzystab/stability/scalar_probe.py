# -*- coding: utf-8 -*-
"""
@file
@brief Empirical stability of the zero solution of the comparison
equation :math:`w' = g(t, w)`. The stability theorems assume it,
this module estimates it.
"""
from enum import Enum
import numpy
from scipy.integrate import cumulative_trapezoid
from pyquickhelper.loghelper import noLOG
from ..exprs.scalar_fn import parse, linear_coefficient
from ..ode.comparison import ScalarIVP, maximal_solution
from ..ode.ode_exceptions import SolveError
from .stability_exceptions import ProbePrecondition

#: tolerance on :math:`g(t, 0) = 0`
ZERO_TOL = 1e-12

#: decay factor a solution must reach to be called attracted
DECAY = 1e-6

#: tube and initial value of the witness looked for when the linear
#: coefficient is not integrable
WITNESS = (0.1, 1e-4)

#: first shift of the maximal solutions relative to the initial value,
#: larger shifts drift out of the smallest tubes
SHIFT_RATIO = 1e-3

#: minimum number of samples of the linear coefficient on the window
MIN_SAMPLES = 1001


class ScalarStability(Enum):
    """
    Outcomes of @see fn scalar_stability_probe.
    """
    ZeroStable = "ZeroStable"
    ZeroUniformlyStable = "ZeroUniformlyStable"
    ZeroAsymptoticallyStable = "ZeroAsymptoticallyStable"
    ZeroUniformlyAsymptoticallyStable = "ZeroUniformlyAsymptoticallyStable"
    Inconclusive = "Inconclusive"
    Falsified = "Falsified"

    @property
    def is_stable(self):
        "stable in any sense"
        return self in (ScalarStability.ZeroStable,
                        ScalarStability.ZeroUniformlyStable,
                        ScalarStability.ZeroAsymptoticallyStable,
                        ScalarStability.ZeroUniformlyAsymptoticallyStable)

    @property
    def is_uniformly_stable(self):
        "uniformly stable"
        return self in (ScalarStability.ZeroUniformlyStable,
                        ScalarStability.ZeroUniformlyAsymptoticallyStable)

    @property
    def is_asymptotically_stable(self):
        "asymptotically stable"
        return self in (ScalarStability.ZeroAsymptoticallyStable,
                        ScalarStability.ZeroUniformlyAsymptoticallyStable)

    @property
    def is_uniformly_asymptotically_stable(self):
        "uniformly asymptotically stable"
        return self == ScalarStability.ZeroUniformlyAsymptoticallyStable


class ScalarProbeResult:
    """
    Result of @see fn scalar_stability_probe.

    :param kind: @see cl ScalarStability
    :param amplification: estimated bound on :math:`|w(t)| / w_0`
    :param counterexample: dictionary *t0, w0, eps, t_exit* or None
    :param delta_ratio: :math:`\\delta_0 / \\epsilon`, initial values below
        :math:`\\delta_0` stay in the tube :math:`\\epsilon`
    :param attraction_radius: initial values below this radius are
        attracted by zero (None if not asymptotic)
    :param method: ``"linear"`` or ``"sampled"``
    :param detail: dictionary with extra numbers
    """

    def __init__(self, kind, amplification, counterexample=None,
                 delta_ratio=None, attraction_radius=None, method="linear",
                 detail=None):
        self.kind = kind
        self.amplification = float(amplification)
        self.counterexample = counterexample
        self.delta_ratio = delta_ratio
        self.attraction_radius = attraction_radius
        self.method = method
        self.detail = detail or {}

    def delta0(self, tube):
        """
        Returns :math:`\\delta_0` such that :math:`0 \\leqslant w_0 < \\delta_0`
        implies :math:`|w(t)| < tube`, 0 if the zero solution is not stable.
        """
        if not self.kind.is_stable or self.delta_ratio is None:
            return 0.
        return tube * self.delta_ratio

    def to_json_dict(self):
        "serialization"
        res = {"kind": self.kind.value, "method": self.method,
               "amplification": self.amplification}
        if self.delta_ratio is not None:
            res["delta_ratio"] = self.delta_ratio
        if self.attraction_radius is not None:
            res["attraction_radius"] = self.attraction_radius
        if self.counterexample is not None:
            res["counterexample"] = self.counterexample
        if self.detail:
            res["detail"] = self.detail
        return res

    def __repr__(self):
        "usual"
        return "ScalarProbeResult({}, amplification={})".format(
            self.kind.value, self.amplification)


def _tail_bound(ts, av):
    # bound on the integral of max(a, 0) beyond the window,
    # a ~ C / t^2 is the only recognized integrable form
    end = ts[-1]
    pos = numpy.maximum(av, 0.)
    last = ts >= end / 2
    if pos[last].max() <= 0:
        return 0.
    weighted = ts ** 2 * pos
    before = (ts >= end / 4) & (ts < end / 2)
    if not numpy.any(before):
        return numpy.inf
    c2 = weighted[last].max()
    c1 = weighted[before].max()
    if c1 > 0 and c2 <= 1.5 * c1:
        return float(c2 / end)
    return numpy.inf


def _linear_probe(a, plan, fLOG):
    end = float(plan.t_grid.max()) + plan.probe_horizon
    ts = numpy.linspace(0., end, max(MIN_SAMPLES, int(end * 100) + 1))
    av = numpy.array([a(t) for t in ts])
    A = cumulative_trapezoid(av, ts, initial=0.)
    tail = _tail_bound(ts, av)
    growth = 0.
    decayed = True
    for t0 in plan.t_grid:
        A0 = numpy.interp(t0, ts, A)
        growth = max(growth, float(A[ts >= t0].max() - A0))
        At = numpy.interp(t0 + plan.probe_horizon, ts, A)
        if At - A0 > numpy.log(DECAY):
            decayed = False
    amplification = float(numpy.exp(growth + tail))
    detail = {"window": end, "growth": growth, "tail": tail}
    fLOG("[scalar_stability_probe] linear growth={} tail={}".format(growth, tail))

    if numpy.isfinite(tail):
        if decayed:
            return ScalarProbeResult(
                ScalarStability.ZeroUniformlyAsymptoticallyStable,
                amplification, delta_ratio=1. / amplification,
                attraction_radius=numpy.inf, detail=detail)
        return ScalarProbeResult(
            ScalarStability.ZeroUniformlyStable, amplification,
            delta_ratio=1. / amplification, detail=detail)

    eps, w0 = WITNESS
    for t0 in plan.t_grid:
        A0 = numpy.interp(t0, ts, A)
        after = ts >= t0
        above = numpy.where(w0 * numpy.exp(A[after] - A0) >= eps)[0]
        if above.shape[0] > 0:
            cex = {"t0": float(t0), "w0": w0, "eps": eps,
                   "t_exit": float(ts[after][above[0]])}
            return ScalarProbeResult(ScalarStability.Falsified, numpy.inf,
                                     counterexample=cex, detail=detail)
    return ScalarProbeResult(ScalarStability.Inconclusive, amplification,
                             detail=detail)


def _sampled_probe(g, plan, eps_exponents, n_t0, n_delta, fLOG):
    step = max(1, plan.t_grid.shape[0] // n_t0)
    t0s = [float(t) for t in plan.t_grid[::step][:n_t0]]
    H = plan.probe_horizon
    ratios = []
    amplification = 1.
    uniform = True
    decayed = True
    for k in eps_exponents:
        eps = 10. ** (-k)
        found = []
        for t0 in t0s:
            delta, cex = None, None
            for j in range(1, n_delta + 1):
                w0 = eps * 10. ** (-j)
                ivp = ScalarIVP(g, t0=t0, w0=w0, horizon=t0 + H, dt=H / 500)
                try:
                    r = maximal_solution(ivp, eps_levels=2,
                                         eps0=SHIFT_RATIO * w0)
                except SolveError as e:
                    cex = {"t0": t0, "w0": w0, "eps": eps, "t_exit": e.t}
                    continue
                peak = float(numpy.abs(r.values).max())
                if peak < eps:
                    delta = w0
                    amplification = max(amplification, peak / w0)
                    if abs(r.values[-1]) > DECAY * w0:
                        decayed = False
                    break
                i = int(numpy.argmax(numpy.abs(r.values) >= eps))
                cex = {"t0": t0, "w0": w0, "eps": eps,
                       "t_exit": float(r.times[i])}
            fLOG("[scalar_stability_probe] eps={} t0={} delta={}".format(
                eps, t0, delta))
            if delta is None:
                return ScalarProbeResult(
                    ScalarStability.Falsified, numpy.inf, counterexample=cex,
                    method="sampled")
            found.append(delta)
            ratios.append(delta / eps)
        if len(set(found)) > 1:
            uniform = False

    detail = {"t0": t0s, "eps": [10. ** (-k) for k in eps_exponents]}
    ratio = min(ratios)
    if uniform and decayed:
        kind = ScalarStability.ZeroUniformlyAsymptoticallyStable
    elif uniform:
        kind = ScalarStability.ZeroUniformlyStable
    elif decayed:
        kind = ScalarStability.ZeroAsymptoticallyStable
    else:
        kind = ScalarStability.ZeroStable
    return ScalarProbeResult(
        kind, amplification, delta_ratio=ratio,
        attraction_radius=(10. ** (-eps_exponents[0]) * ratio
                           if kind.is_asymptotically_stable else None),
        method="sampled", detail=detail)


def scalar_stability_probe(g, plan, eps_exponents=(1, 2, 3), n_t0=5,
                           n_delta=4, fLOG=noLOG):
    """
    Estimates the stability of the zero solution of :math:`w' = g(t, w)`.

    :param g: @see cl ScalarFn or text
    :param plan: @see cl SamplingPlan, only *t_grid* and *probe_horizon*
        are used
    :param eps_exponents: tubes :math:`\\epsilon = 10^{-k}`
        (sampled probe)
    :param n_t0: number of initial times (sampled probe)
    :param n_delta: number of candidates
        :math:`\\delta = \\epsilon 10^{-j}` (sampled probe)
    :param fLOG: logging function
    :return: @see cl ScalarProbeResult

    When :math:`g(t, w) = a(t) w`, the solutions are
    :math:`w_0 e^{A(t) - A(t_0)}` with :math:`A' = a`. The zero solution
    is uniformly stable if :math:`\\int^\\infty \\max(a, 0)` is finite:
    the integral is computed on the window and bounded beyond it
    when *a* is nonpositive or decreases like :math:`C / t^2`.
    Otherwise, maximal solutions are sampled for every tube and
    initial time, the function looks for the largest
    :math:`\\delta` keeping the solution in the tube.
    The function raises @see cl ProbePrecondition if
    :math:`g(t, 0) \\neq 0` on the time grid.
    """
    if isinstance(g, str):
        g = parse(g)
    for t in plan.t_grid:
        v = g(t, 0.)
        if abs(v) > ZERO_TOL:
            raise ProbePrecondition(
                "g(t, 0) must be 0, g({}, 0)={}.".format(t, v))
    a = linear_coefficient(g, plan.t_grid)
    if a is not None:
        return _linear_probe(a, plan, fLOG)
    return _sampled_probe(g, plan, eps_exponents, n_t0, n_delta, fLOG)
