# -*- coding: utf-8 -*-
"""
@file
@brief End-to-end experiments: the linear equation
:math:`x' = \\frac{x}{1 + t^2}`, uniformly stable but not attractive,
and the crisp decay :math:`x' = -x`, uniformly exponentially stable.
"""
import math
import numpy
from pyquickhelper.loghelper import noLOG
from ..fuzzy.fuzzy_core import FuzzyBox, LevelGrid, norm
from ..ode.fuzzy_ivp import FuzzyIVP, LinearScalar, solve
from ..ode.comparison import (
    ScalarIVP, ScalarTrajectory, maximal_solution, lemma_check)
from ..stability.lyapunov import LyapunovSpec, MetricPower
from ..stability.certificate import StabilityClaim
from ..stability.theorems import check_theorem
from .scenario import Scenario
from .empirical import (
    EmpiricalReport, amplification, delta_search, decay_fit)

#: coefficient of the uniformly stable linear equation
COEF_UNIFORM = "1/(1+t^2)"

#: constants of the crisp decay specification
DECAY_CONSTANTS = {"lambda": 1., "Lambda": 1., "gamma": 1., "K": 1e-6,
                   "p": 1., "q": 1., "delta": 2.}


def uniform_linear_scenario(horizon=200., dt=0.1, grid=None):
    """
    :math:`x' = a(t) x` with :math:`a(t) = \\frac{1}{1 + t^2}`,
    :math:`x_0` triangular centered at 1 of spread 0.5,
    :math:`V = d[x, \\hat{0}]`, :math:`g(t, w) = a(t) w`,
    :math:`a(w) = b(w) = w`, :math:`\\rho = 10`.
    Solutions are :math:`x_0 e^{\\arctan t - \\arctan t_0}`.
    """
    grid = grid or LevelGrid.uniform()
    x0 = FuzzyBox.triangular([1.], [0.5], grid)
    ivp = FuzzyIVP(x0, LinearScalar(COEF_UNIFORM), t0=0., horizon=horizon,
                   dt=dt, rho=10.)
    spec = LyapunovSpec(MetricPower(1., 1.), 10., g="w/(1+t^2)", L="1",
                        a_env="w", b_env="w")
    return Scenario("example-3-1", ivp, spec, theorem="3.2", horizon=horizon)


def crisp_decay_scenario(horizon=20., dt=0.05, grid=None):
    """
    :math:`x' = -x` from crisp states, :math:`V = d[x, \\hat{0}]`,
    :math:`\\rho = 5` and the constants @see va DECAY_CONSTANTS.
    """
    grid = grid or LevelGrid.uniform()
    x0 = FuzzyBox.crisp([2.], grid)
    ivp = FuzzyIVP(x0, LinearScalar("-1"), t0=0., horizon=horizon, dt=dt,
                   rho=5.)
    spec = LyapunovSpec(MetricPower(1., 1.), 5., constants=DECAY_CONSTANTS)
    return Scenario("crisp-exponential", ivp, spec, theorem="3.5",
                    scales=(0.5, 1., 2., 2.4), horizon=horizon)


def _certificate_summary(cert):
    return {"theorem": cert.theorem,
            "claim": None if cert.claim is None else cert.claim.value,
            "counterexample": cert.counterexample,
            "bounds": cert.bounds}


def _nondecreasing(values, tol=1e-12):
    return all(b >= a - tol for a, b in zip(values[:-1], values[1:]))


def _grid(levels):
    return None if levels is None else LevelGrid.uniform(levels)


def run_example_3_1(horizon=200., check_horizon=50., dt=0.1, levels=None,
                    fLOG=noLOG):
    """
    Reproduces the uniform stability of :math:`x' = \\frac{x}{1 + t^2}`.

    :param horizon: horizon of the :math:`\\delta(\\epsilon)` search
    :param check_horizon: horizon of the closed form comparison,
        it cannot go beyond *horizon*
    :param dt: base step of the search
    :param levels: number of levels, 11 if None
    :param fLOG: logging function
    :return: @see cl EmpiricalReport

    Checks: the certificate of theorem ``3.2`` claims uniform stability,
    every amplification is below :math:`e^{\\pi/2}`,
    :math:`\\delta(\\epsilon) / \\epsilon` does not decrease with
    :math:`t_0`, :math:`\\delta(1, 0) = e^{-\\pi/2}` up to
    :math:`2 \\, 10^{-3}`, the solved bounds follow the closed form
    up to :math:`10^{-6}`, the comparison lemma holds along the solution.
    """
    check_horizon = min(check_horizon, horizon)
    scn = uniform_linear_scenario(horizon=horizon, dt=dt, grid=_grid(levels))
    report = EmpiricalReport(scn.name, horizon)
    limit = math.exp(math.pi / 2)

    cert = check_theorem(scn.spec, scn.ivp.rhs, scn.theorem, fLOG=fLOG)
    report.certificate = _certificate_summary(cert)
    report.flag("certificate_uniformly_stable",
                cert.claim == StabilityClaim.UniformlyStable)

    for t0 in scn.t0_list:
        report.add_amplification(t0, horizon, amplification(scn, t0, fLOG=fLOG))
    for eps in scn.eps_list:
        for t0 in scn.t0_list:
            report.add_delta(eps, t0, delta_search(scn, eps, t0, fLOG=fLOG))

    x0 = scn.ivp.x0
    traj = solve(scn.problem(x0, 0., horizon=check_horizon).replace(dt=0.05),
                 fLOG=fLOG)
    amp = float(traj.distances().max()) / norm(x0)
    report.add_amplification(0., check_horizon, amp)
    report.numbers["amplification_bound"] = limit
    report.numbers["expected_amplification"] = math.exp(math.atan(check_horizon))

    amps = [r["amplification"] for r in report.amplifications]
    report.flag("amplification_bounded", all(a <= limit + 1e-3 for a in amps))
    table = report.delta_table()
    uniform = all(_nondecreasing(table[table.eps == eps].sort_values("t0").ratio.tolist())
                  for eps in scn.eps_list)
    report.flag("delta_ratio_nondecreasing_in_t0", uniform)
    monotone = all(_nondecreasing(table[table.t0 == t0].sort_values("eps").delta.tolist())
                   for t0 in scn.t0_list)
    report.flag("delta_nondecreasing_in_eps", monotone)
    delta = table[(table.eps == 1.) & (table.t0 == 0.)].delta.tolist()
    expected = math.exp(-math.pi / 2)
    report.numbers["expected_delta"] = expected
    report.flag("delta_closed_form",
                len(delta) == 1 and abs(delta[0] - expected) <= 2e-3)

    factor = numpy.exp(numpy.arctan(traj.times))[:, None, None]
    err = max(numpy.abs(traj.lo - x0.lo[None] * factor).max(),
              numpy.abs(traj.hi - x0.hi[None] * factor).max())
    report.numbers["closed_form_error"] = float(err)
    report.flag("closed_form", err <= 1e-6)

    m = ScalarTrajectory(traj.times, traj.distances())
    r = maximal_solution(ScalarIVP(scn.spec.g, 0., m.values[0],
                                   check_horizon, 0.05),
                         times=m.times, fLOG=fLOG)
    verdict = lemma_check(m, scn.spec.g, r)
    report.numbers["lemma"] = verdict.to_dict()
    report.flag("comparison_lemma",
                verdict.hypothesis_holds and verdict.conclusion_holds)
    fLOG("[run_example_3_1] passed={}".format(report.passed))
    return report


def run_crisp_exponential(horizon=20., dt=0.05, levels=None, fLOG=noLOG):
    """
    Certifies :math:`x' = -x` with theorem ``3.5`` then checks
    the bounds on simulated crisp trajectories up to *horizon*
    (base step *dt*, *levels* levels).

    Checks: the claim, :math:`\\alpha = 1`, :math:`\\delta_1 = 1`,
    :math:`\\beta(h) = h + 10^{-6}`,
    :math:`d[x(t), \\hat{0}] \\leqslant \\beta(d[x_0, \\hat{0}])
    e^{-\\alpha(t - t_0)} (1 + 10^{-6})` for every probe,
    fitted decay rate :math:`1 \\pm 5 \\, 10^{-3}` and not below
    :math:`\\alpha - 5 \\, 10^{-3}`.
    """
    scn = crisp_decay_scenario(horizon=horizon, dt=dt, grid=_grid(levels))
    report = EmpiricalReport(scn.name, scn.horizon)
    cert = check_theorem(scn.spec, scn.ivp.rhs, scn.theorem, fLOG=fLOG)
    report.certificate = _certificate_summary(cert)
    report.flag("certificate_exponential",
                cert.claim == StabilityClaim.UniformlyExponentiallyStable)
    bounds = cert.exponential
    if bounds is None:
        for name in ["alpha", "delta1", "beta", "soundness", "decay_rate",
                     "decay_above_alpha"]:
            report.flag(name, False)
        return report

    K = scn.spec.constants["K"]
    report.flag("alpha", bounds.alpha == 1.)
    report.flag("delta1", bounds.delta1 == 1.)
    report.flag("beta", all(abs(bounds.beta(h) - (h + K)) <= 1e-15
                            for h in scn.scales))

    grid = scn.ivp.x0.grid
    worst = 0.
    for t0 in scn.t0_list:
        for s in scn.scales:
            for sign in (1., -1.):
                traj = solve(scn.problem(FuzzyBox.crisp([sign * s], grid), t0))
                bound = bounds.decay_bound(s, traj.times - t0) * (1 + 1e-6)
                worst = max(worst, float((traj.distances() / bound).max()))
    report.numbers["soundness_worst_ratio"] = worst
    report.flag("soundness", worst <= 1.)

    traj = solve(scn.problem(scn.ivp.x0, 0.), fLOG=fLOG)
    report.decay = decay_fit(traj)
    rate = report.decay["rate"]
    report.flag("decay_rate", abs(rate - 1.) <= 5e-3)
    report.flag("decay_above_alpha", rate >= bounds.alpha - 5e-3)
    fLOG("[run_crisp_exponential] passed={}".format(report.passed))
    return report


#: experiments the command line can run
EXPERIMENTS = {
    "example-3-1": run_example_3_1,
    "crisp-exponential": run_crisp_exponential,
}
