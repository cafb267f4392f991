# -*- coding: utf-8 -*-
"""
@file
@brief Empirical counterparts of the stability definitions:
:math:`\\delta(t_0, \\epsilon)` of stability, the attraction radius
of asymptotic stability, the decay rate of exponential stability.
"""
import json
import numpy
import pandas
from pyquickhelper.loghelper import noLOG
from ..fuzzy.fuzzy_core import FuzzyBox, scale
from ..ode.fuzzy_ivp import solve
from ..ode.ode_exceptions import SolveError
from ..stability.certificate import to_jsonable

#: radius of the domain used for the reference trajectories,
#: an amplification beyond it is below the resolution of the search
RESOLUTION = 1e6


def _bisect(holds, hi, rtol, floor):
    # largest s in (0, hi] such that holds(s), assumed monotone
    if holds(hi):
        return hi
    lo = 0.
    while hi - lo > rtol * hi and hi > floor:
        mid = (lo + hi) / 2
        if holds(mid):
            lo = mid
        else:
            hi = mid
    return lo


def _reference(scn, t0, fLOG):
    # trajectories from the unit shapes, valid for every scale
    # when the right side is homogeneous
    key = ("ref", t0)
    if key not in scn._cache:
        res = []
        for u in scn.probe_shapes():
            try:
                traj = solve(scn.problem(u, t0, rho=RESOLUTION), tol=scn.tol)
                d = traj.distances()
                res.append((float(d.max()), float(d[-1])))
            except SolveError as e:
                fLOG("[reference] t0={} failed: {}".format(t0, e))
                res.append((numpy.inf, numpy.inf))
        scn._cache[key] = res
    return scn._cache[key]


def amplification(scn, t0, s=None, fLOG=noLOG):
    """
    Returns :math:`\\sup_t d[x(t), \\hat{0}] / d[x_0, \\hat{0}]` over
    the probe shapes scaled to distance *s* (the smallest tube if None),
    infinite if one solve fails.
    """
    if scn.ivp.rhs.is_homogeneous:
        return max(a for a, _ in _reference(scn, t0, fLOG))
    s = s or scn.eps_list[0]
    res = 1.
    for u in scn.probe_shapes():
        try:
            traj = solve(scn.problem(scale(s, u), t0), tol=scn.tol)
        except SolveError:
            return numpy.inf
        res = max(res, float(traj.distances().max()) / s)
    return res


def delta_search(scn, eps, t0, rtol=1e-3, floor=1e-6, fLOG=noLOG):
    """
    Largest initial distance :math:`\\delta` such that the probes
    starting at :math:`t_0` from :math:`d[x_0, \\hat{0}] < \\delta`
    stay within :math:`d[x(t), \\hat{0}] < \\epsilon`
    up to the horizon.

    :param scn: @see cl Scenario
    :param eps: tube, :math:`0 < \\epsilon < \\rho`
    :param t0: initial time
    :param rtol: relative precision of the bisection
    :param floor: the search stops below :math:`floor \\times \\epsilon`
    :param fLOG: logging function
    :return: :math:`\\delta`, 0 if a probe fails or if it is below
        the resolution

    If the right side is homogeneous, one trajectory per probe
    shape gives the amplification *A* and :math:`\\delta = \\epsilon / A`.
    Otherwise, the function bisects on the scale of the probes.
    """
    if not 0 < eps < scn.rho:
        raise ValueError(
            "eps={} must be in (0, rho={}).".format(eps, scn.rho))
    if scn.ivp.rhs.is_homogeneous:
        amp = amplification(scn, t0, fLOG=fLOG)
        delta = 0. if not numpy.isfinite(amp) else min(eps, eps / amp)
        fLOG("[delta_search] eps={} t0={} amplification={} delta={}".format(
            eps, t0, amp, delta))
        return delta

    shapes = scn.probe_shapes()

    def holds(s):
        for u in shapes:
            try:
                traj = solve(scn.problem(scale(s, u), t0), tol=scn.tol)
            except SolveError:
                return False
            if traj.distances().max() >= eps:
                return False
        return True

    delta = _bisect(holds, eps, rtol, floor * eps)
    fLOG("[delta_search] eps={} t0={} delta={}".format(eps, t0, delta))
    return delta


def attraction_search(scn, t0, tol=1e-3, rtol=1e-3, floor=1e-6, fLOG=noLOG):
    """
    Largest crisp initial distance whose trajectory stays in
    :math:`S(\\rho)` and ends below *tol* at the horizon,
    empirical attraction radius :math:`\\Delta(t_0)`.
    """
    x0 = scn.ivp.x0
    unit = FuzzyBox.crisp(numpy.ones(x0.dim), x0.grid)
    upper = scn.rho * (1 - 1e-9)
    if scn.ivp.rhs.is_homogeneous:
        key = ("crisp", t0)
        if key not in scn._cache:
            try:
                d = solve(scn.problem(unit, t0, rho=RESOLUTION),
                          tol=scn.tol).distances()
                scn._cache[key] = (float(d.max()), float(d[-1]))
            except SolveError:
                scn._cache[key] = (numpy.inf, numpy.inf)
        amp, last = scn._cache[key]
        if not numpy.isfinite(amp):
            return 0.
        radius = upper / amp
        if last > 0:
            radius = min(radius, tol / last)
        fLOG("[attraction_search] t0={} radius={}".format(t0, radius))
        return radius

    def holds(s):
        try:
            traj = solve(scn.problem(scale(s, unit), t0), tol=scn.tol)
        except SolveError:
            return False
        return traj.distances()[-1] < tol

    radius = _bisect(holds, upper, rtol, floor * upper)
    fLOG("[attraction_search] t0={} radius={}".format(t0, radius))
    return radius


def decay_fit(traj, skip=0.2):
    """
    Fits :math:`\\log d[x(t), \\hat{0}] = b - r t` by least squares
    on the last samples.

    :param traj: @see cl Trajectory
    :param skip: fraction of the first samples left out
    :return: dictionary *rate* (*r*), *intercept* (*b*),
        *residual* (root mean square of the residuals)
    """
    if not 0 <= skip < 1:
        raise ValueError("skip must be in [0, 1) not {}.".format(skip))
    t = traj.times
    d = traj.distances()
    start = int(len(t) * skip)
    t, d = t[start:], d[start:]
    if t.shape[0] < 2:
        raise ValueError("Not enough samples to fit a line.")
    if numpy.any(d <= 0):
        raise ValueError("Distances must be > 0 to take the logarithm.")
    logd = numpy.log(d)
    coef = numpy.polyfit(t, logd, 1)
    res = logd - numpy.polyval(coef, t)
    return {"rate": float(-coef[0]), "intercept": float(coef[1]),
            "residual": float(numpy.sqrt(numpy.mean(res ** 2)))}


class EmpiricalReport:
    """
    Raw numbers measured by an experiment and the checks computed
    from them.

    :param name: experiment name
    :param horizon: horizon of the probes (stability over
        :math:`[t_0, \\infty)` is truncated there)
    """

    def __init__(self, name, horizon):
        self.name = name
        self.horizon = float(horizon)
        self.deltas = []
        self.amplifications = []
        self.decay = None
        self.certificate = None
        self.numbers = {}
        self.flags = {}

    def add_delta(self, eps, t0, delta):
        "stores one measured :math:`\\delta`"
        self.deltas.append({"eps": float(eps), "t0": float(t0),
                            "delta": float(delta),
                            "ratio": float(delta) / eps})

    def add_amplification(self, t0, horizon, value):
        "stores one measured amplification"
        self.amplifications.append({"t0": float(t0), "horizon": float(horizon),
                                    "amplification": float(value)})

    def flag(self, name, value):
        "stores one check"
        self.flags[name] = bool(value)

    @property
    def passed(self):
        "tells if every check passes"
        return len(self.flags) > 0 and all(self.flags.values())

    def delta_table(self):
        "returns the measured deltas as a DataFrame"
        return pandas.DataFrame(self.deltas, columns=["eps", "t0", "delta", "ratio"])

    def to_json_dict(self):
        "serialization, keys are always in the same order"
        return to_jsonable({
            "experiment": self.name, "horizon": self.horizon,
            "passed": self.passed, "flags": self.flags,
            "deltas": self.deltas, "amplifications": self.amplifications,
            "decay": self.decay, "certificate": self.certificate,
            "numbers": self.numbers})

    def to_json(self, indent=2):
        "returns the report as a JSON string"
        return json.dumps(self.to_json_dict(), indent=indent)

    def to_text(self):
        """
        Returns a human readable summary.
        """
        rows = ["experiment: {}".format(self.name),
                "horizon: {}".format(self.horizon)]
        if self.certificate is not None:
            rows.append("certificate: theorem {} claim {}".format(
                self.certificate.get("theorem"), self.certificate.get("claim")))
        if self.deltas:
            rows.extend(["", self.delta_table().to_string(index=False)])
        if self.amplifications:
            rows.extend(["", pandas.DataFrame(self.amplifications).to_string(
                index=False)])
        if self.decay is not None:
            rows.extend(["", "decay: rate={rate} intercept={intercept} "
                         "residual={residual}".format(**self.decay)])
        rows.append("")
        for k, v in self.flags.items():
            rows.append("{} {}".format("PASS" if v else "FAIL", k))
        return "\n".join(rows) + "\n"
