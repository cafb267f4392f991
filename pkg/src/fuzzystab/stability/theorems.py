# -*- coding: utf-8 -*-
"""
@file
@brief Checks the hypotheses of the Lyapunov stability theorems
for fuzzy differential equations on a @see cl SamplingPlan
and builds a @see cl StabilityCertificate.

* ``3.1``: Lipschitz, :math:`a(d) \\leqslant V`,
  :math:`D_f^+V \\leqslant g(t, V)`, zero solution of
  :math:`w' = g(t, w)` stable, gives stability
  (asymptotic stability if the zero solution is asymptotically stable).
* ``3.2``: same with :math:`a(d) \\leqslant V \\leqslant b(d)`,
  uniform versions.
* ``3.3``: *f* bounded, :math:`a(d) \\leqslant V \\leqslant a_0(t, d)`,
  :math:`D_f^+V + V^* \\leqslant g(t, V)`, :math:`V^* \\geqslant c(d)`,
  *g* nondecreasing in *w*, zero solution stable, gives
  asymptotic stability.
* ``3.4``: same as ``3.3`` with :math:`V \\leqslant b(d)`
  and uniform stability, gives uniform asymptotic stability.
* ``3.5``: :math:`\\lambda d^p \\leqslant V \\leqslant \\Lambda d^q`,
  :math:`D_f^+V \\leqslant -\\gamma d^q + K e^{-\\delta t}`,
  :math:`\\delta > \\gamma / \\Lambda > 0`, gives uniform
  exponential stability.
"""
import numpy
from pyquickhelper.loghelper import noLOG
from ..fuzzy.fuzzy_core import norm
from ..exprs.exprs_exceptions import NotClassK
from ..exprs.scalar_fn import check_class_k
from ..ode.ode_exceptions import SolveError
from .certificate import (
    StabilityClaim, HypothesisMargin, ExponentialBounds, StabilityCertificate)
from .lyapunov import eval_V, dini_quotients
from .sampling import SamplingPlan
from .scalar_probe import scalar_stability_probe, ScalarStability
from .stability_exceptions import MissingHypothesis, OutsideDomain

#: theorems this module knows
THEOREMS = ("3.1", "3.2", "3.3", "3.4", "3.5")

#: fields or constants every theorem needs
REQUIRED = {
    "3.1": ("g", "a_env"),
    "3.2": ("g", "a_env", "b_env"),
    "3.3": ("g", "a_env", "a0_env", "vstar", "c_env", "f_bound"),
    "3.4": ("g", "a_env", "b_env", "vstar", "c_env"),
    "3.5": ("lambda", "Lambda", "gamma", "K", "p", "q", "delta"),
}

#: absolute part of the slack on the upper derivative
SLACK_DINI = 1e-6

#: relative tolerance on equalities (envelopes, Lipschitz bound)
REL_TOL = 1e-12

#: tolerance on :math:`g(t, 0) = 0`
ZERO_TOL = 1e-12

#: number of points used to check *g* is nondecreasing
N_MONOTONE = 200


def _theorem_name(which):
    name = str(which).strip()
    if name not in THEOREMS:
        raise ValueError(
            "Unknown theorem {!r}, expecting one of {}.".format(which, THEOREMS))
    return name


def _check_required(spec, name):
    missing = []
    for field in REQUIRED[name]:
        if field in spec.constants:
            continue
        if getattr(spec, field, None) is None:
            missing.append(field)
    if missing:
        raise MissingHypothesis(
            "Theorem {} needs {}.".format(name, ", ".join(missing)))


class _Worst:
    "keeps the smallest margin and where it happens"

    def __init__(self, name, strict=False):
        self.name = name
        self.strict = strict
        self.margin = numpy.inf
        self.t = None
        self.x = None
        self.detail = {}

    def update(self, margin, t=None, x=None, detail=None):
        if margin < self.margin:
            self.margin = float(margin)
            self.t = t
            self.x = x
            self.detail = detail or {}

    def result(self, **extra):
        detail = dict(self.detail)
        detail.update(extra)
        return HypothesisMargin(self.name, self.margin, t=self.t, x=self.x,
                                detail=detail, strict=self.strict)


def _lipschitz(spec, plan):
    xs = plan.x_grid
    lo = numpy.stack([x.lo for x in xs])
    hi = numpy.stack([x.hi for x in xs])
    dxy = numpy.maximum(numpy.abs(lo[:, None] - lo[None, :]),
                        numpy.abs(hi[:, None] - hi[None, :])).max(axis=(2, 3))
    worst = _Worst("lipschitz")
    for t in plan.t_grid:
        Lt = spec.lipschitz(t)
        if not numpy.isfinite(Lt):
            continue
        v = numpy.array([eval_V(spec, t, x) for x in xs])
        tol = REL_TOL * max(1., numpy.abs(v).max())
        m = Lt * dxy - numpy.abs(v[:, None] - v[None, :]) + tol
        i, j = numpy.unravel_index(numpy.argmin(m), m.shape)
        worst.update(m[i, j], t, xs[i], {"y": xs[j].to_json_dict(), "L": Lt})
    if worst.t is None:
        worst.update(numpy.inf)
    return worst.result()


def _envelopes(spec, plan, name):
    lower = _Worst("lower_envelope")
    upper = _Worst("upper_envelope")
    c = spec.constants
    for t in plan.t_grid:
        for x in plan.x_grid:
            d = norm(x)
            v = eval_V(spec, t, x)
            tol = REL_TOL * max(1., abs(v))
            if name == "3.5":
                low = c["lambda"] * d ** c["p"]
                up = c["Lambda"] * d ** c["q"]
            else:
                low = spec.a_env(d)
                if name in ("3.2", "3.4"):
                    up = spec.b_env(d)
                elif name == "3.3":
                    up = spec.a0_env(t, d)
                else:
                    up = None
            lower.update(v - low + tol, t, x)
            if up is not None:
                upper.update(up - v + tol, t, x)
    res = [lower.result()]
    if name != "3.1":
        res.append(upper.result())
    return res


def _a0_class_k(spec, plan):
    worst = _Worst("a0_class_k")
    worst.update(0.)
    for t in plan.t_grid:
        try:
            check_class_k(spec.a0_env, spec.rho, t=t)
        except NotClassK as e:
            worst.update(-1., t, None, {"pair": list(e.pair)})
            break
    return worst.result()


def _vstar_lower(spec, plan):
    worst = _Worst("vstar_lower")
    for t in plan.t_grid:
        for x in plan.x_grid:
            d = norm(x)
            v = spec.vstar(t, d)
            worst.update(v - spec.c_env(d) + REL_TOL * max(1., abs(v)), t, x)
    return worst.result()


def _g_zero(spec, plan):
    worst = _Worst("g_zero")
    for t in plan.t_grid:
        worst.update(ZERO_TOL - abs(spec.g(t, 0.)), t)
    return worst.result()


def _g_monotone(spec, plan):
    worst = _Worst("g_monotone")
    vmax = max(spec.V(t, norm(x)) for t in plan.t_grid for x in plan.x_grid)
    ws = numpy.linspace(0., max(vmax, 1e-12), N_MONOTONE)
    for t in plan.t_grid:
        gv = numpy.array([spec.g(t, w) for w in ws])
        diff = numpy.diff(gv) + REL_TOL * numpy.maximum(1., numpy.abs(gv[1:]))
        i = int(numpy.argmin(diff))
        worst.update(diff[i], t, None, {"w": [float(ws[i]), float(ws[i + 1])]})
    return worst.result()


def _f_bounded(spec, rhs, plan):
    worst = _Worst("f_bounded")
    bound = spec.constants["f_bound"]
    sup = 0.
    for t in plan.t_grid:
        for x in plan.x_grid:
            try:
                n = norm(rhs.value(t, x))
            except SolveError:
                continue
            sup = max(sup, n)
            worst.update(bound - n, t, x)
    return worst.result(sup=sup)


def _dini(spec, rhs, plan, name, fLOG):
    worst = _Worst("dini")
    c = spec.constants
    skipped = 0
    for t in plan.t_grid:
        for x in plan.x_grid:
            try:
                qs = dini_quotients(spec, rhs, t, x, plan.h_sched)
            except (OutsideDomain, SolveError):
                skipped += 1
                continue
            du = max(qs)
            slack = SLACK_DINI + 2 * abs(qs[0] - qs[1])
            d = norm(x)
            v = eval_V(spec, t, x)
            if name == "3.5":
                bound = -c["gamma"] * d ** c["q"] + c["K"] * numpy.exp(-c["delta"] * t)
            elif name in ("3.3", "3.4"):
                bound = spec.g(t, v) - spec.vstar(t, d)
            else:
                bound = spec.g(t, v)
            worst.update(bound + slack - du, t, x,
                         {"dini_upper": du, "bound": bound, "slack": slack})
    if skipped:
        fLOG("[check_theorem] dini: {} points skipped".format(skipped))
    return worst.result(skipped=skipped)


def _side_condition(spec):
    c = spec.constants
    M = c["gamma"] / c["Lambda"]
    return HypothesisMargin(
        "side_condition", min(c["delta"] - M, M),
        detail={"delta": c["delta"], "gamma_over_Lambda": M}, strict=True)


def _probe_requirement(name):
    if name in ("3.2", "3.4"):
        return "is_uniformly_stable"
    return "is_stable"


def _delta_table(spec, probe, plan):
    table = {}
    for eps in plan.eps_list:
        if eps >= spec.rho:
            continue
        delta0 = probe.delta0(spec.a_env(eps))
        table[eps] = spec.b_env.inverse(delta0)
    return table


def _claim(name, probe):
    if name == "3.1":
        if probe.kind.is_asymptotically_stable:
            return StabilityClaim.AsymptoticallyStable
        return StabilityClaim.Stable
    if name == "3.2":
        if probe.kind.is_uniformly_asymptotically_stable:
            return StabilityClaim.UniformlyAsymptoticallyStable
        return StabilityClaim.UniformlyStable
    if name == "3.3":
        return StabilityClaim.AsymptoticallyStable
    if name == "3.4":
        return StabilityClaim.UniformlyAsymptoticallyStable
    return StabilityClaim.UniformlyExponentiallyStable


def _bounds(spec, name, probe, plan):
    bounds = {}
    if name in ("3.2", "3.4"):
        bounds["delta_table"] = _delta_table(spec, probe, plan)
    if name == "3.2" and probe.kind.is_uniformly_asymptotically_stable:
        delta0 = spec.b_env.inverse(probe.delta0(spec.a_env(spec.rho)))
        delta1 = probe.attraction_radius
        bounds["attraction_radius"] = min(delta0, spec.b_env.inverse(delta1))
    if name == "3.4":
        a_rho = spec.a_env(spec.rho)
        bounds["delta0"] = spec.b_env.inverse(probe.delta0(a_rho))
        T = {}
        for eps, delta in bounds["delta_table"].items():
            cd = spec.c_env(delta)
            T[eps] = 1. + a_rho / cd if cd > 0 else numpy.inf
        bounds["T_table"] = T
    return bounds


def check_theorem(spec, rhs, which, plan=None, fLOG=noLOG):
    """
    Checks the hypotheses of one stability theorem on a sampling plan.

    :param spec: @see cl LyapunovSpec
    :param rhs: @see cl RHS, right side of the fuzzy equation
    :param which: ``"3.1"`` to ``"3.5"``
    :param plan: @see cl SamplingPlan, the default plan of
        @see fn default_states if None
    :param fLOG: logging function
    :return: @see cl StabilityCertificate

    Every hypothesis is reduced to a margin, its minimum over the plan
    is stored with the point where it happens. The first hypothesis
    with a negative margin becomes the counterexample and the
    certificate carries no claim. Theorems ``3.3`` to ``3.5``
    conclude to an attraction a fuzzy state with a positive width
    cannot follow, their hypotheses are checked on crisp states only.
    The upper derivative must verify the inequality up to a slack
    :math:`10^{-6} + 2|q_1 - q_2|` where :math:`q_1, q_2` are the
    quotients for the two finest steps. The function raises
    @see cl MissingHypothesis if the specification lacks a field
    the theorem needs.
    """
    name = _theorem_name(which)
    _check_required(spec, name)
    if plan is None:
        plan = SamplingPlan.default(spec.rho, dim=getattr(rhs, "dim", 1))
    plan.check(spec.rho)
    used = plan.crisp_only() if name in ("3.3", "3.4", "3.5") else plan
    fLOG("[check_theorem] theorem {} on {!r}".format(name, used))

    margins = []
    if name == "3.5":
        margins.append(_side_condition(spec))
    else:
        margins.append(_g_zero(spec, used))
    if name == "3.3":
        margins.append(_f_bounded(spec, rhs, used))
    margins.append(_lipschitz(spec, used))
    margins.extend(_envelopes(spec, used, name))
    if name == "3.3":
        margins.append(_a0_class_k(spec, used))
    if name in ("3.3", "3.4"):
        margins.append(_vstar_lower(spec, used))
        margins.append(_g_monotone(spec, used))
    margins.append(_dini(spec, rhs, used, name, fLOG))
    for m in margins:
        fLOG("[check_theorem] {} margin={} holds={}".format(
            m.name, m.margin, m.holds))

    probe = None
    if name != "3.5" and margins[0].holds:
        probe = scalar_stability_probe(spec.g, used, fLOG=fLOG)
        ok = getattr(probe.kind, _probe_requirement(name))
        margins.append(HypothesisMargin(
            "scalar_probe", 0. if ok else -1.,
            detail={"kind": probe.kind.value,
                    "required": _probe_requirement(name)}))

    failed = [m for m in margins if not m.holds]
    if failed:
        first = failed[0]
        if first.name == "scalar_probe" and probe.kind != ScalarStability.Falsified:
            return StabilityCertificate(
                None, name, margins, plan=used, probe=probe,
                note="scalar probe {}".format(probe.kind.value))
        cex = {"hypothesis": first.name, "margin": first.margin}
        if first.t is not None:
            cex["t"] = first.t
        if first.x is not None:
            cex["x"] = first.x.to_json_dict()
        if first.detail:
            cex["detail"] = first.detail
        if first.name == "scalar_probe":
            cex["scalar"] = probe.counterexample
        fLOG("[check_theorem] falsified by {}".format(first.name))
        return StabilityCertificate(None, name, margins, counterexample=cex,
                                    plan=used, probe=probe)

    claim = _claim(name, probe)
    exponential = None
    if name == "3.5":
        exponential = ExponentialBounds.from_constants(spec.constants)
        bounds = exponential.to_json_dict()
    else:
        bounds = _bounds(spec, name, probe, used)
    fLOG("[check_theorem] claim {}".format(claim.value))
    return StabilityCertificate(claim, name, margins, bounds=bounds,
                                plan=used, probe=probe,
                                exponential=exponential)
