# -*- coding: utf-8 -*-
"""
@file
@brief Stability certificates, outcome of the hypothesis checks.
"""
import json
import math
from enum import Enum
import numpy


class StabilityClaim(Enum):
    """
    Stability properties of the trivial solution :math:`x = \\hat{0}`.
    """
    Stable = "Stable"
    UniformlyStable = "UniformlyStable"
    AsymptoticallyStable = "AsymptoticallyStable"
    UniformlyAsymptoticallyStable = "UniformlyAsymptoticallyStable"
    UniformlyExponentiallyStable = "UniformlyExponentiallyStable"


def to_jsonable(obj):
    """
    Converts an object into something :mod:`json` can serialize,
    numpy numbers become python numbers, non finite
    floats become strings (``"inf"``, ``"-inf"``, ``"nan"``).
    """
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, numpy.ndarray):
        return to_jsonable(obj.tolist())
    if isinstance(obj, Enum):
        return obj.value
    if isinstance(obj, (bool, numpy.bool_)):
        return bool(obj)
    if isinstance(obj, (int, numpy.integer)):
        return int(obj)
    if isinstance(obj, (float, numpy.floating)):
        obj = float(obj)
        if math.isfinite(obj):
            return obj
        return str(obj)
    if hasattr(obj, "to_json_dict"):
        return to_jsonable(obj.to_json_dict())
    return obj


class HypothesisMargin:
    """
    Worst margin of one hypothesis over the sampling plan,
    the hypothesis holds if the margin is not negative.

    :param name: hypothesis name
    :param margin: minimum over the grid
    :param t: time of the worst point (or None)
    :param x: state of the worst point (or None)
    :param detail: dictionary with extra information
    :param strict: the margin must be positive, not only nonnegative
    """

    def __init__(self, name, margin, t=None, x=None, detail=None,
                 strict=False):
        self.name = name
        self.margin = float(margin)
        self.t = None if t is None else float(t)
        self.x = x
        self.detail = detail or {}
        self.strict = strict

    @property
    def holds(self):
        "tells if the margin is not negative (positive if strict)"
        if self.strict:
            return self.margin > 0
        return self.margin >= 0

    def to_json_dict(self):
        "serialization"
        res = {"name": self.name, "holds": self.holds, "margin": self.margin}
        if self.t is not None:
            res["t"] = self.t
        if self.x is not None:
            res["x"] = self.x.to_json_dict()
        if self.detail:
            res["detail"] = self.detail
        return res

    def __repr__(self):
        "usual"
        return "HypothesisMargin({!r}, {}, t={})".format(
            self.name, self.margin, self.t)


class ExponentialBounds:
    """
    Constants of the exponential estimate

    .. math::

        d[x(t), \\hat{0}] \\leqslant \\beta(d[x_0, \\hat{0}])
        e^{-\\alpha(t - t_0)}

    with :math:`M = \\gamma / \\Lambda`, :math:`\\alpha = M / p`,
    :math:`\\delta_1 = \\delta - M`,
    :math:`\\beta_1(h) = \\Lambda h^q + K / \\delta_1`,
    :math:`\\beta(h) = (\\beta_1(h) / \\lambda)^{1/p}`.
    The Lyapunov function itself verifies
    :math:`V(t, x(t)) \\leqslant \\beta_1(d[x_0, \\hat{0}]) e^{-M(t-t_0)}`.
    """

    def __init__(self, lam, Lam, gamma, K, p, q, delta):
        self.lam = float(lam)
        self.Lam = float(Lam)
        self.gamma = float(gamma)
        self.K = float(K)
        self.p = float(p)
        self.q = float(q)
        self.delta = float(delta)
        self.M = self.gamma / self.Lam
        self.alpha = self.M / self.p
        self.delta1 = self.delta - self.M
        if not self.delta1 > 0:
            raise ValueError(
                "delta={} must be > gamma/Lambda={}.".format(self.delta, self.M))

    @staticmethod
    def from_constants(constants):
        """
        Builds the bounds from a dictionary with keys
        *lambda*, *Lambda*, *gamma*, *K*, *p*, *q*, *delta*.
        """
        return ExponentialBounds(
            constants["lambda"], constants["Lambda"], constants["gamma"],
            constants["K"], constants["p"], constants["q"], constants["delta"])

    def beta1(self, h):
        "returns :math:`\\beta_1(h)`"
        return self.Lam * h ** self.q + self.K / self.delta1

    def beta(self, h):
        "returns :math:`\\beta(h)`"
        return (self.beta1(h) / self.lam) ** (1. / self.p)

    def v_bound(self, h, elapsed):
        """
        Bound on :math:`V(t, x(t))` after *elapsed* time units.
        """
        return self.beta1(h) * numpy.exp(-self.M * elapsed)

    def decay_bound(self, h, elapsed):
        """
        Bound on :math:`d[x(t), \\hat{0}]` after *elapsed* time units.
        """
        return self.beta(h) * numpy.exp(-self.alpha * elapsed)

    def to_json_dict(self):
        "serialization"
        return {"alpha": self.alpha, "M": self.M, "delta1": self.delta1,
                "beta_params": {"lambda": self.lam, "Lambda": self.Lam,
                                "q": self.q, "p": self.p, "K": self.K,
                                "delta1": self.delta1}}


class StabilityCertificate:
    """
    Outcome of @see fn check_theorem.

    :param claim: @see cl StabilityClaim or None if falsified
        or inconclusive
    :param theorem: theorem name (``"3.1"`` to ``"3.5"``)
    :param margins: list of @see cl HypothesisMargin
    :param counterexample: dictionary describing the first violated
        hypothesis at its worst point, None if every check passes
    :param bounds: dictionary (exponential constants,
        :math:`\\delta(\\epsilon)` and :math:`T(\\epsilon)` tables)
    :param plan: @see cl SamplingPlan
    :param probe: @see cl ScalarProbeResult or None
    :param note: free text
    :param exponential: @see cl ExponentialBounds or None

    The checks are done on a finite grid, the certificate is
    *grid-verified*, it is evidence, not a proof.
    """

    verification = "grid-verified"

    def __init__(self, claim, theorem, margins, counterexample=None,
                 bounds=None, plan=None, probe=None, note=None,
                 exponential=None):
        if counterexample is not None and claim is not None:
            raise ValueError("A falsified certificate cannot carry a claim.")
        if exponential is not None and claim != StabilityClaim.UniformlyExponentiallyStable:
            raise ValueError("Exponential bounds require an exponential claim.")
        self.claim = claim
        self.theorem = theorem
        self.margins = list(margins)
        self.counterexample = counterexample
        self.bounds = bounds or {}
        self.plan = plan
        self.probe = probe
        self.note = note
        self.exponential = exponential

    @property
    def falsified(self):
        "tells if a counterexample was found"
        return self.counterexample is not None

    def margin(self, name):
        """
        Returns the margin of hypothesis *name*.
        """
        for m in self.margins:
            if m.name == name:
                return m
        raise KeyError("Unknown hypothesis {!r}.".format(name))

    def to_json_dict(self):
        "serialization, keys are always in the same order"
        return to_jsonable({
            "claim": None if self.claim is None else self.claim.value,
            "theorem": self.theorem,
            "verification": self.verification,
            "margins": [m.to_json_dict() for m in self.margins],
            "counterexample": self.counterexample,
            "bounds": self.bounds,
            "probe": None if self.probe is None else self.probe.to_json_dict(),
            "note": self.note,
            "plan": None if self.plan is None else self.plan.to_json_dict()})

    def to_json(self, indent=2):
        """
        Returns the certificate as a JSON string.
        """
        return json.dumps(self.to_json_dict(), indent=indent)

    def __repr__(self):
        "usual"
        return "StabilityCertificate(claim={}, theorem={!r}, falsified={})".format(
            self.claim, self.theorem, self.falsified)
