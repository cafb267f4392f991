# -*- coding: utf-8 -*-
"""
@file
@brief Lyapunov functions :math:`V(t, x)` built on the distance
:math:`d[x, \\hat{0}]` and their upper derivative along a vector field

.. math::

    D_f^+V(t, x) = \\limsup_{h \\rightarrow 0^+} \\frac{1}{h}
    \\left[V(t + h, x + h f(t, x)) - V(t, x)\\right]
"""
import numpy
from ..fuzzy.fuzzy_core import add, scale, norm
from ..fuzzy.fuzzy_calculus import HSchedule
from ..exprs.scalar_fn import ScalarFn, ClassK, parse, check_class_k
from .stability_exceptions import OutsideDomain

#: names of the constants a specification may define
CONSTANTS = ("lambda", "Lambda", "gamma", "K", "p", "q", "delta", "f_bound")


def _as_fn(f):
    if f is None or isinstance(f, ScalarFn):
        return f
    if isinstance(f, str):
        return parse(f)
    raise TypeError("Unexpected type {} for a function.".format(type(f)))


class MetricPower:
    """
    :math:`V(t, x) = c \\, d[x, \\hat{0}]^r`.
    """

    def __init__(self, c=1., r=1.):
        if not c > 0 or not r > 0:
            raise ValueError("c and r must be > 0 not c={} r={}.".format(c, r))
        self.c = float(c)
        self.r = float(r)

    def __call__(self, t, d):
        return self.c * d ** self.r

    def weight(self, t):
        "returns *c*"
        return self.c

    def lipschitz(self, t, rho):
        """
        Lipschitz constant in *x* on :math:`S(\\rho)`,
        infinite if *r < 1*.
        """
        if self.r < 1:
            return numpy.inf
        return self.c * self.r * rho ** (self.r - 1)

    def to_json_dict(self):
        "serialization"
        return {"family": "metric_power", "c": self.c, "r": self.r}

    def __repr__(self):
        "usual"
        return "MetricPower(c={}, r={})".format(self.c, self.r)


class WeightedMetric:
    """
    :math:`V(t, x) = \\varphi(t) \\, d[x, \\hat{0}]^r`.
    """

    def __init__(self, phi, r=1.):
        if not r > 0:
            raise ValueError("r must be > 0 not {}.".format(r))
        self.phi = _as_fn(phi)
        self.r = float(r)

    def __call__(self, t, d):
        return self.phi(t, 0.) * d ** self.r

    def weight(self, t):
        "returns :math:`\\varphi(t)`"
        return self.phi(t, 0.)

    def lipschitz(self, t, rho):
        """
        Lipschitz constant in *x* on :math:`S(\\rho)`,
        infinite if *r < 1*.
        """
        if self.r < 1:
            return numpy.inf
        return abs(self.phi(t, 0.)) * self.r * rho ** (self.r - 1)

    def to_json_dict(self):
        "serialization"
        return {"family": "weighted_metric", "phi": str(self.phi), "r": self.r}

    def __repr__(self):
        "usual"
        return "WeightedMetric({!r}, r={})".format(str(self.phi), self.r)


class LyapunovSpec:
    """
    Everything the stability theorems need.

    :param V: @see cl MetricPower or @see cl WeightedMetric
    :param rho: radius of the domain :math:`S(\\rho)`
    :param g: right side :math:`g(t, w)` of the comparison equation
    :param L: Lipschitz modulus :math:`L(t)`, the family modulus if None
    :param a_env: lower envelope :math:`a(\\cdot)` (class K)
    :param b_env: upper envelope :math:`b(\\cdot)` (class K)
    :param c_env: lower envelope of :math:`V^*` (class K)
    :param a0_env: upper envelope :math:`a_0(t, \\cdot)`
    :param vstar: @see cl WeightedMetric, function :math:`V^*(t, x)`
    :param constants: dictionary, keys in @see va CONSTANTS

    Envelopes may be given as texts, they are checked to be
    of class K on :math:`[0, \\rho]`.
    """

    def __init__(self, V, rho, g=None, L=None, a_env=None, b_env=None,
                 c_env=None, a0_env=None, vstar=None, constants=None):
        if not isinstance(V, (MetricPower, WeightedMetric)):
            raise TypeError("Unexpected type {} for V.".format(type(V)))
        if not rho > 0:
            raise ValueError("rho must be > 0 not {}.".format(rho))
        if vstar is not None and not isinstance(vstar, (MetricPower, WeightedMetric)):
            raise TypeError("Unexpected type {} for vstar.".format(type(vstar)))
        self.V = V
        self.rho = float(rho)
        self.g = _as_fn(g)
        self.L = _as_fn(L)
        self.a_env = self._class_k(a_env)
        self.b_env = self._class_k(b_env)
        self.c_env = self._class_k(c_env)
        self.a0_env = _as_fn(a0_env)
        self.vstar = vstar
        constants = dict(constants or {})
        for k, v in constants.items():
            if k not in CONSTANTS:
                raise ValueError(
                    "Unknown constant {!r}, expecting one of {}.".format(
                        k, CONSTANTS))
            if not v > 0:
                raise ValueError("Constant {}={} must be > 0.".format(k, v))
        self.constants = {k: float(v) for k, v in constants.items()}

    def _class_k(self, env):
        if env is None or isinstance(env, ClassK):
            return env
        return check_class_k(_as_fn(env), self.rho)

    def lipschitz(self, t):
        """
        Returns :math:`L(t)`.
        """
        if self.L is None:
            return self.V.lipschitz(t, self.rho)
        return self.L(t, 0.)

    def to_json_dict(self):
        "serialization"
        res = {"V": self.V.to_json_dict(), "rho": self.rho}
        for name in ["g", "L", "a0_env"]:
            f = getattr(self, name)
            if f is not None:
                res[name] = str(f)
        for name in ["a_env", "b_env", "c_env"]:
            f = getattr(self, name)
            if f is not None:
                res[name] = str(f.fn)
        if self.vstar is not None:
            res["vstar"] = self.vstar.to_json_dict()
        if self.constants:
            res["constants"] = dict(self.constants)
        return res


def eval_V(spec, t, x):
    """
    Evaluates :math:`V(t, x)`, raises @see cl OutsideDomain
    if :math:`d[x, \\hat{0}] \\geqslant \\rho`.
    """
    d = norm(x)
    if d >= spec.rho:
        raise OutsideDomain(
            "d[x, 0]={} is outside S({}).".format(d, spec.rho))
    return spec.V(t, d)


def dini_quotients(spec, rhs, t, x, sched=None):
    """
    Returns the quotients
    :math:`\\frac{1}{h}[V(t + h, x + h f(t, x)) - V(t, x)]`
    for the two finest steps of the schedule (coarse first).
    """
    sched = sched or HSchedule.geometric()
    fx = rhs.value(t, x)
    v = eval_V(spec, t, x)
    res = []
    for h in sched.steps[-2:]:
        h = float(h)
        y = add(x, scale(h, fx))
        res.append((eval_V(spec, t + h, y) - v) / h)
    return res


def dini_upper(spec, rhs, t, x, sched=None):
    """
    Upper estimate of :math:`D_f^+V(t, x)`: the maximum of
    the quotients computed for the two finest steps of the schedule,
    see @see fn dini_quotients.
    """
    return max(dini_quotients(spec, rhs, t, x, sched))
