# -*- coding: utf-8 -*-
"""
@file
@brief A scenario gathers a fuzzy problem, a Lyapunov specification
and the grids used to measure stability empirically.
"""
import numpy
from ..fuzzy.fuzzy_core import FuzzyBox, norm, scale
from ..ode.fuzzy_ivp import FuzzyIVP
from ..stability.lyapunov import LyapunovSpec


class Scenario:
    """
    Empirical stability experiment.

    :param name: scenario name
    :param ivp: @see cl FuzzyIVP, its initial state is a template
        scaled by the probes
    :param spec: @see cl LyapunovSpec or None
    :param theorem: theorem to check (``"3.1"`` to ``"3.5"``) or None
    :param eps_list: tubes of the :math:`\\delta(\\epsilon)` search
    :param t0_list: initial times of the probes
    :param scales: initial distances :math:`d[x_0, \\hat{0}]` of the
        decay probes
    :param horizon: horizon of the probes, the problem horizon if None
    :param tol: step-halving tolerance of the probes
    """

    def __init__(self, name, ivp, spec=None, theorem=None,
                 eps_list=(0.1, 0.5, 1.0), t0_list=(0., 1., 5.),
                 scales=(1., ), horizon=None, tol=1e-6):
        if not isinstance(ivp, FuzzyIVP):
            raise TypeError("ivp must be a FuzzyIVP not {}.".format(type(ivp)))
        if spec is not None and not isinstance(spec, LyapunovSpec):
            raise TypeError(
                "spec must be a LyapunovSpec not {}.".format(type(spec)))
        if norm(ivp.x0) == 0:
            raise ValueError("The initial state cannot be zero, it is scaled.")
        self.name = name
        self.ivp = ivp
        self.spec = spec
        self.theorem = theorem
        self.eps_list = tuple(sorted(float(e) for e in eps_list))
        self.t0_list = tuple(sorted(float(t) for t in t0_list))
        self.scales = tuple(float(s) for s in scales)
        self.horizon = float(horizon if horizon is not None else ivp.horizon)
        self.tol = tol
        for v in self.eps_list + self.scales:
            if not 0 < v < self.rho:
                raise ValueError(
                    "Probes must stay inside S({}), {} is not.".format(
                        self.rho, v))
        if self.t0_list and max(self.t0_list) >= self.horizon:
            raise ValueError(
                "Initial times must be < horizon={}.".format(self.horizon))
        self._cache = {}

    @property
    def rho(self):
        "radius of the domain"
        return self.ivp.rho

    def probe_shapes(self):
        """
        Returns the initial states of the probes, all at distance 1
        from :math:`\\hat{0}`: the normalized template and a crisp point.
        """
        x0 = self.ivp.x0
        shapes = [scale(1. / norm(x0), x0)]
        crisp = FuzzyBox.crisp(numpy.ones(x0.dim), x0.grid)
        if crisp != shapes[0]:
            shapes.append(crisp)
        return shapes

    def problem(self, x0, t0, horizon=None, rho=None):
        """
        Returns the problem starting from *x0* at *t0*.
        """
        return self.ivp.replace(
            x0=x0, t0=t0, horizon=horizon if horizon is not None else self.horizon,
            rho=rho if rho is not None else self.rho)

    def __repr__(self):
        "usual"
        return "Scenario({!r}, {!r}, theorem={!r})".format(
            self.name, self.ivp, self.theorem)
