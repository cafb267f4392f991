# -*- coding: utf-8 -*-
"""
@file
@brief Finite sets of times and states replacing the quantifier
:math:`\\forall (t, x) \\in \\mathbb{R}_+ \\times S(\\rho)`.
"""
import numpy
from ..fuzzy.fuzzy_core import FuzzyBox, LevelGrid, norm
from ..fuzzy.fuzzy_calculus import HSchedule

#: number of radii of the default state grid
N_RADII = 8

#: shapes of the default state grid
SHAPES = ("crisp+", "crisp-", "triangular", "rectangular", "shifted")


def default_states(rho, dim=1, grid=None, n_radii=N_RADII):
    """
    Builds the default state grid: radii :math:`\\rho k / (n+1)`
    for :math:`1 \\leqslant k \\leqslant n`, five shapes per radius
    (crisp points :math:`\\pm r`, symmetric triangular set of spread *r*,
    symmetric rectangular set :math:`[-r, r]`, triangular set
    centered at *r/2* of spread *r/2*). Every state has
    :math:`d[x, \\hat{0}] = r`.
    """
    if not numpy.isfinite(rho) or not rho > 0:
        raise ValueError("rho must be finite and > 0 not {}.".format(rho))
    grid = grid or LevelGrid.uniform()
    ones = numpy.ones(dim)
    res = []
    for k in range(1, n_radii + 1):
        r = rho * k / (n_radii + 1)
        res.extend([
            FuzzyBox.crisp(r * ones, grid),
            FuzzyBox.crisp(-r * ones, grid),
            FuzzyBox.triangular(0. * ones, r * ones, grid),
            FuzzyBox.rectangular(-r * ones, r * ones, grid),
            FuzzyBox.triangular(r / 2 * ones, r / 2 * ones, grid)])
    return res


class SamplingPlan:
    """
    Times, states and steps used to check the hypotheses
    of the stability theorems.

    :param t_grid: sampled times, default :math:`0, 0.5, ..., 20`
    :param x_grid: list of @see cl FuzzyBox
    :param h_sched: @see cl HSchedule used to estimate
        :math:`D_f^+V`
    :param eps_list: tube sizes of the :math:`\\delta(\\epsilon)` tables
    :param probe_horizon: length of the time window of the scalar probe
    """

    def __init__(self, x_grid, t_grid=None, h_sched=None,
                 eps_list=(0.1, 0.5, 1.0), probe_horizon=50.):
        if t_grid is None:
            t_grid = numpy.arange(41) * 0.5
        t_grid = numpy.array(t_grid, dtype=numpy.float64).ravel()
        if t_grid.shape[0] == 0 or numpy.any(t_grid < 0):
            raise ValueError("t_grid must be a non empty set of times >= 0.")
        if len(x_grid) == 0:
            raise ValueError("x_grid cannot be empty.")
        grids = set(x.grid for x in x_grid)
        dims = set(x.dim for x in x_grid)
        if len(grids) != 1 or len(dims) != 1:
            raise ValueError(
                "All states must share the same grid and dimension.")
        if not probe_horizon > 0:
            raise ValueError(
                "probe_horizon must be > 0 not {}.".format(probe_horizon))
        self.t_grid = t_grid
        self.x_grid = list(x_grid)
        self.h_sched = h_sched or HSchedule.geometric()
        self.eps_list = tuple(sorted(float(e) for e in eps_list))
        self.probe_horizon = float(probe_horizon)

    @staticmethod
    def default(rho, dim=1, grid=None, **kwargs):
        """
        Returns the plan built on @see fn default_states.
        """
        return SamplingPlan(default_states(rho, dim=dim, grid=grid), **kwargs)

    @property
    def dim(self):
        "dimension of the states"
        return self.x_grid[0].dim

    @property
    def grid(self):
        "level grid of the states"
        return self.x_grid[0].grid

    def check(self, rho):
        """
        Raises ValueError if one state is not in :math:`S(\\rho)`.
        """
        for x in self.x_grid:
            d = norm(x)
            if not d < rho:
                raise ValueError(
                    "A sampled state is outside S({}): d={}.".format(rho, d))

    def crisp_only(self):
        """
        Returns the same plan restricted to crisp states.
        """
        xs = [x for x in self.x_grid if x.is_crisp()]
        if len(xs) == 0:
            raise ValueError("The plan has no crisp state.")
        return SamplingPlan(xs, t_grid=self.t_grid, h_sched=self.h_sched,
                            eps_list=self.eps_list,
                            probe_horizon=self.probe_horizon)

    def to_json_dict(self):
        "serialization"
        return {"t_grid": self.t_grid.tolist(),
                "x_grid": [x.to_json_dict() for x in self.x_grid],
                "h_sched": self.h_sched.steps.tolist(),
                "eps_list": list(self.eps_list),
                "probe_horizon": self.probe_horizon}

    def __repr__(self):
        "usual"
        return "SamplingPlan(x_grid=<{} states>, t_grid=<{} times>)".format(
            len(self.x_grid), self.t_grid.shape[0])
