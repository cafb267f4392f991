# -*- coding: utf-8 -*-
"""
@file
@brief Fuzzy sets of :math:`\\mathbb{R}^n` represented by nested
:math:`\\alpha`-cuts, every cut being an axis-aligned box.

The distance between two boxes is the Hausdorff distance for the
max-coordinate norm. The distance between two fuzzy sets is the maximum
over the levels of the grid, it is a lower bound of the supremum over
the continuum :math:`\\alpha \\in [0, 1]`.
"""
import numpy
from .fuzzy_exceptions import (
    DimensionMismatch, GridMismatch, NestingError, NoHDifference)

#: absolute tolerance used by comparisons in this module
TOL = 1e-12

#: default number of levels of a @see cl LevelGrid
DEFAULT_LEVELS = 11


def _readonly(array):
    array.flags.writeable = False
    return array


class Box:
    """
    Axis-aligned box :math:`\\prod_i [lo_i, hi_i]`,
    a degenerate box (*lo == hi*) is a crisp point.
    """
    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi):
        lo = numpy.array(lo, dtype=numpy.float64).ravel()
        hi = numpy.array(hi, dtype=numpy.float64).ravel()
        if lo.shape != hi.shape or lo.shape[0] == 0:
            raise DimensionMismatch(
                "lo and hi must be non empty vectors of the same size "
                "not {} and {}.".format(lo.shape, hi.shape))
        if numpy.any(lo > hi):
            raise NestingError(
                "A box must verify lo <= hi, lo={} hi={}.".format(lo, hi))
        self.lo = _readonly(lo)
        self.hi = _readonly(hi)

    @property
    def dim(self):
        "dimension"
        return self.lo.shape[0]

    def __eq__(self, other):
        return (isinstance(other, Box) and
                numpy.array_equal(self.lo, other.lo) and
                numpy.array_equal(self.hi, other.hi))

    def __hash__(self):
        return hash((tuple(self.lo), tuple(self.hi)))

    def __repr__(self):
        "usual"
        return "Box({}, {})".format(self.lo.tolist(), self.hi.tolist())


def box_hausdorff(A, B):
    """
    Hausdorff distance between two boxes for the max-coordinate norm.

    @param      A       @see cl Box
    @param      B       @see cl Box
    @return             float
    """
    if A.dim != B.dim:
        raise DimensionMismatch(
            "Dimension mismatch {} != {}.".format(A.dim, B.dim))
    return float(max(numpy.abs(A.lo - B.lo).max(),
                     numpy.abs(A.hi - B.hi).max()))


class LevelGrid:
    """
    Discretisation :math:`0 = \\alpha_0 < \\alpha_1 < ... < \\alpha_L = 1`
    of the membership levels.
    """
    __slots__ = ("alphas",)

    def __init__(self, alphas):
        alphas = numpy.array(alphas, dtype=numpy.float64).ravel()
        if alphas.shape[0] < 2:
            raise ValueError(
                "A level grid needs at least two levels not {}.".format(
                    alphas.shape[0]))
        if alphas[0] != 0 or alphas[-1] != 1:
            raise ValueError(
                "A level grid must start at 0 and end at 1: {}.".format(
                    alphas.tolist()))
        if numpy.any(numpy.diff(alphas) <= 0):
            raise ValueError(
                "Levels must be strictly increasing: {}.".format(
                    alphas.tolist()))
        self.alphas = _readonly(alphas)

    @staticmethod
    def uniform(n_levels=DEFAULT_LEVELS):
        """
        Returns the uniform grid with *n_levels* levels,
        the default grid is :math:`\\{0, 0.1, ..., 1\\}`.
        """
        if n_levels < 2:
            raise ValueError(
                "n_levels must be >= 2 not {}.".format(n_levels))
        alphas = numpy.linspace(0., 1., n_levels)
        alphas[0], alphas[-1] = 0., 1.
        return LevelGrid(alphas)

    def __len__(self):
        return self.alphas.shape[0]

    def __eq__(self, other):
        return (isinstance(other, LevelGrid) and
                numpy.array_equal(self.alphas, other.alphas))

    def __hash__(self):
        return hash(tuple(self.alphas))

    def __repr__(self):
        "usual"
        return "LevelGrid({})".format(self.alphas.tolist())


def enforce_nesting(lo, hi, tol=TOL):
    """
    Enforces nesting by outward rounding when violations are below *tol*,
    raises @see cl NestingError otherwise. *lo* and *hi* are arrays
    of shape *(L+1, n)*.
    """
    violation = max(
        float(numpy.max(lo - hi)),
        float(numpy.max(lo[:-1] - lo[1:], initial=-numpy.inf)),
        float(numpy.max(hi[1:] - hi[:-1], initial=-numpy.inf)))
    if violation <= 0:
        return lo, hi
    if violation > tol:
        raise NestingError(
            "Cuts are not nested, largest violation is {}.".format(violation))
    lo, hi = numpy.minimum(lo, hi), numpy.maximum(lo, hi)
    lo = numpy.minimum.accumulate(lo[::-1], axis=0)[::-1]
    hi = numpy.maximum.accumulate(hi[::-1], axis=0)[::-1]
    return lo, hi


class FuzzyBox:
    """
    Fuzzy set :math:`u \\in E^n` stored as its cuts on a @see cl LevelGrid.
    ``lo[j, i]`` and ``hi[j, i]`` are the bounds of coordinate *i* of the
    cut :math:`[u]^{\\alpha_j}`. Instances are immutable.

    :param grid: @see cl LevelGrid
    :param lo: array of shape *(L+1, n)*
    :param hi: array of shape *(L+1, n)*
    :param tol: nesting violations below this threshold are rounded outward,
        larger ones raise @see cl NestingError
    """
    __slots__ = ("grid", "lo", "hi")

    def __init__(self, grid, lo, hi, tol=TOL):
        if not isinstance(grid, LevelGrid):
            raise TypeError(
                "grid must be a LevelGrid not {}.".format(type(grid)))
        lo = numpy.array(lo, dtype=numpy.float64)
        hi = numpy.array(hi, dtype=numpy.float64)
        if lo.ndim == 1:
            lo = lo.reshape((-1, 1))
        if hi.ndim == 1:
            hi = hi.reshape((-1, 1))
        if lo.shape != hi.shape or lo.ndim != 2 or lo.shape[1] == 0:
            raise DimensionMismatch(
                "lo and hi must be matrices of the same shape "
                "not {} and {}.".format(lo.shape, hi.shape))
        if lo.shape[0] != len(grid):
            raise GridMismatch(
                "Expecting {} levels not {}.".format(len(grid), lo.shape[0]))
        if not numpy.all(numpy.isfinite(lo)) or not numpy.all(numpy.isfinite(hi)):
            raise ValueError("Cuts must be finite.")
        lo, hi = enforce_nesting(lo, hi, tol=tol)
        self.grid = grid
        self.lo = _readonly(lo + 0.)
        self.hi = _readonly(hi + 0.)

    @staticmethod
    def zero(dim, grid=None):
        """
        Returns the crisp zero :math:`\\hat{0}` of dimension *dim*.
        """
        return FuzzyBox.crisp(numpy.zeros(dim), grid=grid)

    @staticmethod
    def crisp(point, grid=None):
        """
        Returns the crisp set :math:`\\chi_{\\{x\\}}`.
        """
        grid = grid or LevelGrid.uniform()
        point = numpy.array(point, dtype=numpy.float64).ravel()
        cut = numpy.tile(point, (len(grid), 1))
        return FuzzyBox(grid, cut, cut.copy())

    @staticmethod
    def rectangular(lo, hi, grid=None):
        """
        Returns the fuzzy set whose cuts are all equal to the box *[lo, hi]*.
        """
        grid = grid or LevelGrid.uniform()
        box = Box(lo, hi)
        return FuzzyBox(grid, numpy.tile(box.lo, (len(grid), 1)),
                        numpy.tile(box.hi, (len(grid), 1)))

    @staticmethod
    def triangular(center, spread, grid=None):
        """
        Returns the triangular fuzzy set with cuts
        :math:`center \\pm (1 - \\alpha) spread`.
        """
        grid = grid or LevelGrid.uniform()
        center = numpy.array(center, dtype=numpy.float64).ravel()
        spread = numpy.array(spread, dtype=numpy.float64).ravel()
        if numpy.any(spread < 0):
            raise ValueError("spread must be positive.")
        half = numpy.outer(1. - grid.alphas, spread)
        return FuzzyBox(grid, center - half, center + half)

    @staticmethod
    def from_cuts(grid, cuts):
        """
        Builds a fuzzy set from a list of @see cl Box, one per level.
        """
        if len(cuts) != len(grid):
            raise GridMismatch(
                "Expecting {} cuts not {}.".format(len(grid), len(cuts)))
        dims = set(c.dim for c in cuts)
        if len(dims) != 1:
            raise DimensionMismatch(
                "All cuts must share the same dimension: {}.".format(dims))
        return FuzzyBox(grid, numpy.vstack([c.lo for c in cuts]),
                        numpy.vstack([c.hi for c in cuts]))

    @property
    def dim(self):
        "dimension *n*"
        return self.lo.shape[1]

    @property
    def cuts(self):
        "list of cuts as @see cl Box"
        return [self.cut(j) for j in range(len(self.grid))]

    def cut(self, j):
        """
        Returns the cut at level *j* as a @see cl Box.
        """
        if not 0 <= j < len(self.grid):
            raise IndexError(
                "Level {} out of range [0, {}].".format(j, len(self.grid) - 1))
        return Box(self.lo[j], self.hi[j])

    def is_crisp(self):
        "tells if every cut is a single point"
        return bool(numpy.array_equal(self.lo, self.hi) and
                    numpy.array_equal(self.lo[0], self.lo[-1]))

    def __eq__(self, other):
        return (isinstance(other, FuzzyBox) and self.grid == other.grid and
                numpy.array_equal(self.lo, other.lo) and
                numpy.array_equal(self.hi, other.hi))

    def __hash__(self):
        return hash((self.grid, self.lo.tobytes(), self.hi.tobytes()))

    def __add__(self, other):
        return add(self, other)

    def __rmul__(self, lam):
        return scale(lam, self)

    def __repr__(self):
        "usual"
        return "FuzzyBox({!r}, {}, {})".format(
            self.grid, self.lo.tolist(), self.hi.tolist())

    def to_json_dict(self):
        """
        Returns a dictionary
        ``{"alphas": [...], "cuts": [{"lo": [...], "hi": [...]}, ...]}``.
        """
        return {"alphas": self.grid.alphas.tolist(),
                "cuts": [{"lo": lo.tolist(), "hi": hi.tolist()}
                         for lo, hi in zip(self.lo, self.hi)]}

    @staticmethod
    def from_json_dict(data):
        """
        Restores a fuzzy set from the output of @see me to_json_dict.
        """
        if not isinstance(data, dict) or set(data) != {"alphas", "cuts"}:
            raise ValueError(
                "A fuzzy set needs exactly keys 'alphas' and 'cuts'.")
        grid = LevelGrid(data["alphas"])
        cuts = []
        for c in data["cuts"]:
            if not isinstance(c, dict) or set(c) != {"lo", "hi"}:
                raise ValueError("A cut needs exactly keys 'lo' and 'hi'.")
            cuts.append(Box(c["lo"], c["hi"]))
        return FuzzyBox.from_cuts(grid, cuts)


def _check_compatible(u, v):
    if u.grid != v.grid:
        raise GridMismatch("Fuzzy sets are defined on different grids.")
    if u.dim != v.dim:
        raise DimensionMismatch(
            "Dimension mismatch {} != {}.".format(u.dim, v.dim))


def sup_metric(u, v):
    """
    Distance :math:`d[u, v] = \\max_j d_H([u]^{\\alpha_j}, [v]^{\\alpha_j})`.
    Both fuzzy sets must share the same grid, see @see fn resample.
    """
    _check_compatible(u, v)
    return float(numpy.maximum(numpy.abs(u.lo - v.lo),
                               numpy.abs(u.hi - v.hi)).max())


def norm(u):
    """
    Returns :math:`d[u, \\hat{0}]`.
    """
    return float(numpy.maximum(numpy.abs(u.lo), numpy.abs(u.hi)).max())


def add(u, v):
    """
    Level-wise Minkowski sum.
    """
    _check_compatible(u, v)
    return FuzzyBox(u.grid, u.lo + v.lo, u.hi + v.hi)


def scale(lam, u):
    """
    Level-wise product by a real, bounds are swapped when *lam < 0*.
    """
    lam = float(lam)
    if lam >= 0:
        return FuzzyBox(u.grid, lam * u.lo, lam * u.hi)
    return FuzzyBox(u.grid, lam * u.hi, lam * u.lo)


def h_difference(x, y, tol=TOL):
    """
    Hukuhara difference :math:`z = x \\ominus y`, the fuzzy set
    verifying :math:`x = y + z`.

    @param      x       @see cl FuzzyBox
    @param      y       @see cl FuzzyBox
    @param      tol     tolerance on widths and nesting
    @return             @see cl FuzzyBox

    The function raises @see cl NoHDifference if one cut of *x* is
    narrower than the same cut of *y* or if the result is not nested.
    """
    _check_compatible(x, y)
    gap = (x.hi - x.lo) - (y.hi - y.lo)
    if gap.min() < -tol:
        j, i = numpy.unravel_index(numpy.argmin(gap), gap.shape)
        raise NoHDifference(
            "Width of x is smaller than width of y at level {} "
            "coordinate {} (gap={}).".format(j, i, gap[j, i]),
            level=int(j), coordinate=int(i))
    try:
        return FuzzyBox(x.grid, x.lo - y.lo, x.hi - y.hi, tol=tol)
    except NestingError as e:
        raise NoHDifference(  # pylint: disable=W0707
            "The difference is not nested: {}".format(e))


def diameter(u, j):
    """
    Width *hi - lo* per coordinate of the cut at level *j*.
    """
    if not 0 <= j < len(u.grid):
        raise IndexError(
            "Level {} out of range [0, {}].".format(j, len(u.grid) - 1))
    return u.hi[j] - u.lo[j]


def resample(u, grid):
    """
    Moves a fuzzy set to another grid. The cut at level :math:`\\beta`
    is the cut of the largest original level :math:`\\alpha_j \\leqslant \\beta`,
    it contains the true cut (outward rounding).
    """
    if grid == u.grid:
        return u
    index = numpy.searchsorted(u.grid.alphas, grid.alphas, side='right') - 1
    return FuzzyBox(grid, u.lo[index], u.hi[index])
