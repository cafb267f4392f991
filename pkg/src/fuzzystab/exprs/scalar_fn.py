# -*- coding: utf-8 -*-
"""
@file
@brief Scalar functions of *(t, w)* defined by a text
and class :math:`\\mathcal{K}` envelopes.
"""
import numpy
from scipy.optimize import bisect
from .parser import parse_ast, to_text
from .exprs_exceptions import NotClassK

#: tolerance on :math:`f(0) = 0` for class K functions
ZERO_TOL = 1e-12

#: number of sampled points used to check monotonicity
N_SAMPLES = 1000


class ScalarFn:
    """
    Scalar function of the time *t* and of a state *w*
    such as :math:`a(t) = \\frac{1}{1+t^2}` or :math:`g(t, w)`.

    :param ast: syntax tree (see @see fn parse)
    :param text: original text, printed from the tree if None
    """

    __slots__ = ("ast", "text", "_fct")

    def __init__(self, ast, text=None):
        self.ast = ast
        self.text = text if text is not None else to_text(ast)
        self._fct = ast.compile()

    def __call__(self, t=0., w=0.):
        return self._fct(float(t), float(w))

    @property
    def variables(self):
        "variables used by the function"
        return self.ast.variables()

    def depends_on(self, name):
        "tells if the function uses variable *name*"
        return name in self.variables

    def __eq__(self, other):
        return isinstance(other, ScalarFn) and self.ast == other.ast

    def __hash__(self):
        return hash(self.ast)

    def __str__(self):
        "usual"
        return self.text

    def __repr__(self):
        "usual"
        return "parse({!r})".format(self.text)


def parse(text):
    """
    Parses an expression and returns a @see cl ScalarFn.

    .. runpython::
        :showcode:

        from fuzzystab.exprs import parse
        a = parse("1/(1+t^2)")
        print(a(t=1.))
    """
    return ScalarFn(parse_ast(text), text)


def evaluate(f, t, w):
    """
    Evaluates *f* at *(t, w)*, raises @see cl EvalError
    instead of returning *nan* or infinity.
    """
    return f(t, w)


class ClassK:
    """
    Function :math:`a` continuous, :math:`a(0)=0`, increasing,
    in variable *w*. Instances are built by @see fn check_class_k.
    """

    __slots__ = ("fn", "w_max", "t")

    def __init__(self, fn, w_max, t=0.):
        self.fn = fn
        self.w_max = w_max
        self.t = t

    def __call__(self, w):
        return self.fn(self.t, w)

    def inverse(self, y, xtol=1e-12):
        """
        Returns :math:`a^{-1}(y)` on :math:`[0, w_{max}]` by bisection,
        *w_max* when *y* is above :math:`a(w_{max})`.
        """
        if y <= 0:
            return 0.
        if self(self.w_max) <= y:
            return self.w_max
        return bisect(lambda w: self(w) - y, 0., self.w_max, xtol=xtol)

    def __repr__(self):
        "usual"
        return "ClassK({!r}, {})".format(self.fn.text, self.w_max)


def check_class_k(f, w_max, n_samples=N_SAMPLES, t=0.):
    """
    Checks that *f* is a class K function on :math:`[0, w_{max}]`,
    :math:`f(0) = 0` and *f* is strictly increasing on a grid
    of *n_samples* points.

    :param f: @see cl ScalarFn or text
    :param w_max: upper bound of the sampled interval
    :param n_samples: number of points
    :param t: time at which the function is evaluated
        (envelopes :math:`a_0(t, w)` depend on it)
    :return: @see cl ClassK or raises @see cl NotClassK
    """
    if isinstance(f, str):
        f = parse(f)
    if not w_max > 0:
        raise ValueError("w_max must be > 0 not {}.".format(w_max))
    f0 = f(t, 0.)
    if abs(f0) > ZERO_TOL:
        raise NotClassK("{} is not zero at zero: {}.".format(f, f0), (0., f0))
    ws = numpy.linspace(0., w_max, n_samples)
    values = numpy.array([f(t, w) for w in ws])
    bad = numpy.where(numpy.diff(values) <= 0)[0]
    if bad.shape[0] > 0:
        i = int(bad[0])
        raise NotClassK(
            "{} is not increasing between w={} and w={} ({} >= {}).".format(
                f, ws[i], ws[i + 1], values[i], values[i + 1]),
            (float(ws[i]), float(ws[i + 1])))
    return ClassK(f, w_max, t=t)


def linear_coefficient(g, t_grid, w_samples=(-2., -0.5, 0.5, 1., 3.),
                       rtol=1e-12):
    """
    Tells if :math:`g(t, w) = a(t) w` on the sampled points,
    returns the function :math:`a(t) = g(t, 1)` or None.
    """
    for t in t_grid:
        a = g(t, 1.)
        for w in w_samples:
            if abs(g(t, w) - a * w) > rtol * max(1., abs(a * w)):
                return None
    return lambda t: g(t, 1.)
