# -*- coding: utf-8 -*-
"""
@file
@brief Module *fuzzystab*.
Stability of fuzzy differential equations with Lyapunov-like
functions: fuzzy sets stored as cuts, Hukuhara calculus, solvers,
comparison equations and grid-verified stability certificates.
"""

__version__ = "0.1.0"
__author__ = "fuzzystab contributors"
__license__ = "MIT License"


def check(log=False):
    """
    Checks the library is working.
    It raises an exception.

    @param      log     if True, display information, otherwise
    @return             0 or exception
    """
    from .fuzzy.fuzzy_core import FuzzyBox, sup_metric
    x = FuzzyBox.triangular([1.], [0.5])
    if sup_metric(x, x) != 0:
        raise AssertionError("The distance of a set to itself is not null.")
    if log:
        print("Success: check")
    return True


def _setup_hook(use_print=False):
    """
    if this function is added to the module,
    the help automation and unit tests call it first before
    anything goes on as an initialization step.
    """
    if use_print:
        print("Success: _setup_hook")
