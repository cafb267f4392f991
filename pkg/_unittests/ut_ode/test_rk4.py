"""
@brief      test log(time=1s)
"""
import math
import unittest
import numpy
from pyquickhelper.pycode import ExtTestCase
from fuzzystab.ode import (
    uniform_times, rk4_step, rk4_run, solve_with_halving, NoConvergence)


def exponential(t, y):
    return y


def distance(y1, y2):
    return float(numpy.abs(y1 - y2).max())


class TestRK4(ExtTestCase):

    def test_uniform_times(self):
        times = uniform_times(0., 1., 0.3)
        self.assertEqual(times.shape, (5, ))
        self.assertEqual(times[-1], 1.)
        self.assertEqual(uniform_times(0., 1., 0.25).shape, (5, ))
        self.assertRaise(lambda: uniform_times(1., 0., 0.1), ValueError)
        self.assertRaise(lambda: uniform_times(0., 1., 0.), ValueError)

    def test_rk4_step(self):
        y = rk4_step(exponential, 0., numpy.array([1.]), 0.1)
        self.assertAlmostEqual(y[0], 1 + 0.1 + 0.01 / 2 + 0.001 / 6 + 0.0001 / 24)

    def test_rk4_run(self):
        times, states = rk4_run(exponential, 0., [1.], 1., 0.01)
        self.assertEqual(times.shape[0], states.shape[0])
        self.assertLess(abs(states[-1, 0] - math.e), 1e-8)

    def test_post(self):
        def post(t, prev, y):
            return numpy.minimum(y, 2.)

        _, states = rk4_run(exponential, 0., [1.], 2., 0.01, post=post)
        self.assertEqual(states[-1, 0], 2.)

    def test_halving(self):
        times, states = solve_with_halving(
            exponential, 0., numpy.array([1.]), 1., 0.25, distance, tol=1e-10)
        self.assertLess(abs(states[-1, 0] - math.e), 1e-9)
        self.assertLess(times[1] - times[0], 0.25)

    def test_no_convergence(self):
        self.assertRaise(
            lambda: solve_with_halving(exponential, 0., numpy.array([1.]),
                                       1., 0.5, distance, tol=0.,
                                       max_halvings=2),
            NoConvergence)


if __name__ == "__main__":
    unittest.main()
