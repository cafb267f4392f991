"""
@brief      test log(time=20s)
"""
import math
import unittest
import numpy
from pyquickhelper.pycode import ExtTestCase
from fuzzystab.exprs import parse
from fuzzystab.fuzzy import FuzzyBox
from fuzzystab.ode import (
    ScalarIVP, ScalarTrajectory, solve_scalar, maximal_solution, lemma_check,
    ComparisonPrecondition, FuzzyIVP, LinearScalar, solve)


class TestComparison(ExtTestCase):

    def test_scalar_ivp(self):
        ivp = ScalarIVP("w", w0=1., horizon=1.)
        self.assertEqual(ivp.g, parse("w"))
        self.assertRaise(lambda: ScalarIVP("w", t0=1., horizon=1.), ValueError)
        self.assertRaise(lambda: ScalarIVP("w", dt=-1.), ValueError)
        self.assertRaise(lambda: ScalarIVP(3.), TypeError)

    def test_solve_scalar(self):
        r = solve_scalar(ScalarIVP("w", w0=1., horizon=1., dt=0.01))
        self.assertLess(abs(r.values[-1] - math.e), 1e-7)
        self.assertAlmostEqual(r(0.5), math.exp(0.5), places=3)

    def test_maximal_lipschitz(self):
        r = maximal_solution(ScalarIVP("w", w0=1., horizon=1., dt=0.01))
        self.assertLess(abs(r.values[-1] - math.e), 1e-7)
        self.assertEqual(r.values[0], 1.)
        self.assertGreater(r.upper[-1], r.values[-1])

    def test_maximal_not_unique(self):
        # w' = 2 sqrt(|w|), w(0) = 0 has solutions 0 and t^2
        r = maximal_solution(ScalarIVP("2*sqrt(abs(w))", w0=0., horizon=3.,
                                       dt=0.01))
        self.assertLess(abs(r.values[-1] - 9.), 5e-3)
        self.assertRaise(lambda: maximal_solution(ScalarIVP("w"), eps_levels=1),
                         ValueError)

    def test_trajectory(self):
        m = ScalarTrajectory.from_function(lambda t: t ** 2, [0., 1., 2.])
        self.assertEqual(len(m), 3)
        self.assertEqual(m(1.5), 2.5)
        self.assertEqual(list(m.to_dataframe().columns), ["t", "w"])
        self.assertRaise(lambda: ScalarTrajectory([0., 0.], [1., 1.]),
                         ValueError)
        self.assertRaise(lambda: ScalarTrajectory([0., 1.], [1., numpy.nan]),
                         ValueError)

    def test_lemma(self):
        times = numpy.linspace(0., 2., 201)
        m = ScalarTrajectory.from_function(lambda t: math.exp(0.5 * t), times)
        r = maximal_solution(ScalarIVP("w", w0=1., horizon=2., dt=0.01))
        verdict = lemma_check(m, "w", r)
        self.assertTrue(verdict.hypothesis_holds)
        self.assertTrue(verdict.conclusion_holds)
        self.assertGreater(verdict.conclusion_margin, -1e-6)
        self.assertIn("hypothesis_holds", verdict.to_dict())

    def test_lemma_violated(self):
        times = numpy.linspace(0., 2., 201)
        m = ScalarTrajectory.from_function(lambda t: math.exp(2 * t), times)
        r = maximal_solution(ScalarIVP("w", w0=1., horizon=2., dt=0.01))
        verdict = lemma_check(m, "w", r)
        self.assertFalse(verdict.hypothesis_holds)
        self.assertFalse(verdict.conclusion_holds)
        self.assertEqual(verdict.conclusion_time, 2.)

    def test_preconditions(self):
        times = numpy.linspace(0., 2., 201)
        r = maximal_solution(ScalarIVP("w", w0=1., horizon=2., dt=0.01))
        m = ScalarTrajectory.from_function(lambda t: 2., times)
        self.assertRaise(lambda: lemma_check(m, "w", r), ComparisonPrecondition)
        m = ScalarTrajectory.from_function(lambda t: 1., times[:100])
        self.assertRaise(lambda: lemma_check(m, "w", r), ComparisonPrecondition)

    def test_lemma_on_halved_grid(self):
        x0 = FuzzyBox.triangular([1.], [0.5])
        traj = solve(FuzzyIVP(x0, LinearScalar("1/(1+t^2)"), horizon=10.,
                              dt=0.2))
        self.assertLess(traj.times[1] - traj.times[0], 0.2)
        m = ScalarTrajectory(traj.times, traj.distances())
        r = maximal_solution(ScalarIVP("w/(1+t^2)", w0=m.values[0],
                                       horizon=10., dt=0.2), times=m.times)
        self.assertEqual(len(r), len(m))
        self.assertEqualArray(r.times, m.times)
        exact = 1.5 * numpy.exp(numpy.arctan(m.times))
        self.assertLess(numpy.abs(r.values - exact).max(), 1e-7)
        verdict = lemma_check(m, "w/(1+t^2)", r)
        self.assertTrue(verdict.hypothesis_holds)
        self.assertTrue(verdict.conclusion_holds)
        self.assertGreater(verdict.conclusion_margin, -1e-6)

    def test_maximal_times(self):
        ivp = ScalarIVP("w", w0=1., horizon=1., dt=0.1)
        times = numpy.linspace(0., 1., 37)
        r = maximal_solution(ivp, times=times)
        self.assertEqualArray(r.times, times)
        self.assertLess(numpy.abs(r.values - numpy.exp(times)).max(), 1e-7)
        self.assertRaise(lambda: maximal_solution(ivp, times=times[:20]),
                         ValueError)
        self.assertRaise(lambda: maximal_solution(ivp, times=times[::-1]),
                         ValueError)

    def test_shifted_runs_decrease(self):
        ivp = ScalarIVP("2*sqrt(abs(w))", w0=0., horizon=2., dt=0.05)
        uppers = [maximal_solution(ivp, eps_levels=2, eps0=eps0).upper
                  for eps0 in [1e-1, 1e-2, 1e-3, 1e-4]]
        for u1, u2 in zip(uppers[:-1], uppers[1:]):
            self.assertTrue(numpy.all(u2 <= u1 + 1e-9))
        ivp = ScalarIVP("-w+sin(t)", w0=0.5, horizon=2., dt=0.05)
        uppers = [maximal_solution(ivp, eps_levels=2, eps0=eps0).upper
                  for eps0 in [1e-1, 1e-2, 1e-3, 1e-4]]
        for u1, u2 in zip(uppers[:-1], uppers[1:]):
            self.assertTrue(numpy.all(u2 <= u1 + 1e-9))

    def test_maximal_matches_solve_scalar(self):
        for g, w0 in [("w/(1+t^2)", 1.), ("-w+sin(t)", 0.5),
                      ("-w^3", 2.), ("cos(t)*w", -1.)]:
            ivp = ScalarIVP(g, w0=w0, horizon=5., dt=0.05)
            s = solve_scalar(ivp)
            r = maximal_solution(ivp, times=s.times)
            self.assertLess(numpy.abs(r.values - s.values).max(), 1e-6)

    def test_lemma_random_sub_solutions(self):
        # m = m0 exp(b t) with b <= a and m0 <= w0 satisfies
        # D+m <= a m, the maximal solution of w' = a w is w0 exp(a t)
        rnd = numpy.random.RandomState(0)
        times = numpy.linspace(0., 1., 101)
        for i in range(200):
            a = round(rnd.uniform(-1., 1.), 6)
            b = a - rnd.uniform(0., 1.)
            w0 = rnd.uniform(0.1, 2.)
            m0 = w0 * rnd.uniform(0.5, 1.)
            g = "{:.6f}*w".format(a)
            m = ScalarTrajectory(times, m0 * numpy.exp(b * times))
            r = maximal_solution(ScalarIVP(g, w0=w0, horizon=1., dt=0.01),
                                 eps_levels=2, times=times)
            verdict = lemma_check(m, g, r)
            self.assertTrue(verdict.hypothesis_holds)
            self.assertTrue(verdict.conclusion_holds)
            self.assertGreater(verdict.conclusion_margin, -1e-6)

if __name__ == "__main__":
    unittest.main()
