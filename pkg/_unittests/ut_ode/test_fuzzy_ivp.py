"""
@brief      test log(time=3s)
"""
import math
import os
import unittest
import numpy
import pandas
from pyquickhelper.loghelper import fLOG
from pyquickhelper.pycode import ExtTestCase, get_temp_folder
from fuzzystab.fuzzy import FuzzyBox, HSchedule, h_derivative, sup_metric
from fuzzystab.ode import (
    LinearScalar, EndpointField, FuzzyIVP, solve, distance_to_zero,
    settling_time, trajectory_to_dataframe, trajectory_to_csv, DomainExit,
    WidthViolation)


class TestFuzzyIVP(ExtTestCase):

    def test_linear_closed_form(self):
        fLOG(__file__, self._testMethodName, OutputPrint=__name__ == "__main__")
        x0 = FuzzyBox.triangular([1.], [0.5])
        ivp = FuzzyIVP(x0, LinearScalar("1/(1+t^2)"), horizon=5., dt=0.05,
                       rho=10.)
        traj = solve(ivp, fLOG=fLOG)
        factor = math.exp(math.atan(5.))
        self.assertEqualArray(x0.lo * factor, traj.lo[-1], decimal=6)
        self.assertEqualArray(x0.hi * factor, traj.hi[-1], decimal=6)
        self.assertAlmostEqual(traj.distances()[-1], 1.5 * factor, places=6)
        self.assertEqual(traj.t0, 0.)
        self.assertEqual(traj.horizon, 5.)

    def test_negative_coefficient(self):
        # the center decays, the widths grow
        x0 = FuzzyBox.triangular([1.], [0.5])
        traj = solve(FuzzyIVP(x0, LinearScalar("-1"), horizon=1., dt=0.05))
        lo, hi = traj.lo[-1, 0, 0], traj.hi[-1, 0, 0]
        self.assertAlmostEqual((lo + hi) / 2, math.exp(-1.), places=6)
        self.assertAlmostEqual((hi - lo) / 2, 0.5 * math.e, places=6)
        widths = traj.diameters()[:, 0, 0]
        self.assertTrue(numpy.all(numpy.diff(widths) >= 0))

    def test_interpolation(self):
        x0 = FuzzyBox.crisp([1.])
        traj = solve(FuzzyIVP(x0, LinearScalar("0"), horizon=2., dt=0.5))
        self.assertEqual(len(traj.states), len(traj))
        self.assertEqual(traj(1.25), x0)
        self.assertAlmostEqual(distance_to_zero(traj, 0.3), 1.)
        self.assertRaise(lambda: traj(3.), ValueError)
        path = traj.as_path()
        self.assertEqual(path.domain, (0., 2.))

    def test_domain_exit(self):
        ivp = FuzzyIVP(FuzzyBox.crisp([1.]), LinearScalar("1"), horizon=5.,
                       dt=0.05, rho=2.)
        try:
            solve(ivp)
        except DomainExit as e:
            self.assertGreater(e.t, math.log(2.) - 0.1)
            self.assertLess(e.t, math.log(2.) + 0.1)
            self.assertGreater(e.distance, 2.)
        else:
            raise AssertionError("DomainExit expected")

    def test_width_violation(self):
        x0 = FuzzyBox.rectangular([0.], [1.])
        ivp = FuzzyIVP(x0, EndpointField(["0"], ["-w"]), horizon=1., dt=0.1)
        self.assertRaise(lambda: solve(ivp), WidthViolation)

    def test_endpoint_field(self):
        x0 = FuzzyBox.triangular([0.], [1.])
        rhs = EndpointField(["w"], ["w"])
        self.assertEqual(rhs.dim, 1)
        traj = solve(FuzzyIVP(x0, rhs, horizon=1., dt=0.05))
        self.assertAlmostEqual(traj.hi[-1, 0, 0], math.e, places=6)
        self.assertAlmostEqual(traj.lo[-1, 0, 0], -math.e, places=6)
        value = rhs.value(0., x0)
        self.assertEqual(sup_metric(value, x0), 0.)
        self.assertEqual(rhs.to_json_dict(),
                         {"kind": "endpoint", "lo": ["w"], "hi": ["w"]})

    def test_validation(self):
        x0 = FuzzyBox.crisp([1.])
        rhs = LinearScalar("-1")
        self.assertRaise(lambda: FuzzyIVP(x0, rhs, t0=2., horizon=1.),
                         ValueError)
        self.assertRaise(lambda: FuzzyIVP(x0, rhs, t0=-1.), ValueError)
        self.assertRaise(lambda: FuzzyIVP(x0, rhs, dt=0.), ValueError)
        self.assertRaise(lambda: FuzzyIVP(x0, rhs, rho=1.), ValueError)
        self.assertRaise(lambda: FuzzyIVP([1.], rhs), TypeError)
        self.assertRaise(lambda: FuzzyIVP(x0, EndpointField(["1"], ["w"])),
                         ValueError)
        self.assertRaise(
            lambda: FuzzyIVP(FuzzyBox.crisp([1., 1.]), EndpointField(["w"], ["w"])),
            ValueError)
        ivp = FuzzyIVP(x0, rhs, horizon=3.)
        self.assertEqual(ivp.replace(t0=1.).t0, 1.)
        self.assertEqual(ivp.replace(t0=1.).horizon, 3.)

    def test_settling_time(self):
        traj = solve(FuzzyIVP(FuzzyBox.crisp([1.]), LinearScalar("-1"),
                              horizon=10., dt=0.05))
        t = settling_time(traj, 0.01)
        self.assertGreater(t, math.log(100.))
        self.assertLess(t, math.log(100.) + 0.06)
        self.assertEqual(settling_time(traj, 2.), 0.)
        self.assertEqual(settling_time(traj, 1e-6), None)

    def test_csv(self):
        temp = get_temp_folder(__file__, "temp_fuzzy_ivp_csv")
        x0 = FuzzyBox.triangular([1.], [0.5])
        traj = solve(FuzzyIVP(x0, LinearScalar("0"), horizon=1., dt=0.5))
        df = trajectory_to_dataframe(traj)
        self.assertEqual(df.shape, (len(traj), 2 + 2 * 11))
        self.assertEqual(list(df.columns[:4]), ["t", "d_to_zero", "lo_0_0", "hi_0_0"])
        name = os.path.join(temp, "traj.csv")
        trajectory_to_csv(traj, name)
        self.assertExists(name)
        back = pandas.read_csv(name)
        self.assertEqual(back.shape, df.shape)
        self.assertEqualArray(df["d_to_zero"].values, back["d_to_zero"].values)

    def test_trivial_solution(self):
        for dim, a in [(1, "1/(1+t^2)"), (1, "-1"), (2, "sin(t)")]:
            traj = solve(FuzzyIVP(FuzzyBox.zero(dim), LinearScalar(a),
                                  horizon=5., dt=0.05, rho=1.))
            self.assertTrue(numpy.all(traj.lo == 0))
            self.assertTrue(numpy.all(traj.hi == 0))
            self.assertEqual(traj.distances().max(), 0.)

    def test_structure(self):
        problems = [
            (FuzzyBox.triangular([1.], [0.5]), LinearScalar("1/(1+t^2)")),
            (FuzzyBox.triangular([1., -2.], [0.5, 1.]), LinearScalar("-1")),
            (FuzzyBox.rectangular([-1.], [2.]), LinearScalar("sin(t)")),
            (FuzzyBox.triangular([0.], [1.]), EndpointField(["w"], ["w"])),
            (FuzzyBox.crisp([2.]), EndpointField(["-w"], ["-w"])),
        ]
        for x0, rhs in problems:
            traj = solve(FuzzyIVP(x0, rhs, horizon=3., dt=0.05))
            diam = traj.diameters()
            # nested cuts, widths never decrease with time
            self.assertTrue(numpy.all(diam >= -1e-10))
            self.assertTrue(numpy.all(traj.lo[:, 1:] >= traj.lo[:, :-1] - 1e-10))
            self.assertTrue(numpy.all(traj.hi[:, 1:] <= traj.hi[:, :-1] + 1e-10))
            self.assertTrue(numpy.all(diam[1:] >= diam[:-1] - 1e-10))

    def test_derivative_residual(self):
        for x0, rhs in [
                (FuzzyBox.triangular([1.], [0.5]), LinearScalar("1/(1+t^2)")),
                (FuzzyBox.triangular([1.], [0.5]), LinearScalar("-1")),
                (FuzzyBox.triangular([0.], [1.]), EndpointField(["w"], ["w"]))]:
            traj = solve(FuzzyIVP(x0, rhs, horizon=2., dt=0.01))
            path = traj.as_path()
            dt = traj.times[1] - traj.times[0]
            sched = HSchedule.geometric(dt / 4)
            for k in [1, len(traj) // 2, len(traj) - 2]:
                t = (traj.times[k] + traj.times[k + 1]) / 2
                d = h_derivative(path, t, sched)
                self.assertLess(sup_metric(d, rhs.value(t, traj(t))), 1e-3)


if __name__ == "__main__":
    unittest.main()
