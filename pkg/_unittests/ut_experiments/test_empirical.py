"""
@brief      test log(time=5s)
"""
import json
import math
import unittest
from pyquickhelper.loghelper import fLOG
from pyquickhelper.pycode import ExtTestCase
from fuzzystab.fuzzy import FuzzyBox
from fuzzystab.ode import FuzzyIVP, LinearScalar, EndpointField, solve
from fuzzystab.experiments import (
    Scenario, EmpiricalReport, amplification, delta_search,
    attraction_search, decay_fit)


def linear(a, horizon=10., rho=10., x0=None):
    x0 = x0 or FuzzyBox.triangular([1.], [0.5])
    ivp = FuzzyIVP(x0, LinearScalar(a), horizon=horizon, dt=0.05, rho=rho)
    return Scenario("linear", ivp)


class TestEmpirical(ExtTestCase):

    def test_scenario(self):
        scn = linear("0")
        self.assertEqual(scn.rho, 10.)
        self.assertEqual(scn.horizon, 10.)
        shapes = scn.probe_shapes()
        self.assertEqual(len(shapes), 2)
        self.assertTrue(shapes[1].is_crisp())
        scn = linear("0", x0=FuzzyBox.crisp([2.]))
        self.assertEqual(len(scn.probe_shapes()), 1)
        self.assertIn("linear", repr(scn))

    def test_scenario_errors(self):
        ivp = FuzzyIVP(FuzzyBox.crisp([1.]), LinearScalar("0"), horizon=10.,
                       rho=2.)
        self.assertRaise(lambda: Scenario("s", "ivp"), TypeError)
        self.assertRaise(lambda: Scenario("s", ivp, spec="V"), TypeError)
        self.assertRaise(lambda: Scenario("s", ivp.replace(x0=FuzzyBox.zero(1))),
                         ValueError)
        self.assertRaise(lambda: Scenario("s", ivp, eps_list=(0.5, 2.)),
                         ValueError)
        self.assertRaise(lambda: Scenario("s", ivp, t0_list=(0., 12.)),
                         ValueError)

    def test_delta_constant(self):
        fLOG(__file__, self._testMethodName, OutputPrint=__name__ == "__main__")
        scn = linear("0")
        self.assertEqual(amplification(scn, 0.), 1.)
        self.assertEqual(delta_search(scn, 0.5, 0., fLOG=fLOG), 0.5)
        self.assertRaise(lambda: delta_search(scn, 10., 0.), ValueError)

    def test_delta_unstable(self):
        scn = linear("1", horizon=30.)
        self.assertEqual(delta_search(scn, 0.5, 0.), 0.)

    def test_delta_bisection(self):
        x0 = FuzzyBox.crisp([2.])
        ivp = FuzzyIVP(x0, EndpointField(["-w"], ["-w"]), horizon=5., dt=0.05,
                       rho=10.)
        scn = Scenario("decay", ivp, t0_list=(0., 1.))
        # the probe at distance 0.5 touches the tube and is rejected
        delta = delta_search(scn, 0.5, 0.)
        self.assertLess(delta, 0.5)
        self.assertAlmostEqual(delta, 0.5 * (1 - 2. ** -10), places=12)
        self.assertEqual(amplification(scn, 0.), 1.)

    def test_attraction(self):
        scn = linear("-1", horizon=20., rho=5., x0=FuzzyBox.crisp([1.]))
        radius = attraction_search(scn, 0.)
        self.assertAlmostEqual(radius, 5., places=6)
        scn = linear("0", horizon=20., rho=5., x0=FuzzyBox.crisp([1.]))
        self.assertAlmostEqual(attraction_search(scn, 0.), 1e-3, places=9)

    def test_decay_fit(self):
        ivp = FuzzyIVP(FuzzyBox.crisp([2.]), LinearScalar("-1"), horizon=5.,
                       dt=0.05)
        fit = decay_fit(solve(ivp))
        self.assertAlmostEqual(fit["rate"], 1., places=5)
        self.assertAlmostEqual(fit["intercept"], math.log(2.), places=5)
        self.assertLess(fit["residual"], 1e-5)
        self.assertRaise(lambda: decay_fit(solve(ivp), skip=1.), ValueError)

    def test_report(self):
        report = EmpiricalReport("demo", 10.)
        self.assertFalse(report.passed)
        report.add_delta(0.5, 0., 0.25)
        report.add_amplification(0., 10., 2.)
        report.flag("ratio", True)
        self.assertTrue(report.passed)
        report.flag("other", False)
        self.assertFalse(report.passed)
        table = report.delta_table()
        self.assertEqual(list(table.columns), ["eps", "t0", "delta", "ratio"])
        self.assertEqual(table.ratio.tolist(), [0.5])
        data = json.loads(report.to_json())
        self.assertEqual(list(data), ["experiment", "horizon", "passed", "flags",
                                      "deltas", "amplifications", "decay",
                                      "certificate", "numbers"])
        text = report.to_text()
        self.assertIn("PASS ratio", text)
        self.assertIn("FAIL other", text)


if __name__ == "__main__":
    unittest.main()
