"""
@brief      test log(time=60s)
"""
import math
import unittest
from pyquickhelper.loghelper import fLOG
from pyquickhelper.pycode import ExtTestCase
from fuzzystab.experiments import (
    uniform_linear_scenario, crisp_decay_scenario, run_example_3_1,
    run_crisp_exponential, EXPERIMENTS)


class TestRuns(ExtTestCase):

    def test_scenarios(self):
        scn = uniform_linear_scenario()
        self.assertEqual(scn.theorem, "3.2")
        self.assertEqual(scn.rho, 10.)
        self.assertEqual(scn.horizon, 200.)
        scn = crisp_decay_scenario()
        self.assertEqual(scn.theorem, "3.5")
        self.assertTrue(scn.ivp.x0.is_crisp())
        self.assertEqual(sorted(EXPERIMENTS),
                         ["crisp-exponential", "example-3-1"])

    def test_crisp_exponential(self):
        fLOG(__file__, self._testMethodName, OutputPrint=__name__ == "__main__")
        report = run_crisp_exponential(fLOG=fLOG)
        self.assertTrue(report.passed)
        self.assertEqual(report.certificate["claim"],
                         "UniformlyExponentiallyStable")
        self.assertLess(report.numbers["soundness_worst_ratio"], 1.)
        self.assertLess(abs(report.decay["rate"] - 1.), 5e-3)

    def test_example_3_1(self):
        report = run_example_3_1()
        self.assertEqual(report.flags,
                         {k: True for k in report.flags})
        self.assertTrue(report.passed)
        self.assertEqual(report.certificate["claim"], "UniformlyStable")
        self.assertEqual(len(report.deltas), 9)
        self.assertAlmostEqual(report.numbers["expected_amplification"],
                               math.exp(math.atan(50.)))
        self.assertLess(report.numbers["closed_form_error"], 1e-6)
        self.assertIn("PASS closed_form", report.to_text())
        self.assertIn("PASS comparison_lemma", report.to_text())
        lemma = report.numbers["lemma"]
        self.assertTrue(lemma["hypothesis_holds"])
        self.assertGreater(lemma["conclusion_margin"], -1e-6)

    def test_overrides(self):
        report = run_crisp_exponential(horizon=10., dt=0.1, levels=3)
        self.assertTrue(report.passed)
        self.assertEqual(report.horizon, 10.)
        self.assertRaise(lambda: run_crisp_exponential(horizon=4.), ValueError)
        self.assertRaise(lambda: run_example_3_1(levels=1), ValueError)


if __name__ == "__main__":
    unittest.main()
