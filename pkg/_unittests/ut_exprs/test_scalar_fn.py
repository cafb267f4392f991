"""
@brief      test log(time=0s)
"""
import unittest
import numpy
from pyquickhelper.pycode import ExtTestCase
from fuzzystab.exprs import (
    parse, check_class_k, linear_coefficient, evaluate, NotClassK, EvalError)


class TestScalarFn(ExtTestCase):

    def test_evaluate(self):
        g = parse("w/(1+t^2)")
        self.assertAlmostEqual(evaluate(g, 1., 3.), 1.5)
        self.assertRaise(lambda: evaluate(parse("1/t"), 0., 0.), EvalError)
        self.assertIn("w/(1+t^2)", repr(g))

    def test_class_k(self):
        a = check_class_k("w", 10.)
        self.assertEqual(a(2.), 2.)
        self.assertAlmostEqual(a.inverse(0.5), 0.5, places=9)
        self.assertEqual(a.inverse(0.), 0.)
        self.assertEqual(a.inverse(20.), 10.)
        b = check_class_k(parse("w^2"), 2.)
        self.assertAlmostEqual(b.inverse(0.25), 0.5, places=9)

    def test_class_k_time(self):
        a0 = check_class_k("w * (1 + exp(-t))", 5., t=0.)
        self.assertEqual(a0(1.), 2.)

    def test_not_class_k(self):
        try:
            check_class_k("w - 1", 1.)
        except NotClassK as e:
            self.assertEqual(e.pair, (0., -1.))
        else:
            raise AssertionError("NotClassK expected")
        self.assertRaise(lambda: check_class_k("0", 1.), NotClassK)
        try:
            check_class_k("sin(w)", 4.)
        except NotClassK as e:
            w1, w2 = e.pair
            self.assertLess(w1, w2)
            self.assertGreater(w2, numpy.pi / 2 - 0.01)
        else:
            raise AssertionError("NotClassK expected")
        self.assertRaise(lambda: check_class_k("w", 0.), ValueError)

    def test_linear_coefficient(self):
        times = numpy.arange(5)
        a = linear_coefficient(parse("w/(1+t^2)"), times)
        self.assertTrue(a is not None)
        self.assertAlmostEqual(a(1.), 0.5)
        self.assertEqual(linear_coefficient(parse("w^2"), times), None)
        self.assertEqual(linear_coefficient(parse("w + 1"), times), None)
        a = linear_coefficient(parse("0"), times)
        self.assertEqual(a(3.), 0.)


if __name__ == "__main__":
    unittest.main()
