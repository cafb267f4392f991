"""
@brief      test log(time=1s)
"""
import unittest
import numpy
from pyquickhelper.pycode import ExtTestCase
from fuzzystab.fuzzy import (
    Box, LevelGrid, FuzzyBox, box_hausdorff, sup_metric, norm, add, scale,
    h_difference, diameter, resample, DimensionMismatch, GridMismatch,
    NestingError, NoHDifference)


class TestFuzzyCore(ExtTestCase):

    def test_level_grid(self):
        grid = LevelGrid.uniform()
        self.assertEqual(len(grid), 11)
        self.assertEqual(grid.alphas[0], 0.)
        self.assertEqual(grid.alphas[-1], 1.)
        self.assertEqual(grid, LevelGrid.uniform(11))
        self.assertRaise(lambda: LevelGrid([0.]), ValueError)
        self.assertRaise(lambda: LevelGrid([0., 0.5]), ValueError)
        self.assertRaise(lambda: LevelGrid([0., 0.6, 0.5, 1.]), ValueError)
        self.assertRaise(lambda: LevelGrid.uniform(1), ValueError)

    def test_box(self):
        A = Box([0., 1.], [1., 3.])
        B = Box([0.5, 1.], [1., 2.])
        self.assertEqual(A.dim, 2)
        self.assertEqual(box_hausdorff(A, B), 1.)
        self.assertEqual(box_hausdorff(A, A), 0.)
        self.assertRaise(lambda: Box([1.], [0.]), NestingError)
        self.assertRaise(lambda: Box([0.], [0., 1.]), DimensionMismatch)
        self.assertRaise(lambda: box_hausdorff(A, Box([0.], [1.])),
                         DimensionMismatch)

    def test_triangular(self):
        x = FuzzyBox.triangular([1.], [0.5])
        self.assertEqual(x.dim, 1)
        self.assertEqual(x.lo.shape, (11, 1))
        self.assertAlmostEqual(x.lo[0, 0], 0.5)
        self.assertAlmostEqual(x.hi[0, 0], 1.5)
        self.assertAlmostEqual(x.lo[-1, 0], 1.)
        self.assertAlmostEqual(x.hi[-1, 0], 1.)
        self.assertFalse(x.is_crisp())
        self.assertTrue(FuzzyBox.crisp([1., 2.]).is_crisp())
        self.assertEqual(x.cut(0), Box([0.5], [1.5]))
        self.assertEqual(len(x.cuts), 11)
        self.assertRaise(lambda: x.cut(11), IndexError)
        self.assertRaise(lambda: FuzzyBox.triangular([0.], [-1.]), ValueError)

    def test_immutable(self):
        x = FuzzyBox.triangular([1.], [0.5])

        def modify():
            x.lo[0, 0] = 5.

        self.assertRaise(modify, ValueError)

    def test_nesting(self):
        grid = LevelGrid([0., 1.])
        self.assertRaise(lambda: FuzzyBox(grid, [[0.], [-1.]], [[1.], [1.]]),
                         NestingError)
        x = FuzzyBox(grid, [[1e-14], [0.]], [[1.], [1.]])
        self.assertEqual(x.lo[0, 0], 0.)
        self.assertRaise(lambda: FuzzyBox(grid, [[0.]], [[1.]]), GridMismatch)
        self.assertRaise(lambda: FuzzyBox(grid, [[0.], [numpy.inf]],
                                          [[1.], [numpy.inf]]), ValueError)

    def test_metric(self):
        x = FuzzyBox.triangular([1.], [0.5])
        self.assertAlmostEqual(sup_metric(x, FuzzyBox.crisp([1.])), 0.5)
        self.assertAlmostEqual(norm(x), 1.5)
        self.assertEqual(norm(FuzzyBox.zero(3)), 0.)
        other = FuzzyBox.crisp([1.], LevelGrid.uniform(3))
        self.assertRaise(lambda: sup_metric(x, other), GridMismatch)
        self.assertRaise(lambda: sup_metric(x, FuzzyBox.crisp([1., 1.])),
                         DimensionMismatch)

    def test_add_scale(self):
        x = FuzzyBox.triangular([1.], [0.5])
        y = add(x, x)
        self.assertEqual(y, scale(2., x))
        self.assertEqual(x + x, 2. * x)
        z = scale(-2., x)
        self.assertAlmostEqual(z.lo[0, 0], -3.)
        self.assertAlmostEqual(z.hi[0, 0], -1.)
        self.assertEqual(scale(0., x), FuzzyBox.zero(1))
        self.assertRaise(lambda: add(x, FuzzyBox.crisp([0., 0.])),
                         DimensionMismatch)

    def test_h_difference(self):
        x = FuzzyBox.triangular([1.], [0.5])
        y = FuzzyBox.triangular([0.], [0.2])
        z = h_difference(x, y)
        self.assertEqualArray(FuzzyBox.triangular([1.], [0.3]).lo, z.lo,
                              decimal=12)
        self.assertEqualArray(FuzzyBox.triangular([1.], [0.3]).hi, z.hi,
                              decimal=12)
        self.assertLess(sup_metric(add(y, z), x), 1e-12)
        self.assertEqual(h_difference(x, x), FuzzyBox.zero(1))

    def test_h_difference_missing(self):
        x = FuzzyBox.triangular([1.], [0.5])
        try:
            h_difference(FuzzyBox.crisp([1.]), x)
        except NoHDifference as e:
            self.assertEqual(e.level, 0)
            self.assertEqual(e.coordinate, 0)
        else:
            raise AssertionError("NoHDifference was expected")

    def test_h_difference_random(self):
        rnd = numpy.random.RandomState(0)

        def random_set(dim):
            center = rnd.uniform(-10, 10, dim)
            spread = rnd.uniform(0, 5, dim)
            if rnd.randint(2):
                return FuzzyBox.triangular(center, spread)
            return FuzzyBox.rectangular(center - spread, center + spread)

        for i in range(1000):
            dim = rnd.randint(1, 4)
            y, z = random_set(dim), random_set(dim)
            x = add(y, z)
            d = h_difference(x, y)
            self.assertLess(sup_metric(d, z), 1e-12)
            self.assertLess(sup_metric(add(y, d), x), 1e-12)

        for i in range(200):
            dim = rnd.randint(1, 4)
            x = random_set(dim)
            extra = numpy.zeros(dim)
            extra[rnd.randint(dim)] = rnd.uniform(1e-3, 2)
            y = FuzzyBox.rectangular(-x.hi[0] - extra, -x.lo[0] + extra)
            self.assertRaises(NoHDifference, h_difference, x, y)

    def test_diameter(self):
        x = FuzzyBox.rectangular([0., -1.], [2., 1.])
        self.assertEqualArray(numpy.array([2., 2.]), diameter(x, 5))
        self.assertRaise(lambda: diameter(x, 20), IndexError)

    def test_resample(self):
        x = FuzzyBox.triangular([1.], [0.5])
        grid = LevelGrid.uniform(3)
        y = resample(x, grid)
        self.assertEqual(y.grid, grid)
        self.assertAlmostEqual(y.lo[1, 0], 0.75)
        self.assertAlmostEqual(y.hi[1, 0], 1.25)
        self.assertTrue(resample(x, x.grid) is x)

    def test_json(self):
        x = FuzzyBox.triangular([1., -2.], [0.5, 1.])
        data = x.to_json_dict()
        self.assertEqual(len(data["cuts"]), 11)
        self.assertEqual(FuzzyBox.from_json_dict(data), x)
        self.assertRaise(lambda: FuzzyBox.from_json_dict({"alphas": [0, 1]}),
                         ValueError)
        self.assertRaise(
            lambda: FuzzyBox.from_json_dict(
                {"alphas": [0, 1], "cuts": [{"lo": [0]}, {"lo": [0]}]}),
            ValueError)


if __name__ == "__main__":
    unittest.main()
