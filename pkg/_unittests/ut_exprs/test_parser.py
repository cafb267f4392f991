"""
@brief      test log(time=0s)
"""
import unittest
from pyquickhelper.pycode import ExtTestCase
from fuzzystab.exprs import (
    parse_ast, to_text, tokenize, parse, ParseError, EvalError)


class TestParser(ExtTestCase):

    def test_tokenize(self):
        tokens = tokenize("1.5e2 + sin(t)")
        self.assertEqual([t.kind for t in tokens],
                         ["num", "op", "name", "op", "name", "op", "end"])
        self.assertEqual([t.offset for t in tokens], [0, 6, 8, 11, 12, 13, 14])

    def test_precedence(self):
        cases = [("1 + 2 * 3", 7.), ("(1 + 2) * 3", 9.), ("2 - 3 - 4", -5.),
                 ("8 / 4 / 2", 1.), ("2 ^ 3 ^ 2", 512.), ("-2 ^ 2", -4.),
                 ("(-2) ^ 2", 4.), ("--3", 3.), ("2 * -3", -6.),
                 ("min(1, 2) + max(1, 2)", 3.), ("pow(2, 10)", 1024.),
                 ("abs(-1.5)", 1.5), (".5 + 1.", 1.5)]
        for text, exp in cases:
            self.assertEqual(parse(text)(), exp)

    def test_variables(self):
        f = parse("1/(1+t^2)")
        self.assertAlmostEqual(f(t=1.), 0.5)
        self.assertEqual(f.variables, {"t"})
        self.assertFalse(f.depends_on("w"))
        g = parse("w * atan(t)")
        self.assertEqual(g.variables, {"t", "w"})
        self.assertAlmostEqual(g(1., 2.), 2. * 0.7853981633974483)
        self.assertEqual(parse("3").variables, set())

    def test_structural_equality(self):
        self.assertEqual(parse("w*2"), parse("w * 2"))
        self.assertEqual(parse("(w)"), parse("w"))
        self.assertNotEqual(parse("w*2"), parse("2*w"))
        self.assertEqual(len({parse("w*2"), parse(" w *2 ")}), 1)

    def test_to_text(self):
        for text in ["1/(1+t^2)", "-w^2", "2^3^2", "max(w, -t) - exp(-t)",
                     "1 - 2 - 3", "sqrt(abs(w)) * 2"]:
            node = parse_ast(text)
            self.assertEqual(parse_ast(to_text(node)), node)
        self.assertEqual(str(parse("w + 1")), "w + 1")

    def _offset(self, text):
        try:
            parse_ast(text)
        except ParseError as e:
            return e.offset, e.expected
        raise AssertionError("ParseError expected for {!r}".format(text))

    def test_errors(self):
        offset, expected = self._offset("1 +")
        self.assertEqual(offset, 3)
        self.assertIn("number", expected)
        offset, expected = self._offset("foo(1)")
        self.assertEqual(offset, 0)
        self.assertIn("sin", expected)
        offset, _ = self._offset("1 $ 2")
        self.assertEqual(offset, 2)
        offset, expected = self._offset("(1")
        self.assertEqual(offset, 2)
        self.assertIn(")", expected)
        offset, expected = self._offset("1 2")
        self.assertEqual(offset, 2)
        self.assertIn("end", expected)
        offset, _ = self._offset("")
        self.assertEqual(offset, 0)
        offset, _ = self._offset("min(1)")
        self.assertEqual(offset, 5)
        offset, _ = self._offset("1e400")
        self.assertEqual(offset, 0)
        self.assertRaise(lambda: parse_ast(3), TypeError)

    def test_bad_character(self):
        offset, _ = self._offset("é + 1")
        self.assertEqual(offset, 0)
        offset, _ = self._offset("w + 1 é")
        self.assertEqual(offset, 6)

    def test_eval_errors(self):
        cases = [("1/w", "division by zero"), ("log(w)", "log domain"),
                 ("sqrt(w - 1)", "sqrt domain"), ("w^0.5 + (-1)^0.5", "pow domain"),
                 ("exp(1000)", "overflow"), ("10^400", "overflow")]
        for text, kind in cases:
            f = parse(text)
            try:
                f(0., 0.)
            except EvalError as e:
                self.assertEqual(e.kind, kind)
            else:
                raise AssertionError("EvalError expected for {!r}".format(text))


if __name__ == "__main__":
    unittest.main()
