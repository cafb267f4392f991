# -*- coding: utf-8 -*-
"""
@file
@brief Pratt parser for scalar expressions of *t* and *w*.

Precedence from the lowest to the highest: ``+ -``, ``* /``,
unary ``-``, ``^`` (right associative). Available functions are
listed in @see va FUNCTIONS.
"""
import math
import re
from .exprs_exceptions import ParseError, EvalError

#: variables an expression may use
VARIABLES = ("t", "w")


def _div(x, y):
    if y == 0:
        raise EvalError("division by zero", y)
    return x / y


def _log(x):
    if x <= 0:
        raise EvalError("log domain", x)
    return math.log(x)


def _sqrt(x):
    if x < 0:
        raise EvalError("sqrt domain", x)
    return math.sqrt(x)


def _pow(x, y):
    if x == 0 and y < 0:
        raise EvalError("division by zero", x)
    if x < 0 and y != int(y):
        raise EvalError("pow domain", x)
    return math.pow(x, y)


def _exp(x):
    return math.exp(x)


#: function table, name: (arity, implementation)
FUNCTIONS = {
    'sin': (1, math.sin),
    'cos': (1, math.cos),
    'exp': (1, _exp),
    'log': (1, _log),
    'sqrt': (1, _sqrt),
    'abs': (1, abs),
    'atan': (1, math.atan),
    'min': (2, min),
    'max': (2, max),
    'pow': (2, _pow),
}

_BINARY = {
    '+': lambda x, y: x + y,
    '-': lambda x, y: x - y,
    '*': lambda x, y: x * y,
    '/': _div,
    '^': _pow,
}


def _checked(value):
    if not math.isfinite(value):
        raise EvalError("overflow", value)
    return value


class Node:
    """
    Base class for the nodes of a syntax tree.
    Nodes are immutable and compared structurally.
    """
    __slots__ = ()

    def key(self):
        "structural key"
        raise NotImplementedError()  # pragma: no cover

    def compile(self):
        """
        Returns a function ``f(t, w) -> float``.
        """
        raise NotImplementedError()  # pragma: no cover

    def variables(self):
        "returns the set of variables used by the expression"
        raise NotImplementedError()  # pragma: no cover

    def __eq__(self, other):
        return isinstance(other, Node) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        "usual"
        return "{}({})".format(self.__class__.__name__, to_text(self))


class Num(Node):
    "literal"
    __slots__ = ("value",)

    def __init__(self, value):
        self.value = float(value)

    def key(self):
        return ("num", self.value)

    def compile(self):
        value = self.value
        return lambda t, w: value

    def variables(self):
        return set()


class Var(Node):
    "variable *t* or *w*"
    __slots__ = ("name",)

    def __init__(self, name):
        self.name = name

    def key(self):
        return ("var", self.name)

    def compile(self):
        if self.name == "t":
            return lambda t, w: t
        return lambda t, w: w

    def variables(self):
        return {self.name}


class Neg(Node):
    "unary minus"
    __slots__ = ("operand",)

    def __init__(self, operand):
        self.operand = operand

    def key(self):
        return ("neg", self.operand.key())

    def compile(self):
        f = self.operand.compile()
        return lambda t, w: -f(t, w)

    def variables(self):
        return self.operand.variables()


class BinOp(Node):
    "binary operator"
    __slots__ = ("op", "left", "right")

    def __init__(self, op, left, right):
        self.op = op
        self.left = left
        self.right = right

    def key(self):
        return (self.op, self.left.key(), self.right.key())

    def compile(self):
        f, g, op = self.left.compile(), self.right.compile(), _BINARY[self.op]

        def fct(t, w):
            try:
                return _checked(op(f(t, w), g(t, w)))
            except OverflowError as e:
                raise EvalError("overflow", str(e))  # pylint: disable=W0707
        return fct

    def variables(self):
        return self.left.variables() | self.right.variables()


class Call(Node):
    "function call"
    __slots__ = ("name", "args")

    def __init__(self, name, args):
        self.name = name
        self.args = tuple(args)

    def key(self):
        return ("call", self.name) + tuple(a.key() for a in self.args)

    def compile(self):
        impl = FUNCTIONS[self.name][1]
        fs = [a.compile() for a in self.args]

        def fct(t, w):
            try:
                return _checked(impl(*[f(t, w) for f in fs]))
            except OverflowError as e:
                raise EvalError("overflow", str(e))  # pylint: disable=W0707
        return fct

    def variables(self):
        res = set()
        for a in self.args:
            res |= a.variables()
        return res


def to_text(node):
    """
    Prints a syntax tree, every operator is parenthesized
    so that ``parse_ast(to_text(node)) == node``.
    """
    if isinstance(node, Num):
        return repr(node.value)
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Neg):
        return "(-{})".format(to_text(node.operand))
    if isinstance(node, BinOp):
        return "({} {} {})".format(
            to_text(node.left), node.op, to_text(node.right))
    if isinstance(node, Call):
        return "{}({})".format(
            node.name, ", ".join(to_text(a) for a in node.args))
    raise TypeError("Unexpected node type {}.".format(type(node)))


_token_pat = re.compile(
    r"\s*(?:(?P<num>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)|"
    r"(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^(),])|(?P<bad>\S))")

_PRIMARY = frozenset(["number", "t", "w", "function", "(", "-"])
_INFIX = frozenset(["+", "-", "*", "/", "^"])

# binding powers
_LBP = {'+': 10, '-': 10, '*': 20, '/': 20, '^': 40}
_UNARY_BP = 30


class _Token:
    __slots__ = ("kind", "value", "offset")

    def __init__(self, kind, value, offset):
        self.kind = kind
        self.value = value
        self.offset = offset


def tokenize(text):
    """
    Splits a text into tokens, every token keeps its byte offset.
    """
    pos = 0
    tokens = []
    while True:
        m = _token_pat.match(text, pos)
        if m is None or m.lastgroup is None:
            break
        start = m.start(m.lastgroup)
        offset = len(text[:start].encode("utf-8"))
        if m.lastgroup == "bad":
            raise ParseError("Unexpected character {!r}".format(m.group("bad")),
                             offset, _PRIMARY | _INFIX)
        tokens.append(_Token(m.lastgroup, m.group(m.lastgroup), offset))
        pos = m.end()
    tokens.append(_Token("end", None, len(text.encode("utf-8"))))
    return tokens


class _Parser:

    def __init__(self, text):
        self.tokens = tokenize(text)
        self.pos = 0

    @property
    def token(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, value):
        tok = self.token
        if tok.kind != "op" or tok.value != value:
            raise ParseError("Unexpected {}".format(_describe(tok)),
                             tok.offset, [value])
        return self.advance()

    def lbp(self):
        tok = self.token
        if tok.kind == "op":
            return _LBP.get(tok.value, 0)
        return 0

    def expression(self, rbp=0):
        left = self.nud(self.advance())
        while rbp < self.lbp():
            left = self.led(self.advance(), left)
        return left

    def nud(self, tok):
        if tok.kind == "num":
            value = float(tok.value)
            if not math.isfinite(value):
                raise ParseError("Number {!r} is too large".format(tok.value),
                                 tok.offset, ["number"])
            return Num(value)
        if tok.kind == "name":
            if tok.value in VARIABLES:
                return Var(tok.value)
            if tok.value in FUNCTIONS:
                return self.call(tok)
            raise ParseError("Unknown identifier {!r}".format(tok.value),
                             tok.offset, set(VARIABLES) | set(FUNCTIONS))
        if tok.kind == "op" and tok.value == "-":
            return Neg(self.expression(_UNARY_BP))
        if tok.kind == "op" and tok.value == "(":
            inside = self.expression()
            self.expect(")")
            return inside
        raise ParseError("Unexpected {}".format(_describe(tok)),
                         tok.offset, _PRIMARY)

    def led(self, tok, left):
        if tok.value == "^":
            # right associative
            return BinOp("^", left, self.expression(_LBP["^"] - 1))
        return BinOp(tok.value, left, self.expression(_LBP[tok.value]))

    def call(self, tok):
        arity = FUNCTIONS[tok.value][0]
        self.expect("(")
        args = [self.expression()]
        while len(args) < arity:
            self.expect(",")
            args.append(self.expression())
        self.expect(")")
        return Call(tok.value, args)


def _describe(tok):
    if tok.kind == "end":
        return "end of input"
    return "token {!r}".format(tok.value)


def parse_ast(text):
    """
    Parses a text and returns its syntax tree.

    @param      text        string
    @return                 @see cl Node

    The function raises @see cl ParseError with the byte offset
    of the faulty token and the set of expected tokens.
    """
    if not isinstance(text, str):
        raise TypeError("text must be a string not {}.".format(type(text)))
    parser = _Parser(text)
    if parser.token.kind == "end":
        raise ParseError("Empty expression", parser.token.offset, _PRIMARY)
    node = parser.expression()
    tok = parser.token
    if tok.kind != "end":
        expected = set(_INFIX) | {"end"}
        if any(t.kind == "op" and t.value == "(" for t in parser.tokens[:parser.pos]):
            expected.add(")")
        raise ParseError("Unexpected {}".format(_describe(tok)),
                         tok.offset, expected)
    return node
