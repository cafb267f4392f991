"""
@file
@brief Exceptions raised while parsing or evaluating expressions.
"""


class ExpressionException(ValueError):
    """
    base class for exceptions raised by :mod:`fuzzystab.exprs`
    """
    pass


class ParseError(ExpressionException):
    """
    Raised when a text is not a valid expression.

    :param message: message
    :param offset: byte offset of the faulty token in the text
    :param expected: set of tokens which would have been accepted
    """

    def __init__(self, message, offset, expected):
        self.offset = offset
        self.expected = frozenset(expected)
        ExpressionException.__init__(
            self, "{} at offset {} (expected one of {}).".format(
                message, offset, ", ".join(sorted(self.expected))))


class EvalError(ExpressionException):
    """
    Raised when an evaluation leaves the domain of an operator,
    *kind* is a short label such as ``'division by zero'``,
    *operand* is the faulty value.
    """

    def __init__(self, kind, operand):
        self.kind = kind
        self.operand = operand
        ExpressionException.__init__(
            self, "{} (operand={!r})".format(kind, operand))


class NotClassK(ExpressionException):
    """
    Raised when a function is not of class K,
    *pair* holds the two sampled points ``(w1, w2)`` with *w1 < w2*
    and *f(w1) >= f(w2)*, or ``(0, f(0))`` if *f(0) != 0*.
    """

    def __init__(self, message, pair):
        self.pair = pair
        ExpressionException.__init__(self, message)
