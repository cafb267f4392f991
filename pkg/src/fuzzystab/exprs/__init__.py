"""
@file
@brief Shortcuts to *exprs*.
"""

from .parser import parse_ast, to_text, tokenize, FUNCTIONS, VARIABLES  # noqa
from .scalar_fn import (  # noqa
    ScalarFn, ClassK, parse, evaluate, check_class_k, linear_coefficient)
from .exprs_exceptions import (  # noqa
    ExpressionException, ParseError, EvalError, NotClassK)
