# -*- coding: utf-8 -*-
"""
@file
@brief Reads and validates scenario files. A scenario is a JSON
document with three sections::

    {
        "ivp": {"t0": 0, "horizon": 50, "dt": 0.05, "rho": 10,
                "x0": {"shape": "triangular", "center": [1], "spread": [0.5]},
                "rhs": {"kind": "linear", "a": "1/(1+t^2)"}},
        "lyapunov": {"V": {"family": "metric_power", "c": 1, "r": 1},
                     "g": "w/(1+t^2)", "L": "1",
                     "a_env": "w", "b_env": "w"},
        "run": {"theorem": "3.2"}
    }

*x0* is either the serialization of a @see cl FuzzyBox
(keys *alphas*, *cuts*) or a shape *crisp* (*point*),
*triangular* (*center*, *spread*), *rectangular* (*lo*, *hi*)
with an optional number of *levels*. Unknown keys are rejected.
"""
import json
import numpy
from ..fuzzy.fuzzy_core import FuzzyBox, LevelGrid, resample
from ..fuzzy.fuzzy_exceptions import FuzzyException
from ..exprs.exprs_exceptions import ExpressionException, ParseError
from ..exprs.scalar_fn import parse
from ..ode.fuzzy_ivp import FuzzyIVP, LinearScalar, EndpointField
from ..stability.lyapunov import (
    LyapunovSpec, MetricPower, WeightedMetric, CONSTANTS)
from ..stability.sampling import SamplingPlan, default_states

SECTIONS = {"ivp", "lyapunov", "run"}
IVP_KEYS = {"t0", "horizon", "dt", "rho", "x0", "rhs"}
LYAPUNOV_KEYS = {"V", "rho", "g", "L", "a_env", "b_env", "c_env", "a0_env",
                 "vstar", "constants"}
RUN_KEYS = {"experiment", "theorem", "t_max", "t_step", "eps_list",
            "probe_horizon"}


class ScenarioError(ValueError):
    """
    Raised when a scenario file is invalid.

    :param message: message
    :param path: location in the document (``ivp.rhs.a``) or file name
    :param line: line number (JSON syntax errors)
    :param column: column number (JSON syntax errors, offset
        in an expression)
    """

    def __init__(self, message, path=None, line=None, column=None):
        ValueError.__init__(self, message)
        self.message = message
        self.path = path
        self.line = line
        self.column = column

    def __str__(self):
        pos = [str(p) for p in [self.path, self.line, self.column] if p is not None]
        if pos:
            return "{}: {}".format(":".join(pos), self.message)
        return self.message


def _check_keys(data, allowed, path, required=()):
    if not isinstance(data, dict):
        raise ScenarioError("Expecting an object.", path=path)
    unknown = sorted(set(data) - set(allowed))
    if unknown:
        raise ScenarioError(
            "Unknown keys {}, allowed keys are {}.".format(
                unknown, sorted(allowed)), path=path)
    missing = [k for k in required if k not in data]
    if missing:
        raise ScenarioError("Missing keys {}.".format(missing), path=path)


def _number(data, key, path, default=None, positive=False):
    if key not in data:
        if default is None:
            raise ScenarioError("Missing number.", path="{}.{}".format(path, key))
        return default
    v = data[key]
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ScenarioError("Expecting a number not {!r}.".format(v),
                            path="{}.{}".format(path, key))
    if positive and not v > 0:
        raise ScenarioError("Expecting a positive number not {!r}.".format(v),
                            path="{}.{}".format(path, key))
    return float(v)


def _vector(v, path):
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        v = [v]
    if (not isinstance(v, list) or len(v) == 0 or
            any(isinstance(e, bool) or not isinstance(e, (int, float)) for e in v)):
        raise ScenarioError("Expecting a list of numbers not {!r}.".format(v),
                            path=path)
    return numpy.array(v, dtype=numpy.float64)


def _expression(v, path):
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        v = repr(v)
    if not isinstance(v, str):
        raise ScenarioError("Expecting an expression not {!r}.".format(v),
                            path=path)
    try:
        return parse(v)
    except ParseError as e:
        raise ScenarioError(str(e), path=path,  # pylint: disable=W0707
                            column=e.offset + 1)


def read_fuzzy_box(data, path="x0"):
    """
    Builds the initial state of a scenario.
    """
    if isinstance(data, dict) and "alphas" in data:
        try:
            return FuzzyBox.from_json_dict(data)
        except (FuzzyException, ValueError, TypeError) as e:
            raise ScenarioError(str(e), path=path)  # pylint: disable=W0707
    shapes = {"crisp": ("point", ), "triangular": ("center", "spread"),
              "rectangular": ("lo", "hi")}
    if not isinstance(data, dict) or data.get("shape") not in shapes:
        raise ScenarioError(
            "Expecting a fuzzy set or a shape in {}.".format(sorted(shapes)),
            path=path)
    names = shapes[data["shape"]]
    _check_keys(data, set(names) | {"shape", "levels"}, path, required=names)
    levels = data.get("levels", None)
    if levels is not None and (isinstance(levels, bool) or
                               not isinstance(levels, int) or levels < 2):
        raise ScenarioError("levels must be an integer >= 2.",
                            path=path + ".levels")
    grid = LevelGrid.uniform(levels) if levels else LevelGrid.uniform()
    args = [_vector(data[n], "{}.{}".format(path, n)) for n in names]
    try:
        if data["shape"] == "crisp":
            return FuzzyBox.crisp(args[0], grid)
        if data["shape"] == "triangular":
            return FuzzyBox.triangular(args[0], args[1], grid)
        return FuzzyBox.rectangular(args[0], args[1], grid)
    except (FuzzyException, ValueError) as e:
        raise ScenarioError(str(e), path=path)  # pylint: disable=W0707


def read_rhs(data, path="ivp.rhs"):
    """
    Builds the right side of a scenario.
    """
    if not isinstance(data, dict) or data.get("kind") not in ("linear", "endpoint"):
        raise ScenarioError("kind must be 'linear' or 'endpoint'.", path=path)
    if data["kind"] == "linear":
        _check_keys(data, {"kind", "a"}, path, required=("a", ))
        return LinearScalar(_expression(data["a"], path + ".a"))
    _check_keys(data, {"kind", "lo", "hi"}, path, required=("lo", "hi"))
    exprs = {}
    for k in ["lo", "hi"]:
        v = data[k]
        if not isinstance(v, list):
            v = [v]
        exprs[k] = [_expression(e, "{}.{}[{}]".format(path, k, i))
                    for i, e in enumerate(v)]
    try:
        return EndpointField(exprs["lo"], exprs["hi"])
    except ValueError as e:
        raise ScenarioError(str(e), path=path)  # pylint: disable=W0707


def _read_V(data, path):
    if not isinstance(data, dict):
        raise ScenarioError("Expecting an object.", path=path)
    family = data.get("family")
    try:
        if family == "metric_power":
            _check_keys(data, {"family", "c", "r"}, path)
            return MetricPower(_number(data, "c", path, 1.),
                               _number(data, "r", path, 1.))
        if family == "weighted_metric":
            _check_keys(data, {"family", "phi", "r"}, path, required=("phi", ))
            return WeightedMetric(_expression(data["phi"], path + ".phi"),
                                  _number(data, "r", path, 1.))
    except ValueError as e:
        if isinstance(e, ScenarioError):
            raise
        raise ScenarioError(str(e), path=path)  # pylint: disable=W0707
    raise ScenarioError(
        "family must be 'metric_power' or 'weighted_metric'.", path=path)


class ScenarioFile:
    """
    Validated content of a scenario file.

    :param ivp: @see cl FuzzyIVP
    :param spec: @see cl LyapunovSpec or None
    :param run: dictionary, options of the commands
    :param source: file name
    """

    def __init__(self, ivp, spec=None, run=None, source=None):
        self.ivp = ivp
        self.spec = spec
        self.run = run or {}
        self.source = source

    def sampling_plan(self, seed=0):
        """
        Returns the sampling plan of the certificate, states
        are shuffled with *seed*.
        """
        if self.spec is None:
            raise ScenarioError("Section 'lyapunov' is missing.",
                                path=self.source)
        t_max = self.run.get("t_max", 20.)
        t_step = self.run.get("t_step", 0.5)
        t_grid = numpy.arange(int(round(t_max / t_step)) + 1) * t_step
        states = default_states(self.spec.rho, dim=self.ivp.x0.dim,
                                grid=self.ivp.x0.grid)
        order = numpy.random.RandomState(seed).permutation(len(states))
        kwargs = {}
        if "eps_list" in self.run:
            kwargs["eps_list"] = self.run["eps_list"]
        if "probe_horizon" in self.run:
            kwargs["probe_horizon"] = self.run["probe_horizon"]
        return SamplingPlan([states[i] for i in order], t_grid=t_grid, **kwargs)


def parse_scenario(text, source=None, levels=None, horizon=None, dt=None):
    """
    Parses and validates a scenario.

    :param text: JSON content
    :param source: file name, used in error messages
    :param levels: overrides the number of levels of *x0*
        (@see fn resample)
    :param horizon: overrides the horizon
    :param dt: overrides the step
    :return: @see cl ScenarioFile

    The function raises @see cl ScenarioError.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ScenarioError(e.msg, path=source,  # pylint: disable=W0707
                            line=e.lineno, column=e.colno)
    _check_keys(data, SECTIONS, source or "scenario", required=("ivp", ))

    sec = data["ivp"]
    _check_keys(sec, IVP_KEYS, "ivp", required=("x0", "rhs"))
    x0 = read_fuzzy_box(sec["x0"], "ivp.x0")
    if levels is not None:
        x0 = resample(x0, LevelGrid.uniform(levels))
    rhs = read_rhs(sec["rhs"])
    t0 = _number(sec, "t0", "ivp", 0.)
    try:
        ivp = FuzzyIVP(
            x0, rhs, t0=t0,
            horizon=horizon if horizon is not None else _number(
                sec, "horizon", "ivp", 50., positive=True),
            dt=dt if dt is not None else _number(
                sec, "dt", "ivp", 0.05, positive=True),
            rho=_number(sec, "rho", "ivp", numpy.inf, positive=True))
    except (ValueError, ExpressionException) as e:
        raise ScenarioError(str(e), path="ivp")  # pylint: disable=W0707

    spec = None
    if "lyapunov" in data:
        sec = data["lyapunov"]
        _check_keys(sec, LYAPUNOV_KEYS, "lyapunov", required=("V", ))
        kwargs = {}
        for k in ["g", "L", "a_env", "b_env", "c_env", "a0_env"]:
            if k in sec:
                kwargs[k] = _expression(sec[k], "lyapunov." + k)
        if "vstar" in sec:
            kwargs["vstar"] = _read_V(sec["vstar"], "lyapunov.vstar")
        if "constants" in sec:
            _check_keys(sec["constants"], CONSTANTS, "lyapunov.constants")
            kwargs["constants"] = {
                k: _number(sec["constants"], k, "lyapunov.constants")
                for k in sec["constants"]}
        rho = _number(sec, "rho", "lyapunov", ivp.rho, positive=True)
        if not numpy.isfinite(rho):
            raise ScenarioError("rho must be finite to check a theorem.",
                                path="lyapunov.rho")
        try:
            spec = LyapunovSpec(_read_V(sec["V"], "lyapunov.V"), rho, **kwargs)
        except (ValueError, ExpressionException) as e:
            if isinstance(e, ScenarioError):
                raise
            raise ScenarioError(str(e), path="lyapunov")  # pylint: disable=W0707

    run = {}
    if "run" in data:
        sec = data["run"]
        _check_keys(sec, RUN_KEYS, "run")
        for k, v in sec.items():
            if k in ("experiment", "theorem"):
                if not isinstance(v, str):
                    raise ScenarioError("Expecting a string.",
                                        path="run." + k)
                run[k] = v
            elif k == "eps_list":
                run[k] = tuple(_vector(v, "run.eps_list").tolist())
            else:
                run[k] = _number(sec, k, "run", positive=True)
    return ScenarioFile(ivp, spec, run, source=source)


def load_scenario(filename, **kwargs):
    """
    Reads a scenario file, see @see fn parse_scenario.
    """
    try:
        with open(filename, "r", encoding="utf-8") as f:
            text = f.read()
    except OSError as e:
        raise ScenarioError(str(e), path=filename)  # pylint: disable=W0707
    return parse_scenario(text, source=filename, **kwargs)
