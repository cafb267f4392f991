# -*- coding: utf-8 -*-
"""
@file
@brief Command line: ``simulate``, ``certify``, ``report``.

Exit codes: 0 success, 1 usage or invalid scenario,
2 solver failure, 3 falsified or unestablished certificate,
failed report.
"""
import argparse
import os
import sys
from ..ode.fuzzy_ivp import solve, trajectory_to_csv
from ..ode.ode_exceptions import SolveError
from ..stability.stability_exceptions import StabilityException
from ..stability.theorems import check_theorem, THEOREMS
from ..experiments.runs import EXPERIMENTS
from .scenario_file import load_scenario, ScenarioError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_SOLVER = 2
EXIT_FALSIFIED = 3


class _UsageExit(Exception):
    def __init__(self, code):
        Exception.__init__(self, code)
        self.code = code


class _ArgumentParser(argparse.ArgumentParser):
    "argument errors exit with code 1"

    def __init__(self, *args, stderr=None, **kwargs):
        argparse.ArgumentParser.__init__(self, *args, **kwargs)
        self._stderr = stderr

    def exit(self, status=0, message=None):
        if message:
            (self._stderr or sys.stderr).write(message)
        raise _UsageExit(status)

    def error(self, message):
        self.print_usage(self._stderr or sys.stderr)
        self.exit(EXIT_USAGE, "{}: error: {}\n".format(self.prog, message))


def build_parser(stderr=None):
    """
    Returns the parser of the command line.
    """
    parser = _ArgumentParser(
        prog="fuzzystab", stderr=stderr,
        description="Stability of fuzzy differential equations.")
    sub = parser.add_subparsers(dest="command")

    def common(p):
        p.add_argument("--out", default=None, help="output file")
        p.add_argument("--verbose", action="store_true",
                       help="display progress on the diagnostic stream")
        p.add_argument("--levels", type=int, default=None,
                       help="number of levels of the fuzzy states")
        p.add_argument("--horizon", type=float, default=None,
                       help="final time")
        p.add_argument("--dt", type=float, default=None, help="base step")

    def _sub(name, text):
        # subparsers inherit the exit codes
        return sub.add_parser(name, help=text, stderr=stderr)

    p = _sub("simulate", "solves the problem, writes a CSV file")
    p.add_argument("scenario", help="scenario file")
    common(p)

    p = _sub("certify", "checks a stability theorem, writes a JSON certificate")
    p.add_argument("scenario", help="scenario file")
    common(p)
    p.add_argument("--theorem", choices=THEOREMS, default=None,
                   help="theorem to check, the scenario one by default")
    p.add_argument("--seed", type=int, default=0,
                   help="seed used to shuffle the sampled states")

    p = _sub("report", "runs an experiment, writes a JSON report")
    p.add_argument("scenario",
                   help="experiment name ({}) or scenario file naming "
                        "one".format(", ".join(sorted(EXPERIMENTS))))
    common(p)
    return parser


def _logger(verbose, stderr):
    if not verbose:
        return lambda *args, **kwargs: None

    def fLOG(*args, **kwargs):
        stderr.write(" ".join(str(a) for a in args) + "\n")
    return fLOG


def _write(text, out, stdout):
    if out is None:
        stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)


def _overrides(args):
    # values shared by the sub-commands, None when not given
    if args.levels is not None and args.levels < 2:
        raise ScenarioError(
            "--levels must be >= 2 not {}.".format(args.levels), path="--levels")
    for name in ["horizon", "dt"]:
        value = getattr(args, name)
        if value is not None and not value > 0:
            raise ScenarioError(
                "--{} must be > 0 not {}.".format(name, value),
                path="--" + name)
    return dict(levels=args.levels, horizon=args.horizon, dt=args.dt)


def cmd_simulate(args, stdout, stderr):
    """
    Solves the scenario problem and writes the trajectory as CSV.
    """
    fLOG = _logger(args.verbose, stderr)
    scn = load_scenario(args.scenario, **_overrides(args))
    try:
        traj = solve(scn.ivp, fLOG=fLOG)
    except SolveError as e:
        stderr.write("solver error: {}\n".format(e))
        return EXIT_SOLVER
    if args.out is None:
        trajectory_to_csv(traj, stdout)
    else:
        trajectory_to_csv(traj, args.out)
    return EXIT_OK


def cmd_certify(args, stdout, stderr):
    """
    Checks a theorem on the scenario and writes the certificate as JSON.
    """
    fLOG = _logger(args.verbose, stderr)
    scn = load_scenario(args.scenario, **_overrides(args))
    theorem = args.theorem or scn.run.get("theorem", None)
    if theorem is None:
        stderr.write("no theorem, use --theorem\n")
        return EXIT_USAGE
    if theorem not in THEOREMS:
        raise ScenarioError("Unknown theorem {!r}.".format(theorem),
                            path="run.theorem")
    plan = scn.sampling_plan(seed=args.seed)
    try:
        cert = check_theorem(scn.spec, scn.ivp.rhs, theorem, plan=plan,
                             fLOG=fLOG)
    except StabilityException as e:
        stderr.write("invalid specification: {}\n".format(e))
        return EXIT_USAGE
    except SolveError as e:
        stderr.write("solver error: {}\n".format(e))
        return EXIT_SOLVER
    _write(cert.to_json() + "\n", args.out, stdout)
    if cert.claim is None:
        stderr.write("no claim: {}\n".format(
            cert.counterexample if cert.falsified else cert.note))
        return EXIT_FALSIFIED
    return EXIT_OK


def cmd_report(args, stdout, stderr):
    """
    Runs an experiment, writes the report as JSON in *--out*
    and as a text table on the standard output.
    *--levels*, *--horizon*, *--dt* replace the defaults of the experiment.
    """
    fLOG = _logger(args.verbose, stderr)
    kwargs = {k: v for k, v in _overrides(args).items() if v is not None}
    name = args.scenario
    if name not in EXPERIMENTS:
        if not os.path.exists(name):
            stderr.write("unknown experiment {!r}, expecting one of {}\n".format(
                name, sorted(EXPERIMENTS)))
            return EXIT_USAGE
        name = load_scenario(name).run.get("experiment", None)
        if name not in EXPERIMENTS:
            stderr.write("unknown experiment {!r}, expecting one of {}\n".format(
                name, sorted(EXPERIMENTS)))
            return EXIT_USAGE
    try:
        report = EXPERIMENTS[name](fLOG=fLOG, **kwargs)
    except SolveError as e:
        stderr.write("solver error: {}\n".format(e))
        return EXIT_SOLVER
    except ValueError as e:
        stderr.write("invalid experiment settings: {}\n".format(e))
        return EXIT_USAGE
    if args.out is not None:
        _write(report.to_json() + "\n", args.out, stdout)
    stdout.write(report.to_text())
    return EXIT_OK if report.passed else EXIT_FALSIFIED


COMMANDS = {"simulate": cmd_simulate, "certify": cmd_certify,
            "report": cmd_report}


def main(argv=None, stdout=None, stderr=None):
    """
    Entry point of the command line.

    :param argv: arguments, ``sys.argv[1:]`` if None
    :param stdout: standard output
    :param stderr: diagnostic stream
    :return: exit code
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser(stderr=stderr)
    try:
        args = parser.parse_args(argv)
    except _UsageExit as e:
        return e.code
    if args.command is None:
        parser.print_usage(stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args, stdout, stderr)
    except ScenarioError as e:
        stderr.write("invalid scenario: {}\n".format(e))
        return EXIT_USAGE
