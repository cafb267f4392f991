"""
@file
@brief Shortcuts to *ode*.
"""

from .rk4 import rk4_step, rk4_run, solve_with_halving, uniform_times  # noqa
from .fuzzy_ivp import (  # noqa
    RHS, LinearScalar, EndpointField, FuzzyIVP, Trajectory, solve,
    distance_to_zero, settling_time, trajectory_to_dataframe,
    trajectory_to_csv)
from .comparison import (  # noqa
    ScalarIVP, ScalarTrajectory, Verdict, solve_scalar, maximal_solution,
    lemma_check)
from .ode_exceptions import (  # noqa
    SolveError, DomainExit, WidthViolation, NoConvergence, Blowup,
    NonMonotoneEps, ComparisonPrecondition)
