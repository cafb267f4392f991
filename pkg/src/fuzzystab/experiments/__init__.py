"""
@file
@brief Shortcuts to *experiments*.
"""

from .scenario import Scenario  # noqa
from .empirical import (  # noqa
    EmpiricalReport, amplification, delta_search, attraction_search, decay_fit)
from .runs import (  # noqa
    uniform_linear_scenario, crisp_decay_scenario, run_example_3_1,
    run_crisp_exponential, EXPERIMENTS)
