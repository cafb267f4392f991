"""
@file
@brief Shortcuts to *cli*.
"""

from .scenario_file import (  # noqa
    ScenarioError, ScenarioFile, parse_scenario, load_scenario,
    read_fuzzy_box, read_rhs)
from .commands import (  # noqa
    main, build_parser, EXIT_OK, EXIT_USAGE, EXIT_SOLVER, EXIT_FALSIFIED)
