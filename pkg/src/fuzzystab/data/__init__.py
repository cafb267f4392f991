"""
@file
@brief Scenario files shipped with the package.
"""
import os

#: folder holding the scenario files
DATA_DIR = os.path.abspath(os.path.dirname(__file__))


def list_scenarios():
    """
    Returns the names of the scenario files shipped with the package.
    """
    return sorted(os.path.splitext(f)[0] for f in os.listdir(DATA_DIR)
                  if f.endswith(".json"))


def get_scenario_path(name):
    """
    Returns the full path of a scenario file shipped with the package,
    *name* is the file name without extension.
    """
    path = os.path.join(DATA_DIR, name + ".json")
    if not os.path.exists(path):
        raise FileNotFoundError(
            "Unknown scenario {!r}, available: {}.".format(
                name, list_scenarios()))
    return path
