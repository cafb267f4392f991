"""
@file
@brief Shortcuts to *stability*.
"""

from .lyapunov import (  # noqa
    MetricPower, WeightedMetric, LyapunovSpec, eval_V, dini_quotients,
    dini_upper, CONSTANTS)
from .sampling import SamplingPlan, default_states  # noqa
from .certificate import (  # noqa
    StabilityClaim, HypothesisMargin, ExponentialBounds, StabilityCertificate,
    to_jsonable)
from .scalar_probe import (  # noqa
    ScalarStability, ScalarProbeResult, scalar_stability_probe)
from .theorems import check_theorem, THEOREMS  # noqa
from .stability_exceptions import (  # noqa
    StabilityException, OutsideDomain, MissingHypothesis, ProbePrecondition)
