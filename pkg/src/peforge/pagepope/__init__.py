"""Page-Pope construction specialised to the Hopf fibration S^(2n-1) -> CP^(n-1)."""

from .charts import Chart, chart_of_r, check_pairing, even_to_sigma, r_of, sigma_to_even
from .params import FORMAL_U, FORMAL_W, ConfigError, MetricParams
from .polynomials import (
    ConstructionError,
    compute_P,
    compute_Q,
    compute_Qtilde,
    factored_P,
    factored_Q,
    in_s,
    verify_P_ode,
)
from .profile import MetricProfile, metric_profile, r_chart_profile, to_r_chart, transport
from .sturm import (
    PositivityError,
    RootGateReport,
    count_roots,
    positivity_gate,
    sign_variations,
    sturm_sequence,
)

__all__ = [
    "Chart",
    "ConfigError",
    "ConstructionError",
    "FORMAL_U",
    "FORMAL_W",
    "MetricParams",
    "MetricProfile",
    "PositivityError",
    "RootGateReport",
    "chart_of_r",
    "check_pairing",
    "compute_P",
    "compute_Q",
    "compute_Qtilde",
    "count_roots",
    "even_to_sigma",
    "factored_P",
    "factored_Q",
    "in_s",
    "metric_profile",
    "positivity_gate",
    "r_chart_profile",
    "r_of",
    "sigma_to_even",
    "sign_variations",
    "sturm_sequence",
    "to_r_chart",
    "transport",
    "verify_P_ode",
]
