"""Einstein-condition checks: exact ODE residuals, closed-form Ricci, FD oracle."""

from .controls import PERTURBATIONS, perturb
from .oracle import OracleError, OracleResult, numeric_oracle_n2, oracle_convergence
from .residuals import (
    ChartError,
    ResidualReport,
    implied_P,
    residual_alpha_beta,
    residual_anchor,
    residual_profile_P_ode,
    residual_P_ode,
    residual_tangential,
    residual_transverse,
)
from .ricci import DEFAULT_PRECISION, RicciDiagonal, ricci_diagonal

__all__ = [
    "ChartError",
    "DEFAULT_PRECISION",
    "OracleError",
    "PERTURBATIONS",
    "OracleResult",
    "ResidualReport",
    "RicciDiagonal",
    "implied_P",
    "numeric_oracle_n2",
    "oracle_convergence",
    "perturb",
    "residual_P_ode",
    "residual_alpha_beta",
    "residual_anchor",
    "residual_profile_P_ode",
    "residual_tangential",
    "residual_transverse",
    "ricci_diagonal",
]
