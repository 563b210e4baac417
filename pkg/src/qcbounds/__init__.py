"""Entanglement detection and q-concurrence estimation for bipartite states."""

from .errors import (
    DimensionMismatch,
    DomainError,
    NonpositiveLambda,
    NotHermitian,
    NotNormalized,
    NotPositive,
    RankOutOfRange,
    RegimeViolation,
    StateError,
    SvdFailure,
    TraceMismatch,
    UnknownOracle,
)
from .isotropic import (
    PiecewiseLinear,
    closed_form_oracle,
    exact_isotropic_qc,
    isotropic_state,
    kink_point,
    xi,
)
from .maps import partial_transpose, ppt_norm, realign, realign_norm, trace_norm
from .qconcurrence import (
    BoundRegime,
    BoundReport,
    bound_report,
    convex_roof_upper_bound,
    corollary1_bound,
    critical_s,
    f_ratio,
    g_dq,
    prior_lower_bound,
    q_concurrence_pure,
    theorem1_lower_bound,
)
from .separability import Criterion, Status, Verdict, ccnr_test, detect, ppt_test
from .stateio import load_state, save_state
from .states import (
    BipartiteDims,
    DensityMatrix,
    PureState,
    SchmidtSpectrum,
    Tolerances,
    partial_trace,
    random_density,
    random_pure_state,
    schmidt_spectrum,
    validate_density,
)

__version__ = "0.1.0"
