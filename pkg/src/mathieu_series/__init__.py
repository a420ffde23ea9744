"""Mathieu-type series: evaluation, asymptotics, and verification.

Evaluates series of the form sum a_n / (b_n + r^2)^(mu+1) for
power-logarithmic, factorial, generic, and power-series weights with
certified truncation error, computes the closed-form asymptotic laws and
bounds that govern them for large r, and ships desk-scale verification
suites for every asymptotic statement (also exposed through the CLI).
"""

from .asymptotics import (
    AsymptoticPrediction,
    ExpansionTerm,
    FactorialDiagnostics,
    FactorialEnvelope,
    asymptotic_prediction,
    classical_expansion_terms,
    eval_classical_expansion,
    factorial_diagnostics,
    factorial_envelope,
    factorial_upper_bound,
    leading_constant,
    predict_factorial,
    predict_powerlog,
    slack_exponent,
    two_term_estimate,
)
from .dirichlet import (
    DirichletParams,
    TransformFrame,
    factorial_dirichlet,
    log_factorial_dirichlet,
    log_weighted_zeta,
    mellin_factorial,
    mellin_powerlog,
    saddle_point_bound,
    transform_frame,
    zeta_singular_prediction,
)
from .errors import (
    CapacityError,
    ContractViolationError,
    DomainError,
    MathieuError,
    NumericError,
    ParameterError,
    PreconditionError,
    ResourceLimitError,
)
from .series import (
    EvalResult,
    FactorialParams,
    GeneralEnvelope,
    PowerLogParams,
    SequencePair,
    eval_factorial,
    eval_general,
    eval_power_series,
    eval_powerlog,
    factorial_summand_log,
    peak_index_n0,
)
from .special import (
    BernoulliTable,
    InverseGammaSeed,
    bernoulli_table,
    inverse_gamma,
    inverse_gamma_log,
    inverse_gamma_seed,
    lambert_w,
    log_factorial,
    log_gamma,
    zeta_neg_odd,
)

__version__ = "0.1.0"
