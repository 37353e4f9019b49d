"""Multiphoton phase estimation in a Fourier-sandwich interferometer.

Exact n-photon coincidence probabilities via matrix permanents for
indistinguishable and fully distinguishable single photons, their small-phase
closed forms, and the resulting phase accuracy, whose two regimes differ by
the constant factor sqrt(2) for every mode count and weight choice.
"""

from .errors import (
    DegenerateWeightsError,
    ProbabilityBoundsError,
    QuftiError,
    SizeLimitError,
    SmallPhaseValidityError,
)
from .interferometer import (
    DistinguishableMatrix,
    QuftiUnitary,
    WeightMoments,
    WeightVector,
    build_distinguishable_matrix,
    build_fourier,
    build_unitary,
    compute_moments,
)
from .permanent import (
    NAIVE_LIMIT,
    RYSER_LIMIT,
    PermanentMethod,
    PermanentValue,
    permanent_naive,
    permanent_ryser,
    permanent_truncated,
    warm_up,
)
from .probability import (
    Model,
    ProbabilityMethod,
    ProbabilityResult,
    prob_distinguishable_closed,
    prob_distinguishable_exact,
    prob_indistinguishable_closed,
    prob_indistinguishable_exact,
    prob_indistinguishable_truncated,
)
from .sensitivity import (
    SensitivityMethod,
    SensitivityResult,
    derivative_step,
    exact_probability,
    sensitivity_analytic,
    sensitivity_numerical,
    sensitivity_ratio,
)
from .verify import CheckResult, run_verify

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "DegenerateWeightsError",
    "DistinguishableMatrix",
    "Model",
    "NAIVE_LIMIT",
    "PermanentMethod",
    "PermanentValue",
    "ProbabilityBoundsError",
    "ProbabilityMethod",
    "ProbabilityResult",
    "QuftiError",
    "QuftiUnitary",
    "RYSER_LIMIT",
    "SensitivityMethod",
    "SensitivityResult",
    "SizeLimitError",
    "SmallPhaseValidityError",
    "WeightMoments",
    "WeightVector",
    "build_distinguishable_matrix",
    "build_fourier",
    "build_unitary",
    "compute_moments",
    "derivative_step",
    "exact_probability",
    "permanent_naive",
    "permanent_ryser",
    "permanent_truncated",
    "prob_distinguishable_closed",
    "prob_distinguishable_exact",
    "prob_indistinguishable_closed",
    "prob_indistinguishable_exact",
    "prob_indistinguishable_truncated",
    "run_verify",
    "sensitivity_analytic",
    "sensitivity_numerical",
    "sensitivity_ratio",
    "warm_up",
]
