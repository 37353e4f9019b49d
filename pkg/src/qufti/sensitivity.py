"""Phase accuracy by error propagation on the coincidence probability.

The estimator accuracy is ``delta_phi = sqrt(P - P**2) / |dP/dphi|``.  Two
routes are provided: numerical error propagation on the exact probabilities
(central finite difference), and the small-phase analytic limits

    delta_phi_indistinguishable = sqrt(n / (8 * (B*n - A**2)))
    delta_phi_distinguishable   = sqrt(n / (4 * (B*n - A**2)))

whose ratio is the constant 1/sqrt(2) for every mode count and every
non-degenerate weight vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DegenerateWeightsError
from .interferometer import (
    WeightMoments,
    WeightVector,
    build_distinguishable_matrix,
    build_unitary,
)
from .probability import (
    Model,
    prob_distinguishable_exact,
    prob_indistinguishable_exact,
)

#: Derivatives smaller than this are reported as divergent rather than divided by.
DERIVATIVE_FLOOR = 1e-14


class SensitivityMethod(str, Enum):
    NUMERICAL = "numerical"
    ANALYTIC = "analytic"


@dataclass(frozen=True)
class SensitivityResult:
    """A phase accuracy with its provenance.

    ``value`` is a positive magnitude, or ``math.inf`` with ``divergent=True``
    when the probability carries no first-order phase information at the
    requested point.  ``derivative_step`` records the finite-difference step
    for the numerical method and is None for the analytic one, whose ``phi``
    is reported as 0.0 (it is the small-phase limit).
    """

    value: float
    model: Model
    method: SensitivityMethod
    phi: float
    divergent: bool = False
    derivative_step: float | None = None


def exact_probability(model: Model, weights: WeightVector, phi: float) -> float:
    """The exact coincidence probability for either regime at one phase."""
    u = build_unitary(weights, phi)
    if model is Model.INDISTINGUISHABLE:
        return prob_indistinguishable_exact(u).value
    return prob_distinguishable_exact(build_distinguishable_matrix(u)).value


def derivative_step(phi: float) -> float:
    """Central-difference step ``max(1e-6, 1e-3 * |phi|)``.

    Coarse enough that rounding noise in the probability stays far below the
    difference quotient, fine enough that the cubic truncation error is
    negligible for these smooth probabilities.
    """
    return max(1e-6, 1e-3 * abs(phi))


def sensitivity_numerical(
    model: Model, weights: WeightVector, phi: float
) -> SensitivityResult:
    """Error propagation on the exact probability with a finite difference.

    Refuses ``phi == 0`` outright (the derivative vanishes there by symmetry);
    flags the result divergent when ``|dP/dphi|`` falls below
    ``DERIVATIVE_FLOOR``, e.g. for all-equal weights.
    """
    phi = float(phi)
    if phi == 0.0:
        raise ValueError(
            "numerical sensitivity is undefined at phi=0 where dP/dphi vanishes; "
            "use sensitivity_analytic for the small-phase limit"
        )
    h = derivative_step(phi)
    if weights.is_degenerate:
        # P is identically 1 for equal weights, so the true derivative is an
        # exact zero; differencing would only measure rounding noise.
        return SensitivityResult(
            value=math.inf,
            model=model,
            method=SensitivityMethod.NUMERICAL,
            phi=phi,
            divergent=True,
            derivative_step=h,
        )
    p = exact_probability(model, weights, phi)
    dp = (
        exact_probability(model, weights, phi + h)
        - exact_probability(model, weights, phi - h)
    ) / (2.0 * h)
    if abs(dp) < DERIVATIVE_FLOOR:
        return SensitivityResult(
            value=math.inf,
            model=model,
            method=SensitivityMethod.NUMERICAL,
            phi=phi,
            divergent=True,
            derivative_step=h,
        )
    variance = max(p - p * p, 0.0)
    return SensitivityResult(
        value=math.sqrt(variance) / abs(dp),
        model=model,
        method=SensitivityMethod.NUMERICAL,
        phi=phi,
        derivative_step=h,
    )


def sensitivity_analytic(model: Model, moments: WeightMoments, n: int) -> SensitivityResult:
    """Small-phase analytic accuracy for either regime.

    ``sqrt(n / (8 * (B*n - A**2)))`` for indistinguishable photons and
    ``sqrt(n / (4 * (B*n - A**2)))`` for distinguishable ones, i.e. the error
    propagation formula applied to the quadratic closed-form probabilities in
    the phi -> 0 limit.
    """
    if n != moments.n:
        raise ValueError(f"n={n} does not match moments computed for n={moments.n}")
    spread = moments.centered_square_sum  # equals (B*n - A**2) / n
    if moments.is_degenerate:
        raise DegenerateWeightsError(
            "all weights are equal (B - A**2/n ~ 0); the phase is unobservable "
            "and the sensitivity undefined"
        )
    factor = 8.0 if model is Model.INDISTINGUISHABLE else 4.0
    return SensitivityResult(
        value=math.sqrt(1.0 / (factor * spread)),
        model=model,
        method=SensitivityMethod.ANALYTIC,
        phi=0.0,
    )


def sensitivity_ratio(weights: WeightVector, phi: float) -> float:
    """Numerical ``delta_phi_indistinguishable / delta_phi_distinguishable``.

    Tends to 1/sqrt(2) as phi -> 0, independently of the mode count and of
    the weights.  Raises DegenerateWeightsError if either derivative vanished.
    """
    num_i = sensitivity_numerical(Model.INDISTINGUISHABLE, weights, phi)
    num_d = sensitivity_numerical(Model.DISTINGUISHABLE, weights, phi)
    if num_i.divergent or num_d.divergent:
        raise DegenerateWeightsError(
            "sensitivity ratio undefined: dP/dphi vanished at this phase"
        )
    return num_i.value / num_d.value
