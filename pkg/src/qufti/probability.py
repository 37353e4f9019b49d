"""n-fold coincidence probabilities in the two distinguishability regimes.

With one photon per input mode, the probability of seeing one photon in every
output mode is ``|perm(U)|**2`` when the photons interfere (full spectral
overlap) and ``perm(T)`` with ``T = |U|**2`` when they are fully
distinguishable (zero overlap).  For small phases both decay quadratically,

    P_interfering     ~ 1 - 2 * phi**2 * (B - A**2 / n)
    P_distinguishable ~ 1 -     phi**2 * (B - A**2 / n)

where ``A`` and ``B`` are the sum and square sum of the weights; the factor-2
gap between the deficits is what survives of multiphoton interference at this
order.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import ProbabilityBoundsError, SmallPhaseValidityError
from .interferometer import DistinguishableMatrix, QuftiUnitary, WeightMoments
from .permanent import permanent_ryser, permanent_truncated

#: Excursions beyond [0, 1] larger than this are treated as bugs, not rounding.
BOUNDS_SLACK = 1e-9

#: perm(T) of a real matrix must be real to this absolute accuracy.
IMAG_TOLERANCE = 1e-10


class Model(str, Enum):
    """Distinguishability regime of the input photons."""

    INDISTINGUISHABLE = "indistinguishable"
    DISTINGUISHABLE = "distinguishable"


class ProbabilityMethod(str, Enum):
    EXACT = "exact"
    CLOSED_FORM = "closed_form"
    TRUNCATED = "truncated"


@dataclass(frozen=True)
class ProbabilityResult:
    """A coincidence probability with its provenance.

    ``degenerate`` marks all-equal weights, for which the probability is
    identically 1 and any sensitivity derived from it is undefined.
    """

    value: float
    model: Model
    method: ProbabilityMethod
    phi: float
    n: int
    degenerate: bool = False


def _clamp01(value: float, context: str) -> float:
    if value < -BOUNDS_SLACK or value > 1.0 + BOUNDS_SLACK:
        raise ProbabilityBoundsError(
            f"{context} = {value!r} lies outside [0, 1] by more than {BOUNDS_SLACK}"
        )
    return min(max(value, 0.0), 1.0)


def prob_indistinguishable_exact(u: QuftiUnitary) -> ProbabilityResult:
    """``|perm(U)|**2``: the superposition of all n! detection amplitudes."""
    amplitude = permanent_ryser(u.matrix)
    value = _clamp01(abs(amplitude) ** 2, "indistinguishable probability")
    return ProbabilityResult(
        value=value,
        model=Model.INDISTINGUISHABLE,
        method=ProbabilityMethod.EXACT,
        phi=u.phi,
        n=u.n,
        degenerate=u.weights.is_degenerate,
    )


def prob_distinguishable_exact(t: DistinguishableMatrix) -> ProbabilityResult:
    """``perm(T)``: the incoherent sum over the n! detection assignments."""
    value = permanent_ryser(t.matrix)
    if abs(value.imag) >= IMAG_TOLERANCE:
        raise ProbabilityBoundsError(
            f"perm of a real transition matrix came out complex (imag={value.imag:.3e})"
        )
    return ProbabilityResult(
        value=_clamp01(value.real, "distinguishable probability"),
        model=Model.DISTINGUISHABLE,
        method=ProbabilityMethod.EXACT,
        phi=t.phi,
        n=t.n,
        degenerate=t.degenerate,
    )


def prob_indistinguishable_truncated(
    u: QuftiUnitary, moments: WeightMoments
) -> ProbabilityResult:
    """Modulus squared of the two-term truncated permanent."""
    amplitude = permanent_truncated(u, moments)
    value = _clamp01(abs(amplitude) ** 2, "truncated indistinguishable probability")
    return ProbabilityResult(
        value=value,
        model=Model.INDISTINGUISHABLE,
        method=ProbabilityMethod.TRUNCATED,
        phi=u.phi,
        n=u.n,
        degenerate=u.weights.is_degenerate,
    )


def _closed_form(
    moments: WeightMoments, n: int, phi: float, deficit_factor: float, model: Model
) -> ProbabilityResult:
    if n != moments.n:
        raise ValueError(f"n={n} does not match moments computed for n={moments.n}")
    phi = float(phi)
    value = 1.0 - deficit_factor * phi * phi * moments.centered_square_sum
    if value < 0.0:
        # The quadratic model itself is out of range; refusing beats clamping.
        raise SmallPhaseValidityError(
            f"closed form gives {value:.6g} < 0 at phi={phi:.6g}; "
            "phi is outside the small-phase regime for these weights"
        )
    return ProbabilityResult(
        value=value,
        model=model,
        method=ProbabilityMethod.CLOSED_FORM,
        phi=phi,
        n=n,
        degenerate=moments.is_degenerate,
    )


def prob_indistinguishable_closed(
    moments: WeightMoments, n: int, phi: float
) -> ProbabilityResult:
    """Small-phase closed form ``1 - 2 * phi**2 * (B - A**2 / n)``.

    Raises SmallPhaseValidityError once the quadratic would go negative.
    """
    return _closed_form(moments, n, phi, 2.0, Model.INDISTINGUISHABLE)


def prob_distinguishable_closed(
    moments: WeightMoments, n: int, phi: float
) -> ProbabilityResult:
    """Small-phase closed form ``1 - phi**2 * (B - A**2 / n)``.

    Same validity guard as the indistinguishable form; the deficit is exactly
    half of it, so the two closed forms satisfy
    ``1 - P_distinguishable == (1 - P_indistinguishable) / 2``.
    """
    return _closed_form(moments, n, phi, 1.0, Model.DISTINGUISHABLE)
