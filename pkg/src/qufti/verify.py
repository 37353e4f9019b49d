"""Seeded cross-checks tying every fast path to an independent oracle.

Each check reports one worst-case measured error against its tolerance; the
suite is deterministic for a given seed.  ``run_verify`` is what the CLI
``verify`` subcommand executes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .interferometer import (
    WeightVector,
    build_distinguishable_matrix,
    build_unitary,
    compute_moments,
)
from .permanent import permanent_naive, permanent_ryser, permanent_truncated
from .probability import (
    prob_distinguishable_closed,
    prob_distinguishable_exact,
    prob_indistinguishable_closed,
    prob_indistinguishable_exact,
)
from .sensitivity import sensitivity_ratio

#: Largest mode count the factorial-time oracle is asked to handle here.
MAX_ORACLE_MODES = 8


@dataclass(frozen=True)
class CheckResult:
    """Outcome of one verification check."""

    name: str
    passed: bool
    measured: float
    tolerance: float
    detail: str = ""


def _check(name: str, measured: float, tolerance: float, detail: str = "") -> CheckResult:
    return CheckResult(name, measured <= tolerance, measured, tolerance, detail)


def check_oracle_equivalence(rng: np.random.Generator, n_max: int, cases: int) -> CheckResult:
    """Gray-code permanent vs the factorial-time sum on random complex matrices."""
    worst = 0.0
    for n in range(1, n_max + 1):
        for _ in range(cases):
            m = rng.uniform(0.0, 1.0, (n, n)) + 1j * rng.uniform(0.0, 1.0, (n, n))
            reference = permanent_naive(m)
            err = abs(permanent_ryser(m) - reference) / (1.0 + abs(reference))
            worst = max(worst, err)
    return _check("permanent_oracle_equivalence", worst, 1e-9,
                  f"{cases} matrices per n, n<={n_max}")


def check_unitarity(
    rng: np.random.Generator, n_max: int, cases: int, corrupt: bool = False
) -> CheckResult:
    """U.conj().T @ U == identity and |U|**2 doubly stochastic, random inputs.

    ``corrupt`` is a negative-control hook: it perturbs one matrix element
    before checking, which must make the check fail.
    """
    worst = 0.0
    for _ in range(cases):
        n = int(rng.integers(1, n_max + 1))
        weights = WeightVector(rng.uniform(-10.0, 10.0, n))
        phi = float(rng.uniform(-math.pi, math.pi))
        u = build_unitary(weights, phi).matrix
        if corrupt:
            u = u.copy()
            u[0, 0] += 1e-3
        gram_err = np.abs(u.conj().T @ u - np.eye(n)).max()
        t = np.abs(u) ** 2
        sum_err = max(np.abs(t.sum(axis=0) - 1.0).max(), np.abs(t.sum(axis=1) - 1.0).max())
        worst = max(worst, gram_err, sum_err)
    return _check("unitarity_and_double_stochasticity", worst, 1e-10,
                  f"{cases} random (n, weights, phi) draws, n<={n_max}")


def check_truncation_order(n_max: int) -> CheckResult:
    """Error of the two-term truncated permanent drops ~8x per halving of phi.

    Confirms the neglected amplitudes enter at third order: only the identity
    and the n(n-1)/2 pair swaps carry the quadratic physics.
    """
    worst = 0.0
    phis = (1e-3, 5e-4, 2.5e-4)
    for n in (3, 4, 5):
        if n > n_max:
            continue
        weights = WeightVector.linear(n)
        moments = compute_moments(weights)
        errs = []
        for phi in phis:
            u = build_unitary(weights, phi)
            errs.append(abs(permanent_ryser(u.matrix) - permanent_truncated(u, moments)))
        for big, small in zip(errs, errs[1:]):
            worst = max(worst, abs(big / small - 8.0))
    return _check("truncation_order", worst, 2.0,
                  "deviation of error halving ratio from 8, n in {3,4,5}")


def check_closed_form_agreement(
    rng: np.random.Generator, n_max: int, cases: int
) -> CheckResult:
    """Exact vs quadratic closed-form probabilities at phi = 1e-3, both regimes.

    The worst-case error is measured in units of the cubic remainder bound
    10 * phi**3 * max|f|**3.
    """
    phi = 1e-3
    worst = 0.0
    top = min(n_max, MAX_ORACLE_MODES)
    for _ in range(cases):
        n = int(rng.integers(2, top + 1))
        weights = WeightVector(rng.uniform(-5.0, 5.0, n))
        moments = compute_moments(weights)
        bound = 10.0 * phi**3 * float(np.abs(weights.f).max()) ** 3
        u = build_unitary(weights, phi)
        err_i = abs(
            prob_indistinguishable_exact(u).value
            - prob_indistinguishable_closed(moments, n, phi).value
        )
        err_d = abs(
            prob_distinguishable_exact(build_distinguishable_matrix(u)).value
            - prob_distinguishable_closed(moments, n, phi).value
        )
        worst = max(worst, err_i / bound, err_d / bound)
    return _check("closed_form_agreement", worst, 1.0,
                  f"error / cubic bound at phi={phi:g}, {cases} random weight vectors")


def check_ratio_universality(
    rng: np.random.Generator, n_max: int, cases: int
) -> CheckResult:
    """Numerical sensitivity ratio stays within 0.01 of 1/sqrt(2) at phi = 1e-3."""
    phi = 1e-3
    target = 1.0 / math.sqrt(2.0)
    worst = 0.0
    top = min(n_max, MAX_ORACLE_MODES)
    for _ in range(cases):
        weights = _non_degenerate_weights(rng, top)
        worst = max(worst, abs(sensitivity_ratio(weights, phi) - target))
    return _check("ratio_universality", worst, 0.01,
                  f"{cases} random weight vectors, phi={phi:g}")


def _non_degenerate_weights(rng: np.random.Generator, n_max: int) -> WeightVector:
    # Resample until the centered square sum clears 0.25, so the quadratic
    # deficit dominates rounding noise.
    while True:
        n = int(rng.integers(2, n_max + 1))
        weights = WeightVector(rng.uniform(-5.0, 5.0, n))
        if compute_moments(weights).centered_square_sum >= 0.25:
            return weights


def run_verify(
    n_max: int = 7, cases: int = 20, seed: int = 42, corrupt: bool = False
) -> list[CheckResult]:
    """Run the full check suite with one seeded random stream.

    ``n_max`` is capped at 8 by the factorial-time oracle.  ``corrupt``
    deliberately breaks the unitarity check (negative control).
    """
    if not 1 <= n_max <= MAX_ORACLE_MODES:
        raise ValueError(f"n_max must be in [1, {MAX_ORACLE_MODES}], got {n_max}")
    if cases < 1:
        raise ValueError(f"cases must be positive, got {cases}")
    rng = np.random.default_rng(seed)
    return [
        check_oracle_equivalence(rng, n_max, cases),
        check_unitarity(rng, n_max, cases, corrupt=corrupt),
        check_truncation_order(n_max),
        check_closed_form_agreement(rng, n_max, cases),
        check_ratio_universality(rng, n_max, cases),
    ]
