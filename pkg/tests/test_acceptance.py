"""End-to-end acceptance checks for the package.

Each test exercises one headline guarantee at its stated tolerance and time
budget, and prints a one-line verdict; run ``pytest tests/test_acceptance.py
-v -s`` to see all seven lines.  The individual unit-test modules cover the
same ground in finer grain; this file is the single place that asserts the
user-facing numbers.
"""

import math
import time

import numpy as np

from qufti import (
    Model,
    WeightVector,
    build_distinguishable_matrix,
    build_unitary,
    compute_moments,
    permanent_naive,
    permanent_ryser,
    permanent_truncated,
    prob_distinguishable_closed,
    prob_distinguishable_exact,
    prob_indistinguishable_closed,
    prob_indistinguishable_exact,
    sensitivity_numerical,
    sensitivity_ratio,
)
from qufti.cli import main

INV_SQRT2 = 1.0 / math.sqrt(2.0)


def report(num: int, description: str, passed: bool, detail: str) -> None:
    status = "PASS" if passed else "FAIL"
    print(f"[{status}] criterion {num}: {description} ({detail})")
    assert passed, f"criterion {num}: {description} ({detail})"


def test_criterion_1_sensitivity_ratio_is_constant():
    t0 = time.perf_counter()
    deviation = 0.0
    for n in range(2, 7):
        r = sensitivity_ratio(WeightVector.linear(n), 1e-3)
        deviation = max(deviation, abs(r - INV_SQRT2) / INV_SQRT2)
    elapsed = time.perf_counter() - t0
    report(
        1,
        "shot-noise accuracy ratio within 1% of 1/sqrt(2) for n=2..6",
        deviation <= 0.01 and elapsed < 1.0,
        f"max rel dev {deviation:.2e}, {elapsed:.2f}s",
    )


def test_criterion_2_closed_forms_track_exact_probabilities():
    t0 = time.perf_counter()
    rng = np.random.default_rng(2024)
    phi = 1e-3
    worst = 0.0
    ok = True
    for _ in range(20):
        n = int(rng.integers(2, 9))
        f = rng.uniform(-5.0, 5.0, size=n)
        w = WeightVector(f)
        m = compute_moments(w)
        bound = 10.0 * phi**3 * np.abs(f).max() ** 3
        u = build_unitary(w, phi)
        err_i = abs(
            prob_indistinguishable_exact(u).value
            - prob_indistinguishable_closed(m, n, phi).value
        )
        err_d = abs(
            prob_distinguishable_exact(build_distinguishable_matrix(u)).value
            - prob_distinguishable_closed(m, n, phi).value
        )
        worst = max(worst, err_i, err_d)
        ok = ok and err_i <= bound and err_d <= bound
    elapsed = time.perf_counter() - t0
    report(
        2,
        "quadratic closed forms within 10*phi^3*max|f|^3 of exact, both regimes",
        ok and elapsed < 10.0,
        f"worst abs err {worst:.2e}, {elapsed:.2f}s",
    )


def test_criterion_3_truncation_error_is_third_order():
    t0 = time.perf_counter()
    ratios = []
    for n in (3, 4, 5):
        w = WeightVector.linear(n)
        m = compute_moments(w)

        def defect(phi):
            u = build_unitary(w, phi)
            return abs(permanent_ryser(u.matrix) - permanent_truncated(u, m))

        for phi in (1e-3, 5e-4):
            ratios.append(defect(phi) / defect(phi / 2.0))
    elapsed = time.perf_counter() - t0
    report(
        3,
        "two-term permanent defect shrinks by 6x-10x when phi halves",
        all(6.0 <= r <= 10.0 for r in ratios) and elapsed < 5.0,
        f"ratios {min(ratios):.2f}..{max(ratios):.2f}, {elapsed:.2f}s",
    )


def test_criterion_4_permanent_engines_agree():
    t0 = time.perf_counter()
    rng = np.random.default_rng(7)
    worst = 0.0
    for n in range(1, 9):
        for _ in range(20):
            m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
            slow = permanent_naive(m)
            fast = permanent_ryser(m)
            worst = max(worst, abs(fast - slow) / max(1.0, abs(slow)))
    elapsed = time.perf_counter() - t0
    report(
        4,
        "inclusion-exclusion permanent matches the factorial sum to 1e-9",
        worst <= 1e-9 and elapsed < 10.0,
        f"worst rel err {worst:.2e}, {elapsed:.2f}s",
    )


def test_criterion_5_matrices_stay_unitary_at_scale():
    t0 = time.perf_counter()
    rng = np.random.default_rng(11)
    worst = 0.0
    for n in range(1, 21):
        for _ in range(3):
            f = rng.uniform(-10.0, 10.0, size=n)
            phi = rng.uniform(-np.pi, np.pi)
            u = build_unitary(WeightVector(f), phi)
            unitarity = np.abs(u.matrix.conj().T @ u.matrix - np.eye(n)).max()
            t = build_distinguishable_matrix(u).matrix
            stochastic = max(
                np.abs(t.sum(axis=0) - 1.0).max(), np.abs(t.sum(axis=1) - 1.0).max()
            )
            worst = max(worst, unitarity, stochastic)
    elapsed = time.perf_counter() - t0
    report(
        5,
        "unitarity and double stochasticity below 1e-10 up to n=20",
        worst < 1e-10 and elapsed < 5.0,
        f"worst defect {worst:.2e}, {elapsed:.2f}s",
    )


def test_criterion_6_spread_normalization_is_the_measured_one():
    # For f = (1, 2) the sums are A = 3, B = 5 at n = 2, so the analytic
    # accuracy is sqrt(n / (8*(B*n - A**2))) = 0.5.  The alternative reading
    # sqrt(n / (8*(B*n - A))) = sqrt(2/56) = 0.189 must be ruled out by the
    # independent numerical estimate.
    r = sensitivity_numerical(
        Model.INDISTINGUISHABLE, WeightVector(np.array([1.0, 2.0])), 1e-3
    ).value
    squared_reading = math.sqrt(2.0 / (8.0 * (5 * 2 - 3**2)))
    linear_reading = math.sqrt(2.0 / (8.0 * (5 * 2 - 3)))
    matches_squared = abs(r - squared_reading) / squared_reading <= 0.01
    excludes_linear = abs(r - linear_reading) / linear_reading > 0.5
    report(
        6,
        "numerical accuracy selects the B*n - A**2 spread normalization",
        matches_squared and excludes_linear,
        f"measured {r:.6f}, candidates {squared_reading:.3f} / {linear_reading:.3f}",
    )


def test_criterion_7_large_sweep_finishes_in_time(tmp_path):
    out = tmp_path / "sweep20.csv"
    t0 = time.perf_counter()
    code = main(
        [
            "sweep",
            "--n", "20",
            "--weights", "linear",
            "--phi-start", "1e-4",
            "--phi-end", "1e-2",
            "--steps", "100",
            "--model", "both",
            "--methods", "exact",
            "--out", str(out),
        ]
    )
    elapsed = time.perf_counter() - t0
    lines = out.read_text().splitlines() if out.exists() else []
    rows_ok = len(lines) == 1 + 100 * 2
    report(
        7,
        "exact sweep at n=20 over 100 phases, both regimes, under 300s",
        code == 0 and rows_ok and elapsed < 300.0,
        f"exit {code}, {len(lines) - 1} rows, {elapsed:.1f}s",
    )
