"""
Computing permanents three ways
===============================

The probability that n indistinguishable photons exit the way they came in
is the squared magnitude of a matrix permanent -- the determinant's
sign-free cousin, and famously #P-hard.  The package ships three engines:

* ``permanent_naive``     the literal sum over all n! permutations (n <= 10)
* ``permanent_ryser``     inclusion-exclusion with Gray-code updates (n <= 30)
* ``permanent_truncated`` a two-term small-phase approximation, O(n^2)

This script cross-checks them and times the exact engines against each
other.
"""

import time

import numpy as np

from qufti import (
    WeightVector,
    build_unitary,
    compute_moments,
    permanent_naive,
    permanent_ryser,
    permanent_truncated,
    warm_up,
)

rng = np.random.default_rng(1)
warm_up()  # JIT-compile the fast kernel before timing anything

###############################################################################
# Sanity first: for an identity the only contributing permutation is the
# trivial one, and for an all-ones matrix every permutation contributes 1.

print("perm(I_4)      =", permanent_ryser(np.eye(4)).real)
print("perm(ones 5x5) =", permanent_ryser(np.ones((5, 5))).real, " (= 5!)")

###############################################################################
# The two exact engines agree to near machine precision on random complex
# matrices, but their costs scale very differently: n! against 2^n * n.

print(f"\n{'n':>3} {'naive (ms)':>12} {'ryser (ms)':>12} {'agreement':>12}")
for n in (4, 6, 8, 10):
    m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    t0 = time.perf_counter()
    slow = permanent_naive(m)
    t1 = time.perf_counter()
    fast = permanent_ryser(m)
    t2 = time.perf_counter()
    print(
        f"{n:>3} {1e3 * (t1 - t0):>12.2f} {1e3 * (t2 - t1):>12.2f} "
        f"{abs(fast - slow) / abs(slow):>12.1e}"
    )

###############################################################################
# Past n = 10 the factorial engine is out; the Gray-code engine carries on
# to n = 30.  n = 20 costs about 2^20 subset updates.

m20 = rng.standard_normal((20, 20)) + 1j * rng.standard_normal((20, 20))
t0 = time.perf_counter()
value = permanent_ryser(m20)
print(f"\nperm of a random 20x20 in {time.perf_counter() - t0:.3f}s -> {value:.4g}")

###############################################################################
# For the interferometer matrix at small phase, almost all of the permanent
# comes from two families of permutations: the identity (no photon swaps)
# and the n(n-1)/2 transpositions (one pair swaps).  Keeping only those gives
# an O(n^2) approximation whose error falls off as phi^3 -- halve the phase
# and the defect shrinks by about 8.

weights = WeightVector.linear(5)
moments = compute_moments(weights)

print(f"\n{'phi':>10} {'truncation defect':>18} {'ratio to previous':>18}")
previous = None
for phi in (4e-3, 2e-3, 1e-3, 5e-4):
    u = build_unitary(weights, phi)
    defect = abs(permanent_ryser(u.matrix) - permanent_truncated(u, moments))
    ratio = "" if previous is None else f"{previous / defect:>18.2f}"
    print(f"{phi:>10.1e} {defect:>18.3e} {ratio}")
    previous = defect
