"""Matrix permanents.

Three routes: a factorial-time reference summing all n! permutations, an
inclusion-exclusion algorithm with Gray-code subset updates (O(2**n * n)),
and the two-term small-phase truncation for interferometer unitaries that
keeps only the identity amplitude and the n(n-1)/2 pair-swap amplitudes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import islice, permutations

import numpy as np
from numba import njit

from .errors import SizeLimitError
from .interferometer import QuftiUnitary, WeightMoments

#: Hard size limits; exceeding them raises SizeLimitError rather than
#: silently truncating.
NAIVE_LIMIT = 10
RYSER_LIMIT = 30

# Permutation index arrays up to this size are cached (8! rows at most).
_PERM_CACHE_LIMIT = 8
_PERM_BLOCK = 40320


class PermanentMethod(str, Enum):
    NAIVE = "naive"
    RYSER = "ryser"
    TRUNCATED = "truncated"


@dataclass(frozen=True)
class PermanentValue:
    """A permanent tagged with the algorithm that produced it."""

    value: complex
    method: PermanentMethod
    n: int


def _as_square(m, limit: int, what: str) -> np.ndarray:
    a = np.ascontiguousarray(np.asarray(m, dtype=np.complex128))
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"expected a non-empty square matrix, got shape {a.shape}")
    if a.shape[0] > limit:
        raise SizeLimitError(f"n={a.shape[0]} exceeds the n<={limit} limit of {what}")
    return a


@lru_cache(maxsize=None)
def _cached_permutations(n: int) -> np.ndarray:
    return np.array(list(permutations(range(n))), dtype=np.intp)


def permanent_naive(m) -> complex:
    """Permanent as the literal sum over all n! permutations.

    Slow but transparent; serves as the oracle for ``permanent_ryser``.
    Limited to n <= 10.
    """
    a = _as_square(m, NAIVE_LIMIT, "the factorial-time permanent")
    n = a.shape[0]
    rows = np.arange(n)
    if n <= _PERM_CACHE_LIMIT:
        cols = _cached_permutations(n)
        return complex(np.prod(a[rows, cols], axis=1).sum())
    # n in {9, 10}: stream the permutations in blocks to bound memory.
    total = 0.0 + 0.0j
    perm_iter = permutations(range(n))
    while True:
        block = np.array(list(islice(perm_iter, _PERM_BLOCK)), dtype=np.intp)
        if block.size == 0:
            return complex(total)
        total += np.prod(a[rows, block], axis=1).sum()


@njit(cache=True)
def _ryser_gray_kernel(a):  # pragma: no cover - exercised through permanent_ryser
    # perm(A) = (-1)**n * sum_{S nonempty} (-1)**|S| * prod_r sum_{c in S} A[r, c]
    # Subsets are visited in Gray-code order so each step updates the row sums
    # with a single column. The summation order is fixed, so serial results are
    # bitwise reproducible.
    n = a.shape[0]
    row_sum = np.zeros(n, np.complex128)
    total = 0.0 + 0.0j
    for g in range(1, 1 << n):
        # The column whose membership flips is the lowest set bit of g.
        col = 0
        while not (g >> col) & 1:
            col += 1
        if ((g ^ (g >> 1)) >> col) & 1:
            for r in range(n):
                row_sum[r] += a[r, col]
        else:
            for r in range(n):
                row_sum[r] -= a[r, col]
        p = 1.0 + 0.0j
        for r in range(n):
            p *= row_sum[r]
        # popcount parity of the Gray code alternates with g
        if g & 1:
            total -= p
        else:
            total += p
    if n & 1:
        total = -total
    return total


def permanent_ryser(m) -> complex:
    """Exact permanent by inclusion-exclusion with Gray-code subset updates.

    O(2**n * n) time, limited to n <= 30.  Agrees with ``permanent_naive`` to
    relative accuracy far better than 1e-9 on every size both can handle.
    """
    a = _as_square(m, RYSER_LIMIT, "the inclusion-exclusion permanent")
    return complex(_ryser_gray_kernel(a))


def permanent_truncated(u: QuftiUnitary, moments: WeightMoments) -> complex:
    """Two-term approximation to ``perm(u.matrix)`` for small phases.

    Keeps the identity amplitude, i.e. the n-th power of the common diagonal
    element truncated at second order in phi, plus the n(n-1)/2 pair-swap
    amplitudes, each the product of the two matching truncated off-diagonal
    elements times the (n-2)-th power of the diagonal base.  Products are kept
    in full rather than re-truncated, so the result is well defined at any
    phi; the neglected amplitudes move three or more photons and enter at
    third order in phi.

    ``moments`` must describe the same weights the unitary was built from.
    """
    f = u.weights.f
    tol = 1e-12
    if (
        moments.n != u.n
        or abs(moments.weight_sum - f.sum()) > tol * max(1.0, abs(moments.weight_sum))
        or abs(moments.square_sum - (f * f).sum()) > tol * max(1.0, moments.square_sum)
    ):
        raise ValueError("moments do not match the weights the unitary was built from")
    n = u.n
    phi = u.phi
    base = 1.0 + 1j * phi * moments.weight_sum / n - phi * phi * moments.square_sum / (2.0 * n)
    identity_amp = base**n
    if n == 1:
        return complex(identity_amp)
    off = (1j * phi / n) * moments.weight_dft - (phi * phi / (2.0 * n)) * moments.square_dft
    # Each swap (j, k) contributes off[j, k] * off[k, j]; summing the strict
    # upper triangle counts every unordered pair exactly once.
    pair_sum = np.triu(off * off.T, k=1).sum()
    return complex(identity_amp + base ** (n - 2) * pair_sum)


def warm_up() -> None:
    """Trigger JIT compilation of the fast permanent kernel.

    Useful before timing runs and before forking worker processes, so the
    compiled code is shared instead of rebuilt per process.
    """
    permanent_ryser(np.eye(2, dtype=np.complex128))
