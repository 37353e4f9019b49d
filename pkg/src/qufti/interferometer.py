"""Construction of the n-mode Fourier-sandwich interferometer.

The interferometer is the succession of an n-mode discrete Fourier transform,
a diagonal layer applying the phase ``exp(i * phi * f_j)`` on mode ``j``, and
the inverse Fourier transform.  The resulting unitary is circulant: the entry
at (j, k) depends only on ``(j - k) mod n`` and is a root-of-unity weighted
average of the per-mode phase factors,

    U[j, k] = (1/n) * sum_l omega**((j - k) * l) * exp(i * phi * f[l]),

with ``omega = exp(2j * pi / n)`` and indices counted from zero.  This module
builds that unitary directly from the element formula (fewer rounding steps
than the triple matrix product), together with the weight moments that govern
its small-phase behaviour and the matrix of transition probabilities used for
distinguishable photons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

#: Weight vectors whose centered square sum falls at or below this threshold
#: are treated as degenerate (all weights effectively equal): the phase enters
#: only as an unobservable global factor.
DEGENERATE_MOMENT_EPS = 1e-14


@dataclass(frozen=True, eq=False)
class WeightVector:
    """Per-mode multipliers of the encoded phase.

    Mode ``j`` applies the shift ``exp(i * phi * f[j])``.  Entries are
    arbitrary finite reals; negative and repeated values are allowed.

    Attributes:
        f (NDArray[float]): The ordered weight factors, one per mode.
    """

    f: NDArray[np.float64]

    def __post_init__(self) -> None:
        f = np.atleast_1d(np.asarray(self.f, dtype=np.float64))
        if f.ndim != 1 or f.size < 1:
            raise ValueError("weights must form a non-empty 1-d sequence")
        if not np.all(np.isfinite(f)):
            raise ValueError("weights must all be finite")
        f = f.copy()
        f.setflags(write=False)
        object.__setattr__(self, "f", f)

    @property
    def n(self) -> int:
        """Number of modes (and of input photons)."""
        return self.f.size

    @property
    def is_degenerate(self) -> bool:
        """True when every weight is equal; the probability is then pinned at 1."""
        return bool(np.ptp(self.f) == 0.0)

    @classmethod
    def constant(cls, n: int, value: float = 1.0) -> "WeightVector":
        """All modes share one weight; useful as a degenerate control case."""
        return cls(np.full(_checked_mode_count(n), float(value)))

    @classmethod
    def linear(cls, n: int) -> "WeightVector":
        """Weights 1, 2, ..., n."""
        return cls(np.arange(1, _checked_mode_count(n) + 1, dtype=np.float64))

    @classmethod
    def index0(cls, n: int) -> "WeightVector":
        """Weights 0, 1, ..., n - 1."""
        return cls(np.arange(_checked_mode_count(n), dtype=np.float64))

    def shifted(self, offset: float) -> "WeightVector":
        """A copy with ``offset`` added to every weight.

        Shifting multiplies the unitary by the global phase
        ``exp(i * offset * phi)`` and leaves every detection probability
        unchanged.
        """
        return WeightVector(self.f + float(offset))


@dataclass(frozen=True, eq=False)
class WeightMoments:
    """Scalar and Fourier moments of a weight vector.

    ``weight_sum`` and ``square_sum`` are the plain sums of ``f`` and ``f**2``.
    The two matrices hold, at (j, k), the discrete Fourier sum of ``f``
    (respectively ``f**2``) at frequency ``j - k``:

        weight_dft[j, k] = sum_l omega**((j - k) * l) * f[l]

    Both matrices are circulant and their diagonals repeat the scalar sums.

    Attributes:
        n (int): Number of modes.
        weight_sum (float): Sum of the weights.
        square_sum (float): Sum of the squared weights.
        weight_dft (NDArray[complex]): Fourier sums of the weights.
        square_dft (NDArray[complex]): Fourier sums of the squared weights.
    """

    n: int
    weight_sum: float
    square_sum: float
    weight_dft: NDArray[np.complex128]
    square_dft: NDArray[np.complex128]

    @property
    def centered_square_sum(self) -> float:
        """``sum_j (f_j - mean)**2``, i.e. ``square_sum - weight_sum**2 / n``.

        This combination controls the quadratic decay of both detection
        probabilities and is invariant under a common shift of all weights.
        """
        return self.square_sum - self.weight_sum**2 / self.n

    @property
    def is_degenerate(self) -> bool:
        """True when the weights are (numerically) all equal."""
        return self.centered_square_sum <= DEGENERATE_MOMENT_EPS


@dataclass(frozen=True, eq=False)
class QuftiUnitary:
    """The interferometer unitary evaluated at one phase value.

    Attributes:
        n (int): Number of modes.
        phi (float): The encoded phase, in radians.
        weights (WeightVector): The weight factors the matrix was built from.
        matrix (NDArray[complex]): The n x n unitary matrix.
    """

    n: int
    phi: float
    weights: WeightVector
    matrix: NDArray[np.complex128]


@dataclass(frozen=True, eq=False)
class DistinguishableMatrix:
    """Elementwise ``|U|**2`` of the interferometer unitary.

    Because ``U`` is unitary the matrix is doubly stochastic: every row and
    column sums to 1 and all entries lie in [0, 1].

    Attributes:
        n (int): Number of modes.
        matrix (NDArray[float]): The n x n transition-probability matrix.
        phi (float): The phase the parent unitary was evaluated at.
        degenerate (bool): Whether the parent weights were all equal.
    """

    n: int
    matrix: NDArray[np.float64]
    phi: float = 0.0
    degenerate: bool = False


def _checked_mode_count(n: int) -> int:
    n = int(n)
    if n < 1:
        raise ValueError(f"mode count must be positive, got n={n}")
    return n


def _fourier_sums(x: NDArray) -> NDArray[np.complex128]:
    """Return ``s[d] = sum_l omega**(d * l) * x[l]`` for d = 0, ..., n - 1.

    Powers of omega are taken from a precomputed table indexed by the exponent
    reduced mod n, so no phase drift accumulates from repeated multiplication.
    """
    n = x.size
    idx = np.arange(n)
    table = np.exp(2j * np.pi * idx / n)
    return table[np.outer(idx, idx) % n] @ x


def _circulant(values_by_shift: NDArray) -> NDArray:
    """Expand per-shift values ``v[d]`` into the matrix ``m[j, k] = v[(j - k) % n]``."""
    n = values_by_shift.size
    idx = np.arange(n)
    return values_by_shift[(idx[:, None] - idx[None, :]) % n]


def build_fourier(n: int) -> NDArray[np.complex128]:
    """Return the n-mode discrete Fourier transform matrix.

    Entry (j, k) is ``exp(2j * pi * j * k / n) / sqrt(n)`` with 0-based
    indices.

    Args:
        n (int): Number of modes; must be at least 1.

    Returns:
        NDArray[complex]: The n x n unitary Fourier matrix.

    Raises:
        ValueError: If ``n`` is not positive.
    """
    n = _checked_mode_count(n)
    j = np.arange(n)
    return np.exp(2j * np.pi * np.outer(j, j) / n) / np.sqrt(n)


def build_unitary(weights: WeightVector, phi: float) -> QuftiUnitary:
    """Evaluate the interferometer unitary at phase ``phi``.

    The matrix is built directly from the circulant element formula: the n
    distinct entries are the root-of-unity weighted averages of the per-mode
    phase factors.  This is algebraically identical to the triple product
    ``F @ diag(exp(i * phi * f)) @ F.conj().T`` with ``F = build_fourier(n)``
    but takes fewer rounding steps.

    Args:
        weights (WeightVector): The per-mode phase weight factors.
        phi (float): The encoded phase, in radians; must be finite.

    Returns:
        QuftiUnitary: The evaluated unitary with its construction parameters.

    Raises:
        ValueError: If ``phi`` is not finite.
    """
    phi = float(phi)
    if not math.isfinite(phi):
        raise ValueError(f"phase must be finite, got phi={phi!r}")
    phase_factors = np.exp(1j * phi * weights.f)
    matrix = _circulant(_fourier_sums(phase_factors) / weights.n)
    return QuftiUnitary(n=weights.n, phi=phi, weights=weights, matrix=matrix)


def compute_moments(weights: WeightVector) -> WeightMoments:
    """Compute the scalar and Fourier moments of a weight vector.

    Args:
        weights (WeightVector): The per-mode phase weight factors.

    Returns:
        WeightMoments: Scalar sums of ``f`` and ``f**2`` plus the circulant
        matrices of their Fourier sums.
    """
    f = weights.f
    return WeightMoments(
        n=weights.n,
        weight_sum=float(f.sum()),
        square_sum=float((f * f).sum()),
        weight_dft=_circulant(_fourier_sums(f)),
        square_dft=_circulant(_fourier_sums(f * f)),
    )


def build_distinguishable_matrix(u: QuftiUnitary) -> DistinguishableMatrix:
    """Return the transition-probability matrix ``|U|**2`` of a unitary.

    Args:
        u (QuftiUnitary): The interferometer unitary.

    Returns:
        DistinguishableMatrix: Elementwise modulus squared of ``u.matrix``;
        doubly stochastic up to rounding.
    """
    t = np.abs(u.matrix) ** 2
    return DistinguishableMatrix(
        n=u.n, matrix=t, phi=u.phi, degenerate=u.weights.is_degenerate
    )
