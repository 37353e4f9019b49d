"""
Building the interferometer
===========================

The device is a discrete Fourier transform, a column of single-mode phase
shifters, and an inverse Fourier transform.  Each phase shifter applies
``exp(i * phi * f_j)``, so one unknown phase ``phi`` enters every arm scaled
by a fixed per-mode weight ``f_j``.  This script assembles the matrix, checks
it is unitary, and shows the structure that makes the rest of the package
tick.
"""

import numpy as np

from qufti import (
    WeightVector,
    build_distinguishable_matrix,
    build_fourier,
    build_unitary,
    compute_moments,
)

np.set_printoptions(precision=4, suppress=True, linewidth=100)

###############################################################################
# The Fourier matrix itself: at n = 2 it is the familiar 50/50 beam splitter.

print("F(2) =")
print(build_fourier(2))

###############################################################################
# Sandwich a phase column between F and its inverse.  With the "linear"
# weight preset, mode j picks up j times the unknown phase.

weights = WeightVector.linear(3)
u = build_unitary(weights, phi=0.15)
print("\nU(phi=0.15), linear weights, n=3:")
print(u.matrix)

# Columns stay orthonormal no matter the weights or phase.
defect = np.abs(u.matrix.conj().T @ u.matrix - np.eye(3)).max()
print(f"unitarity defect: {defect:.2e}")

###############################################################################
# The matrix is circulant: every entry depends only on (row - column) mod n,
# because the phase column is diagonal in the Fourier basis.

print("\nfirst row:   ", np.round(u.matrix[0], 4))
print("second row:  ", np.round(u.matrix[1], 4), " (same entries, rotated)")

###############################################################################
# At phi = 0 nothing happens: the sandwich collapses to the identity and a
# photon entering mode j exits mode j with certainty.

print("\nU(phi=0) =")
print(build_unitary(weights, 0.0).matrix.real)

###############################################################################
# For distinguishable photons only the squared magnitudes matter.  They form
# a doubly stochastic matrix: every row and column sums to one.

t = build_distinguishable_matrix(u)
print("\n|U|^2 =")
print(t.matrix)
print("row sums:", t.matrix.sum(axis=1))

###############################################################################
# Everything downstream is controlled by two scalar moments of the weights:
# their plain sum and their square sum, combined into the spread
# B - A^2/n.  Shifting every weight by a constant changes A and B but not
# the spread, and not any probability.

m = compute_moments(weights)
print(f"\nweight sum A = {m.weight_sum:g}, square sum B = {m.square_sum:g}")
print(f"spread B - A^2/n = {m.centered_square_sum:g}")

shifted = compute_moments(weights.shifted(10.0))
print(f"after shifting all weights by 10: spread = {shifted.centered_square_sum:g}")
