#!/usr/bin/env python3
"""Scalar atoms applied to Hermitian matrices through the spectrum."""

import numpy as np

from opconvex import (apply_scalar_function, list_atoms, loewner_leq,
                      lookup_atom, random_unitary)

# the registry of scalar functions the library knows about
for row in list_atoms():
    print(f"{row['name']:10s} on {row['domain']:12s} "
          f"convex={row['operator_convex']} concave={row['operator_concave']}")
print()

# build a Hermitian matrix with a chosen spectrum
U = random_unitary(3, seed=0)
w = np.array([0.5, 1.0, 4.0])
T = (U * w) @ U.conj().T

f = lookup_atom("xlogx")
fT = apply_scalar_function(f, T)
print("spectrum of T:        ", np.round(np.linalg.eigvalsh(T), 6))
print("spectrum of f(T):     ", np.round(np.linalg.eigvalsh(fT.mat), 6))
print("f on the spectrum:    ", np.round(f(w), 6))
print()

# matrix monotonicity fails even for monotone scalar functions, but the
# Loewner comparison itself is easy to query
square = lookup_atom("square")
A = np.diag([1.0, 2.0, 3.0])
B = A + 0.5 * np.eye(3)
verdict = loewner_leq(apply_scalar_function(square, A),
                      apply_scalar_function(square, B))
print("A <= B implies A^2 <= B^2 here:", verdict.holds,
      f"(slack {verdict.slack:.4f})")

# eigenvalues a hair below a closed domain endpoint are clamped, not refused
eps = 1e-12
noisy = U @ np.diag([0.0 - eps, 1.0, 2.0]) @ U.conj().T
out = apply_scalar_function(f, noisy)
print("xlogx of a matrix with eigenvalue -1e-12 evaluates fine:",
      np.round(np.linalg.eigvalsh(out.mat), 6))
