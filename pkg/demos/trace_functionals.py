#!/usr/bin/env python3
"""Concave trace functionals and their perspective realizations."""

import numpy as np
from numpy.random import default_rng

from opconvex import (MultiplicationPair, extended_perspective_quadratic_form,
                      lieb_functional, lieb_pq_functional, lookup_atom,
                      perspective_quadratic_form, random_positive_matrix)

rng = default_rng(11)
A = random_positive_matrix(3, seed=21)
B = random_positive_matrix(3, seed=22)
K = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))

s = 0.4
value = lieb_functional(A, B, K, s)
print(f"Tr(A^{s} K* B^{1 - s} K) = {value:.12f}")

# the same number as the negated quadratic form of the perspective of
# -x^s over the left/right multiplication superoperators
mp = MultiplicationPair(A, B)
form = perspective_quadratic_form(lookup_atom("neg_power", s), mp, K)
print(f"negated perspective form = {-form:.12f}")
print(f"difference               = {abs(value + form):.2e}")
print()

p, q = 0.3, 0.4
value_pq = lieb_pq_functional(A, B, K, p, q)
print(f"Tr(A^{q} K* B^{p} K) = {value_pq:.12f}")

# two-exponent version: extended perspective of -x^q against h = x^t
# with t = p / (1 - q)
t = p / (1.0 - q)
eform = extended_perspective_quadratic_form(lookup_atom("neg_power", q),
                                            lookup_atom("power", t), mp, K)
print(f"negated extended form = {-eform:.12f}")
print(f"difference            = {abs(value_pq + eform):.2e}")
print()

# on the line p + q = 1 the two families coincide
print("p + q = 1 line:",
      lieb_pq_functional(A, B, K, 1.0 - s, s),
      "==",
      lieb_functional(A, B, K, s))
print()

# joint concavity in (A, B): the functional at a mixture dominates the
# mixture of the functionals
A2 = random_positive_matrix(3, seed=23)
B2 = random_positive_matrix(3, seed=24)
c = 0.5
at_mixture = lieb_functional(c * A.mat + (1 - c) * A2.mat,
                             c * B.mat + (1 - c) * B2.mat, K, s)
mixture_of = c * lieb_functional(A, B, K, s) + (1 - c) * lieb_functional(
    A2, B2, K, s)
print(f"F(mixture):        {at_mixture:.12f}")
print(f"mixture of F:      {mixture_of:.12f}")
print(f"concavity slack:   {at_mixture - mixture_of:.12f}  (nonnegative)")
