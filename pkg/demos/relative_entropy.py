#!/usr/bin/env python3
"""Quantum relative entropy two ways, and the classical limit."""

import numpy as np

from opconvex import (DensityMatrix, classical_relative_entropy,
                      quantum_relative_entropy_direct,
                      quantum_relative_entropy_perspective, random_density)

rho = random_density(3, seed=4)
sigma = random_density(3, seed=5)

# path 1: Tr rho log rho - Tr rho log sigma via functional calculus
direct = quantum_relative_entropy_direct(rho, sigma)

# path 2: quadratic form of the perspective of x log x over the
# left/right multiplication superoperators
via_perspective = quantum_relative_entropy_perspective(rho, sigma)

print(f"S(rho||sigma) direct:      {direct:.15f}")
print(f"S(rho||sigma) perspective: {via_perspective:.15f}")
print(f"difference:                {abs(direct - via_perspective):.2e}")
print()

print("S(rho||rho) =", quantum_relative_entropy_direct(rho, rho))
print()

# commuting (here: diagonal) states reduce to the classical divergence
p = np.array([0.5, 0.3, 0.2])
q = np.array([0.25, 0.25, 0.5])
quantum = quantum_relative_entropy_direct(DensityMatrix(np.diag(p)),
                                          DensityMatrix(np.diag(q)))
classical = classical_relative_entropy(q, p)
print(f"diagonal quantum value: {quantum:.15f}")
print(f"classical divergence:   {classical:.15f}")
print()

# joint convexity: mixing states can only shrink the divergence
rho2 = random_density(3, seed=6)
sigma2 = random_density(3, seed=7)
c = 0.5
mixed = quantum_relative_entropy_direct(
    DensityMatrix(c * rho.mat + (1 - c) * rho2.mat),
    DensityMatrix(c * sigma.mat + (1 - c) * sigma2.mat))
avg = (c * quantum_relative_entropy_direct(rho, sigma)
       + (1 - c) * quantum_relative_entropy_direct(rho2, sigma2))
print(f"S(mixture):       {mixed:.6f}")
print(f"mixture of S:     {avg:.6f}")
print(f"convexity slack:  {avg - mixed:.6f}  (nonnegative)")
