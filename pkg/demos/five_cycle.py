#!/usr/bin/env python3
"""Walkthrough: diagonal distance of the 5-cycle over Z/2Z.

This is the standard worked example.  We build the graph, look at
Lambda = [I | Gamma], list a kernel basis, scan every nonzero kernel
vector by hand, and compare against the production search.

Run:  python3 demos/five_cycle.py
"""

import itertools

import numpy as np

from diagdist import (
    PrimeField,
    adjacency_matrix,
    build_lambda,
    chi_weight,
    diagonal_distance,
    generate,
    kernel_basis,
    kernel_point,
)

f = PrimeField(2)
g = generate("cycle", 5)

# Gamma is the adjacency matrix mod 2; Lambda sticks an identity block in
# front of it.  The z-half of a vector addresses the identity block, the
# x-half addresses Gamma.
gamma = adjacency_matrix(g, f)
lam = build_lambda(gamma)
print("Lambda = [I | Gamma]:")
print(lam)

# The kernel has dimension n = 5 (the identity block forces full row rank,
# so 2n columns minus rank n leaves n free columns).
basis = kernel_basis(lam, f)
print("\nkernel basis (z-half | x-half):")
for v in basis:
    print(" ", v[:5], "|", v[5:])

# Weight of a vector = number of vertices it touches in either half.
# Enumerate all 2^5 - 1 = 31 nonzero kernel vectors through the closed-form
# parameterization k = (-Gamma x | x) and bin them by weight.
by_weight = {}
for x in itertools.product([0, 1], repeat=5):
    if not any(x):
        continue
    k = kernel_point(gamma, np.array(x), f)
    by_weight.setdefault(chi_weight(k, f), []).append(k)
print("\nweight histogram over the nonzero kernel:")
for w in sorted(by_weight):
    print(f"  weight {w}: {len(by_weight[w])} vectors")

# The minimum weight is the diagonal distance.  The five basis vectors
# themselves are the only weight-3 vectors here; nothing lighter exists.
rep = diagonal_distance(g, f)
print(f"\ndiagonal distance = {rep.distance}")
print(f"witness (z | x)   = {rep.witness.z} | {rep.witness.x}")
print(f"candidates tried  = {rep.vectors_examined}")

assert rep.distance == min(by_weight) == 3

# Same result from the command line:
#   diagdist gen cycle 5 > cycle5.eg
#   diagdist distance cycle5.eg
#   diagdist kernel cycle5.eg
