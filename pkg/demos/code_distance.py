#!/usr/bin/env python3
"""Distance of a code: several labellings on one graph.

A code is a set of labellings (codewords) C_1 .. C_k.  The distance between
two codewords is the minimum weight of a word whose translation carries one
to the other, i.e. the minimum weight over the solutions of
Lambda k = C_r - C_s.  The code distance delta is the minimum over all
pairs, diagonal pairs included (those all equal the plain diagonal
distance).

Run:  python3 demos/code_distance.py
"""

import numpy as np

from diagdist import PrimeField, code_distance, generate, pairwise_distance

f = PrimeField(2)
g = generate("cycle", 5)

zero = np.zeros(5, dtype=np.int64)
ones = np.ones(5, dtype=np.int64)
e1 = np.array([1, 0, 0, 0, 0], dtype=np.int64)

# A single unit shift is cheap to reach: one Z operation on vertex 1.
rep = pairwise_distance(g, f, zero, e1)
print(f"distance from 00000 to 10000 = {rep.distance}")
print(f"witness (z | x) = {rep.witness.z} | {rep.witness.x}\n")

# The all-ones shift needs three operations -- as hard as the diagonal case.
rep = pairwise_distance(g, f, zero, ones)
print(f"distance from 00000 to 11111 = {rep.distance}\n")

# The full pair table for the code {00000, 10000, 11111}.
res = code_distance(g, f, [zero, e1, ones])
print("pair table (r, s, distance):")
for (r, s), entry in sorted(res.table.items()):
    print(f"  {r} {s} {entry.distance}")
print(f"delta = {res.delta} achieved at pair {res.pair}")

# A code containing two codewords one unit apart is fragile: delta = 1
# even though the underlying graph has diagonal distance 3.
assert res.delta == 1 and res.pair == (1, 2)

# Command line equivalent, with codewords one per line in codes.txt:
#   diagdist gen cycle 5 > cycle5.eg
#   printf '0 0 0 0 0\n1 0 0 0 0\n1 1 1 1 1\n' > codes.txt
#   diagdist code-distance cycle5.eg codes.txt
