#!/usr/bin/env python3
"""One multigraph, two primes.

Multiplicities are stored unreduced, so the same multigraph can be analyzed
mod 2 and mod 3.  A doubled edge is invisible mod 2 (2 = 0) but acts like a
"times 2" edge mod 3; that changes which vertices are effectively isolated
and it changes the distance.

Run:  python3 demos/multigraph_mod_p.py
"""

import numpy as np

from diagdist import (
    Multigraph,
    PrimeField,
    adjacency_matrix,
    diagonal_distance,
    isolated_vertices,
    serialize,
    vanishing_edges,
)

# A triangle where one side is doubled.
mult = np.array(
    [
        [0, 2, 1],
        [2, 0, 1],
        [1, 1, 0],
    ]
)
g = Multigraph(3, mult)
print("graph file form:")
print(serialize(g))

for p in (2, 3):
    f = PrimeField(p)
    print(f"--- mod {p} ---")
    print("Gamma:")
    print(adjacency_matrix(g, f))
    gone = vanishing_edges(g, f)
    if gone:
        for u, v, m in gone:
            print(f"note: edge ({u}, {v}) with multiplicity {m} vanishes mod {p}")
    iso = isolated_vertices(g, f)
    if iso:
        print(f"note: vertices {iso} are isolated mod {p}")
    rep = diagonal_distance(g, f)
    print(f"diagonal distance mod {p} = {rep.distance}")
    print(f"witness (z | x) = {rep.witness.z} | {rep.witness.x}")
    print()

# The doubled edge survives mod 3, so vertex labels can move in more ways
# and the minimum-weight identity word changes shape.  On the command line
# the prime comes from --p, a "p" header line, or defaults to 2:
#   diagdist distance triangle.eg --p 3
