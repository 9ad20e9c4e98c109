"""Shared fixtures for the test suite: random graphs and known 5-cycle values."""

import numpy as np

from diagdist import Multigraph, PrimeField, adjacency_matrix

# Lambda = [I | Gamma] of the 5-cycle 1-2-3-4-5-1; the standard worked example.
CYCLE5_LAMBDA = [
    [1, 0, 0, 0, 0, 0, 1, 0, 0, 1],
    [0, 1, 0, 0, 0, 1, 0, 1, 0, 0],
    [0, 0, 1, 0, 0, 0, 1, 0, 1, 0],
    [0, 0, 0, 1, 0, 0, 0, 1, 0, 1],
    [0, 0, 0, 0, 1, 1, 0, 0, 1, 0],
]

# Its kernel basis in the (z | x) layout: vector i is (column i of Gamma | e_i).
CYCLE5_KERNEL = [
    (0, 1, 0, 0, 1, 1, 0, 0, 0, 0),
    (1, 0, 1, 0, 0, 0, 1, 0, 0, 0),
    (0, 1, 0, 1, 0, 0, 0, 1, 0, 0),
    (0, 0, 1, 0, 1, 0, 0, 0, 1, 0),
    (1, 0, 0, 1, 0, 0, 0, 0, 0, 1),
]


def random_multigraph(rng, n, max_mult=1):
    mult = np.zeros((n, n), dtype=np.int64)
    for u in range(n):
        for v in range(u + 1, n):
            m = rng.randint(0, max_mult)
            mult[u, v] = mult[v, u] = m
    return Multigraph(n, mult)


def random_labelling(rng, n, p):
    return np.array([rng.randrange(p) for _ in range(n)], dtype=np.int64)


def permuted(g, order):
    """Relabelled copy: new vertex a is old vertex order[a]."""
    order = np.asarray(order)
    return Multigraph(g.n, g.mult[np.ix_(order, order)])


def has_zero_column(g, f: PrimeField) -> bool:
    gamma = adjacency_matrix(g, f)
    return bool((~gamma.any(axis=0)).any())


def random_connected_graph(rng, n):
    """Random spanning tree plus a handful of extra edges; always connected."""
    mult = np.zeros((n, n), dtype=np.int64)
    for v in range(1, n):
        u = rng.randrange(v)
        mult[u, v] = mult[v, u] = 1
    for _ in range(n):
        u, v = rng.randrange(n), rng.randrange(n)
        if u != v:
            mult[u, v] = mult[v, u] = 1
    return Multigraph(n, mult)
