"""Exact dense linear algebra over Z/pZ for small primes.

Matrices and vectors are numpy int64 arrays with entries kept in [0, p).
Everything here is a pure function: inputs are never mutated, results are
fresh arrays, so values can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


def is_prime(p: int) -> bool:
    """Deterministic trial division, meant for small moduli (p <= 2**16 or so)."""
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field Z/pZ.  Construction fails if p is not prime."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    def inv(self, a: int) -> int:
        """Multiplicative inverse of a mod p, by extended Euclid."""
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"0 is not invertible mod {self.p}")
        r0, r1 = self.p, a
        t0, t1 = 0, 1
        while r1:
            q = r0 // r1
            r0, r1 = r1, r0 - q * r1
            t0, t1 = t1, t0 - q * t1
        return t0 % self.p


def _as_matrix(m, p: int) -> np.ndarray:
    a = np.asarray(m, dtype=np.int64)
    if a.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {a.shape}")
    return a % p  # % always allocates, so callers' arrays are never touched


def rref(m, field: PrimeField) -> tuple[np.ndarray, list[int], int]:
    """Reduced row-echelon form over Z/pZ.

    Returns (reduced, pivots, rank) where pivots lists the pivot columns in
    ascending order and rank == len(pivots).  The row space is preserved.
    """
    r = _as_matrix(m, field.p)
    rows, cols = r.shape
    p = field.p
    pivots: list[int] = []
    lead = 0
    for col in range(cols):
        if lead == rows:
            break
        sel = -1
        for i in range(lead, rows):
            if r[i, col]:
                sel = i
                break
        if sel < 0:
            continue
        if sel != lead:
            r[[lead, sel]] = r[[sel, lead]]
        inv = field.inv(int(r[lead, col]))
        if inv != 1:
            r[lead] = (r[lead] * inv) % p
        for i in range(rows):
            if i != lead and r[i, col]:
                r[i] = (r[i] - r[i, col] * r[lead]) % p
        pivots.append(col)
        lead += 1
    return r, pivots, len(pivots)


def kernel_basis(m, field: PrimeField) -> list[np.ndarray]:
    """Basis of the right nullspace of m over Z/pZ.

    One basis vector per free column, free columns taken in ascending order;
    vector j has a 1 in its own free column, 0 in every other free column,
    and the forced values in the pivot columns.  This makes the basis a
    deterministic function of m.
    """
    r, pivots, _ = rref(m, field)
    cols = r.shape[1]
    p = field.p
    pivot_set = set(pivots)
    basis = []
    for f in range(cols):
        if f in pivot_set:
            continue
        v = np.zeros(cols, dtype=np.int64)
        v[f] = 1
        for row, pc in enumerate(pivots):
            v[pc] = (-int(r[row, f])) % p
        basis.append(v)
    return basis


def solve(m, rhs, field: PrimeField) -> np.ndarray | None:
    """One particular solution of m x = rhs over Z/pZ, or None if inconsistent.

    Free variables are set to 0.  Raises ValueError when rhs does not match
    the row count of m.
    """
    a = _as_matrix(m, field.p)
    b = np.asarray(rhs, dtype=np.int64) % field.p
    if b.shape != (a.shape[0],):
        raise ValueError(f"rhs has shape {b.shape}, expected ({a.shape[0]},)")
    n = a.shape[1]
    aug = np.concatenate([a, b.reshape(-1, 1)], axis=1)
    r, pivots, _ = rref(aug, field)
    if pivots and pivots[-1] == n:
        return None  # a pivot in the rhs column means 0 = nonzero
    x = np.zeros(n, dtype=np.int64)
    for row, pc in enumerate(pivots):
        x[pc] = r[row, n]
    return x
