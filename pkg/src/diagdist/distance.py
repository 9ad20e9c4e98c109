"""Diagonal and code distance of multigraph codes over Z/pZ.

A word of per-vertex operations ``prod_i Z_i^{z_i} X_i^{x_i}`` acts on a
labelling L as the translation ``L + Lambda k  (mod p)`` where

    Lambda = [I_n | Gamma],     k = (z_1 .. z_n | x_1 .. x_n),

Gamma being the adjacency matrix mod p.  Words that act as the identity are
exactly the kernel vectors of Lambda, so the diagonal distance is the minimum
chi-weight (number of vertices i with z_i != 0 or x_i != 0) over the nonzero
kernel.  The distance between two labellings cr, cs replaces the kernel by
the solution set of ``Lambda k = cr - cs``.

Because of the identity block, the kernel is parameterized in closed form by
the x-half alone: k = (-Gamma x | x).  The search therefore enumerates all
p**n choices of x instead of spanning a 2n-column basis.  For p = 2 the
enumeration walks x in Gray-code order, keeping Gamma x up to date with one
column XOR per step; for p >= 3 a mixed-radix odometer (digit 1 fastest)
does the same with column-update deltas and an incrementally maintained
weight.  Reported witnesses are the first minimizer in that fixed order, so
equal inputs always produce identical reports.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .gfp import PrimeField
from .graphs import Multigraph, adjacency_matrix

DEFAULT_CANDIDATE_BUDGET = 1 << 24
DEFAULT_MAX_VERTICES = {2: 24}  # any other prime: 12
DEFAULT_MAX_VERTICES_ODD = 12


class SearchTooLarge(Exception):
    """The requested exhaustive search exceeds the configured budget."""


@dataclass(frozen=True)
class SearchConfig:
    """Caps on the p**n exhaustive search.

    max_vertices of None means the per-prime default (24 for p = 2, 12
    otherwise).  force disables both the vertex cap and the global
    candidate budget.
    """

    max_vertices: int | None = None
    force: bool = False

    def __post_init__(self):
        if self.max_vertices is not None and self.max_vertices < 1:
            raise ValueError("max_vertices must be >= 1")

    def vertex_cap(self, p: int) -> int:
        if self.max_vertices is not None:
            return self.max_vertices
        return DEFAULT_MAX_VERTICES.get(p, DEFAULT_MAX_VERTICES_ODD)


@dataclass(frozen=True)
class SymplecticVector:
    """A 2n-entry vector (z_1 .. z_n | x_1 .. x_n) encoding one operator word."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) % 2:
            raise ValueError("symplectic vector length must be even")

    @classmethod
    def from_parts(cls, z, x) -> "SymplecticVector":
        return cls(tuple(int(v) for v in z) + tuple(int(v) for v in x))

    @property
    def n(self) -> int:
        return len(self.entries) // 2

    @property
    def z(self) -> tuple[int, ...]:
        return self.entries[: self.n]

    @property
    def x(self) -> tuple[int, ...]:
        return self.entries[self.n :]

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)


@dataclass(frozen=True)
class DistanceReport:
    """Result of one minimum-weight search.

    distance is the minimum chi-weight found (1 <= distance <= n), witness a
    vector achieving it, vectors_examined the number of candidates evaluated
    (less than the full p**n when the weight-1 early exit fires).
    """

    distance: int
    witness: SymplecticVector
    vectors_examined: int


@dataclass(frozen=True)
class CodeDistanceResult:
    """delta = min of the pair table; pair is the first minimizer (r <= s)."""

    delta: int
    pair: tuple[int, int]
    table: dict[tuple[int, int], DistanceReport]


def build_lambda(gamma) -> np.ndarray:
    """The n x 2n block matrix [I_n | gamma]."""
    gamma = np.asarray(gamma, dtype=np.int64)
    if gamma.ndim != 2 or gamma.shape[0] != gamma.shape[1]:
        raise ValueError(f"adjacency block must be square, got shape {gamma.shape}")
    n = gamma.shape[0]
    return np.concatenate([np.eye(n, dtype=np.int64), gamma], axis=1)


def chi_weight(k: SymplecticVector, f: PrimeField) -> int:
    """Number of vertices i with z_i != 0 or x_i != 0 (entries taken mod p)."""
    n = k.n
    p = f.p
    return sum(1 for i in range(n) if k.entries[i] % p or k.entries[i + n] % p)


def kernel_point(gamma, x, f: PrimeField) -> SymplecticVector:
    """The kernel vector (-gamma x mod p | x) determined by the x-half.

    x runs over (Z/pZ)^n; the map x -> k is a bijection onto ker [I | gamma].
    """
    gamma = np.asarray(gamma, dtype=np.int64)
    x = np.asarray(x, dtype=np.int64) % f.p
    z = (-(gamma @ x)) % f.p
    return SymplecticVector.from_parts(z, x)


def _check_budget(n: int, p: int, cfg: SearchConfig) -> None:
    if cfg.force:
        return
    cap = cfg.vertex_cap(p)
    if n > cap:
        raise SearchTooLarge(
            f"n = {n} exceeds the vertex cap {cap} for p = {p}; "
            f"raise max_vertices or set force"
        )
    if p**n > DEFAULT_CANDIDATE_BUDGET:
        raise SearchTooLarge(
            f"p**n = {p**n} exceeds the candidate budget {DEFAULT_CANDIDATE_BUDGET}; set force"
        )


def _search_gf2(col_masks: list[int], n: int, d_mask: int, skip_zero: bool):
    """Minimum chi-weight over { (d - Gamma x | x) : x in GF(2)^n }.

    x walks in Gray-code order; z = d - Gamma x is kept as a bitmask with one
    column XOR per step, and the weight is popcount(z | x).  When skip_zero
    is set (kernel search, d = 0) the x = 0 candidate is not evaluated.
    Returns (weight, z_mask, x_mask, examined).
    """
    z = d_mask
    x = 0
    best_w = n + 1
    best_z = best_x = 0
    examined = 0
    if not skip_zero:
        examined = 1
        w = (z | x).bit_count()
        if w:  # w == 0 only for d == 0, which skip_zero excludes
            best_w, best_z, best_x = w, z, x
            if w == 1:
                return best_w, best_z, best_x, examined
    for t in range(1, 1 << n):
        i = (t & -t).bit_length() - 1  # Gray code: flip the t-th lowest bit
        x ^= 1 << i
        z ^= col_masks[i]
        examined += 1
        w = (z | x).bit_count()
        if w < best_w:
            best_w, best_z, best_x = w, z, x
            if w == 1:
                break
    return best_w, best_z, best_x, examined


def _search_odometer(gamma: np.ndarray, n: int, p: int, d, skip_zero: bool):
    """Odd-prime analogue of _search_gf2, x counting in mixed radix base p.

    Digit 1 is the fastest.  Every digit increment is +1 mod p, so z is
    updated by subtracting the corresponding Gamma column; the chi-weight is
    maintained through per-vertex occupancy flags rather than recomputed.
    Returns (weight, z_tuple, x_tuple, examined).
    """
    col_support = [
        [(j, int(gamma[j, i])) for j in range(n) if gamma[j, i]] for i in range(n)
    ]
    x = [0] * n
    z = [int(v) % p for v in d]
    occ = [z[j] != 0 for j in range(n)]
    weight = sum(occ)
    best_w = n + 1
    best: tuple[tuple[int, ...], tuple[int, ...]] = ((), ())
    examined = 0
    if not skip_zero:
        examined = 1
        if weight:
            best_w = weight
            best = (tuple(z), tuple(x))
            if weight == 1:
                return best_w, best[0], best[1], examined
    for _ in range(p**n - 1):
        i = 0
        while True:  # advance the odometer; wraps carry into the next digit
            xi = x[i] + 1
            wrapped = xi == p
            x[i] = 0 if wrapped else xi
            now = x[i] != 0 or z[i] != 0
            if now != occ[i]:
                occ[i] = now
                weight += 1 if now else -1
            for j, gj in col_support[i]:  # x_i grew by 1 mod p, so z -= col_i
                zj = z[j] - gj
                if zj < 0:
                    zj += p
                z[j] = zj
                now = zj != 0 or x[j] != 0
                if now != occ[j]:
                    occ[j] = now
                    weight += 1 if now else -1
            if wrapped:
                i += 1
            else:
                break
        examined += 1
        if weight and weight < best_w:
            best_w = weight
            best = (tuple(z), tuple(x))
            if weight == 1:
                break
    return best_w, best[0], best[1], examined


def _min_weight_search(gamma: np.ndarray, n: int, f: PrimeField, d: np.ndarray) -> DistanceReport:
    p = f.p
    skip_zero = not d.any()  # the k = 0 candidate has weight 0 and is excluded
    if p == 2:
        col_masks = [int(sum(1 << j for j in range(n) if gamma[j, i])) for i in range(n)]
        d_mask = int(sum(1 << j for j in range(n) if d[j]))
        w, z_mask, x_mask, examined = _search_gf2(col_masks, n, d_mask, skip_zero)
        z = [(z_mask >> j) & 1 for j in range(n)]
        x = [(x_mask >> j) & 1 for j in range(n)]
    else:
        w, z, x, examined = _search_odometer(gamma, n, p, d, skip_zero)
    witness = SymplecticVector.from_parts(z, x)
    lam = build_lambda(gamma)
    assert ((lam @ witness.as_array() - d) % p == 0).all(), "witness failed re-verification"
    return DistanceReport(distance=w, witness=witness, vectors_examined=examined)


def diagonal_distance(
    g: Multigraph, f: PrimeField, cfg: SearchConfig = SearchConfig()
) -> DistanceReport:
    """Exact minimum chi-weight over the nonzero kernel of [I | Gamma].

    Enumerates all p**n - 1 nonzero kernel points; raises SearchTooLarge when
    that exceeds the configured budget and cfg.force is unset.
    """
    _check_budget(g.n, f.p, cfg)
    gamma = adjacency_matrix(g, f)
    return _min_weight_search(gamma, g.n, f, np.zeros(g.n, dtype=np.int64))


def pairwise_distance(
    g: Multigraph,
    f: PrimeField,
    cr,
    cs,
    cfg: SearchConfig = SearchConfig(),
) -> DistanceReport:
    """Minimum chi-weight over solutions of Lambda k = cr - cs (mod p).

    The solution set is the affine family { (d - Gamma x | x) : x in (Z/pZ)^n }
    with d = cr - cs; when cr = cs this is exactly diagonal_distance.
    """
    cr = np.asarray(cr, dtype=np.int64)
    cs = np.asarray(cs, dtype=np.int64)
    if cr.shape != (g.n,) or cs.shape != (g.n,):
        raise ValueError(f"labellings must have length {g.n}")
    _check_budget(g.n, f.p, cfg)
    gamma = adjacency_matrix(g, f)
    d = (cr - cs) % f.p
    return _min_weight_search(gamma, g.n, f, d)


def code_distance(
    g: Multigraph,
    f: PrimeField,
    codewords: list,
    cfg: SearchConfig = SearchConfig(),
) -> CodeDistanceResult:
    """Distance of the code given by a list of codeword labellings.

    delta = min over all pairs r <= s (1-based) of the pairwise distance,
    diagonal pairs included; all (r, r) entries equal diagonal_distance, so
    it is evaluated once and shared.  The reported pair is the first
    minimizer in lexicographic scan order.
    """
    k = len(codewords)
    if k < 1:
        raise ValueError("need at least one codeword")
    diag = diagonal_distance(g, f, cfg)
    table: dict[tuple[int, int], DistanceReport] = {}
    for r in range(1, k + 1):
        table[(r, r)] = diag
        for s in range(r + 1, k + 1):
            table[(r, s)] = pairwise_distance(g, f, codewords[r - 1], codewords[s - 1], cfg)
    best_pair = (1, 1)
    for pair, rep in table.items():  # insertion order is the scan order
        if rep.distance < table[best_pair].distance:
            best_pair = pair
    return CodeDistanceResult(delta=table[best_pair].distance, pair=best_pair, table=table)
