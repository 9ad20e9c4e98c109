"""Multigraph model: parsing, serialization, generators, adjacency mod p.

Graph file format (UTF-8, line oriented):

    # comment lines and blank lines are ignored
    p 2          optional prime header, at most once, before any edge line
    n 5          required vertex count, before any edge line
    e 1 2        edge between vertices 1 and 2, multiplicity 1
    e 1 2 3      edge with explicit multiplicity; repeated lines accumulate

Vertices are numbered 1..n in files and in all reports, 0..n-1 internally.
Self-loops are rejected.  Multiplicities are stored unreduced so the same
multigraph can be analyzed under several primes; reduction happens only in
adjacency_matrix.

Codeword file format: one labelling per non-comment line, n space-separated
integers (reduced mod p on parse).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .gfp import PrimeField, is_prime

FAMILIES = ("cycle", "path", "complete", "edgeless")


class ParseError(ValueError):
    """Malformed graph or codeword input; carries the offending line number."""

    def __init__(self, message: str, lineno: int | None = None):
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
        self.lineno = lineno


@dataclass(eq=False)
class Multigraph:
    """Undirected multigraph on vertices 0..n-1.

    mult is the symmetric n x n matrix of non-negative edge multiplicities
    with zero diagonal.  Instances are immutable after construction (the
    multiplicity array is marked read-only) and safe to share.
    """

    n: int
    mult: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("vertex count must be >= 1")
        m = np.asarray(self.mult, dtype=np.int64).copy()
        if m.shape != (self.n, self.n):
            raise ValueError(f"multiplicity matrix has shape {m.shape}, expected ({self.n}, {self.n})")
        if (m < 0).any():
            raise ValueError("edge multiplicities must be non-negative")
        if not np.array_equal(m, m.T):
            raise ValueError("multiplicity matrix must be symmetric")
        if np.diag(m).any():
            raise ValueError("self-loops are not allowed (diagonal must be zero)")
        m.setflags(write=False)
        self.mult = m

    def __eq__(self, other):
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.mult, other.mult)

    def edges(self) -> list[tuple[int, int, int]]:
        """Unordered pairs with multiplicity >= 1, 1-based, lexicographic."""
        out = []
        for u in range(self.n):
            for v in range(u + 1, self.n):
                m = int(self.mult[u, v])
                if m:
                    out.append((u + 1, v + 1, m))
        return out


def adjacency_matrix(g: Multigraph, f: PrimeField) -> np.ndarray:
    """The n x n adjacency matrix of g reduced mod p (symmetric, zero diagonal)."""
    return g.mult % f.p


def generate(family: str, n: int) -> Multigraph:
    """Standard simple graph of the named family, multiplicity 1 on each edge.

    Families: cycle (n >= 3), path, complete, edgeless (n >= 1).
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {', '.join(FAMILIES)}")
    if n < 1:
        raise ValueError(f"{family} graph needs n >= 1")
    if family == "cycle" and n < 3:
        raise ValueError("cycle graph needs n >= 3")
    mult = np.zeros((n, n), dtype=np.int64)
    if family == "cycle":
        for i in range(n):
            j = (i + 1) % n
            mult[i, j] = mult[j, i] = 1
    elif family == "path":
        for i in range(n - 1):
            mult[i, i + 1] = mult[i + 1, i] = 1
    elif family == "complete":
        mult[:] = 1
        np.fill_diagonal(mult, 0)
    return Multigraph(n, mult)


def parse_graph(text: str) -> tuple[Multigraph, int | None]:
    """Parse the edge-list format; returns (graph, declared prime or None)."""
    n: int | None = None
    declared_p: int | None = None
    mult: np.ndarray | None = None
    seen_edge = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        tag = parts[0]
        if tag == "p":
            if declared_p is not None:
                raise ParseError("duplicate p header", lineno)
            if seen_edge:
                raise ParseError("p header must come before edge lines", lineno)
            declared_p = _int_token(parts, 1, 2, "p header", lineno)
            if not is_prime(declared_p):
                raise ParseError(f"declared p = {declared_p} is not prime", lineno)
        elif tag == "n":
            if n is not None:
                raise ParseError("duplicate n line", lineno)
            n = _int_token(parts, 1, 2, "n line", lineno)
            if n < 1:
                raise ParseError(f"vertex count must be >= 1, got {n}", lineno)
            mult = np.zeros((n, n), dtype=np.int64)
        elif tag == "e":
            if n is None or mult is None:
                raise ParseError("edge line before the n line", lineno)
            if len(parts) not in (3, 4):
                raise ParseError("edge line must be 'e u v' or 'e u v mult'", lineno)
            u = _int_token(parts, 1, len(parts), "edge line", lineno)
            v = _int_token(parts, 2, len(parts), "edge line", lineno)
            m = _int_token(parts, 3, len(parts), "edge line", lineno) if len(parts) == 4 else 1
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise ParseError(f"vertex index out of range 1..{n}", lineno)
            if u == v:
                raise ParseError(f"self-loop at vertex {u} is not allowed", lineno)
            if m < 0:
                raise ParseError(f"negative multiplicity {m}", lineno)
            mult[u - 1, v - 1] += m
            mult[v - 1, u - 1] += m
            seen_edge = True
        else:
            raise ParseError(f"unrecognized directive {tag!r}", lineno)
    if n is None or mult is None:
        raise ParseError("missing required n line")
    return Multigraph(n, mult), declared_p


def _int_token(parts: list[str], idx: int, expected_len: int, what: str, lineno: int) -> int:
    if len(parts) != expected_len:
        raise ParseError(f"{what} must have {expected_len - 1} value(s)", lineno)
    try:
        return int(parts[idx])
    except ValueError:
        raise ParseError(f"{what}: {parts[idx]!r} is not an integer", lineno) from None


def serialize(g: Multigraph, p: int | None = None) -> str:
    """Emit the file format: p header if known, the n line, then one
    'e u v m' line per unordered pair, pairs in lexicographic order.

    parse_graph(serialize(g)) reconstructs g exactly.
    """
    lines = []
    if p is not None:
        lines.append(f"p {p}")
    lines.append(f"n {g.n}")
    for u, v, m in g.edges():
        lines.append(f"e {u} {v} {m}")
    return "\n".join(lines) + "\n"


def parse_codewords(text: str, n: int, f: PrimeField) -> list[np.ndarray]:
    """Parse one labelling per non-comment line: n integers, reduced mod p."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != n:
            raise ParseError(f"expected {n} values, got {len(parts)}", lineno)
        try:
            values = [int(t) for t in parts]
        except ValueError:
            raise ParseError("non-integer token in codeword", lineno) from None
        out.append(np.array(values, dtype=np.int64) % f.p)
    return out


def isolated_vertices(g: Multigraph, f: PrimeField) -> list[int]:
    """1-based vertices whose adjacency column vanishes mod p.

    At such a vertex the X operation acts as the identity even for a nonzero
    exponent, so reported weights count a factor that does nothing; callers
    surface this as a warning.
    """
    gamma = adjacency_matrix(g, f)
    return [j + 1 for j in range(g.n) if not gamma[:, j].any()]


def vanishing_edges(g: Multigraph, f: PrimeField) -> list[tuple[int, int, int]]:
    """Edges whose positive multiplicity reduces to 0 mod p, as (u, v, mult)."""
    return [(u, v, m) for u, v, m in g.edges() if m % f.p == 0]
