"""Command line front end.

Subcommands:

    distance       minimum kernel weight of a graph (its diagonal distance)
    code-distance  distance of a code given a graph file and a codeword file
    kernel         print Lambda = [I | Gamma] and a deterministic kernel basis
    verify         cross-check the kernel search against the brute force
    gen            write a generated graph file to stdout

The prime is resolved as: --p flag, else the file's p header, else 2.

Exit codes: 0 success, 1 usage error, 2 parse/validation error, 3 search
budget exceeded, 4 verify mismatch.

JSON payloads have a fixed key order and are byte-identical across runs on
identical inputs, except for the elapsed_ms field.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .distance import (
    SearchConfig,
    SearchTooLarge,
    SymplecticVector,
    build_lambda,
    code_distance,
    diagonal_distance,
)
from .gfp import PrimeField, is_prime, kernel_basis
from .graphs import (
    FAMILIES,
    Multigraph,
    ParseError,
    adjacency_matrix,
    generate,
    isolated_vertices,
    parse_codewords,
    parse_graph,
    serialize,
    vanishing_edges,
)
from .oracle import brute_force_distance


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage problems are exit code 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


@dataclass
class CliReport:
    """Internal result of one command run, rendered to text or JSON."""

    command: str
    inputs: dict
    result: dict
    warnings: list[str] = field(default_factory=list)
    elapsed_ms: float = 0.0

    def json_payload(self) -> dict:
        payload: dict = {"command": self.command}
        for key in ("p", "n", "family"):
            if key in self.inputs:
                payload[key] = self.inputs[key]
        payload.update(self.result)
        payload["warnings"] = self.warnings
        payload["elapsed_ms"] = self.elapsed_ms
        return payload


def _prime_flag(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if not is_prime(value):
        raise argparse.ArgumentTypeError(f"{value} is not prime")
    return value


def _build_parser() -> _Parser:
    parser = _Parser(prog="diagdist", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, search=True):
        sp.add_argument("--p", type=_prime_flag, default=None, help="prime modulus (overrides the file header; default 2)")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.add_argument("--quiet", action="store_true", help="suppress warnings on stderr")
        if search:
            sp.add_argument("--max-n", type=int, default=None, help="vertex cap for the exhaustive search")
            sp.add_argument("--force", action="store_true", help="search regardless of the configured budget")

    sp = sub.add_parser("distance", help="diagonal distance of a graph")
    sp.add_argument("graph_file")
    common(sp)
    sp.set_defaults(func=_cmd_distance)

    sp = sub.add_parser("code-distance", help="distance of a code over a graph")
    sp.add_argument("graph_file")
    sp.add_argument("codes_file")
    common(sp)
    sp.set_defaults(func=_cmd_code_distance)

    sp = sub.add_parser("kernel", help="print Lambda and a kernel basis")
    sp.add_argument("graph_file")
    common(sp, search=False)
    sp.set_defaults(func=_cmd_kernel)

    sp = sub.add_parser("verify", help="kernel search vs brute force on one graph")
    sp.add_argument("graph_file")
    common(sp)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("gen", help="write a generated graph file to stdout")
    sp.add_argument("family", choices=FAMILIES)
    sp.add_argument("n", type=int)
    common(sp, search=False)
    sp.set_defaults(func=_cmd_gen)

    return parser


def _load_graph(args) -> tuple[Multigraph, PrimeField, list[str]]:
    text = Path(args.graph_file).read_text(encoding="utf-8")
    g, declared = parse_graph(text)
    p = args.p if args.p is not None else (declared if declared is not None else 2)
    f = PrimeField(p)
    warnings = []
    for u, v, m in vanishing_edges(g, f):
        warnings.append(f"edge ({u}, {v}) multiplicity {m} vanishes mod {p}")
    for v in isolated_vertices(g, f):
        warnings.append(f"vertex {v} is isolated mod {p} (its X operation is the identity map)")
    return g, f, warnings


def _search_config(args) -> SearchConfig:
    return SearchConfig(max_vertices=args.max_n, force=args.force)


def _word_str(k: SymplecticVector) -> str:
    parts = []
    for i in range(1, k.n + 1):
        z, x = k.z[i - 1], k.x[i - 1]
        if z:
            parts.append(f"Z{i}" + (f"^{z}" if z > 1 else ""))
        if x:
            parts.append(f"X{i}" + (f"^{x}" if x > 1 else ""))
    return " ".join(parts) if parts else "(identity)"


def _vec_str(k: SymplecticVector) -> str:
    return "[" + " ".join(map(str, k.z)) + " | " + " ".join(map(str, k.x)) + "]"


def _witness_result(k: SymplecticVector) -> dict:
    return {"witness_z": list(k.z), "witness_x": list(k.x)}


def _cmd_distance(args):
    g, f, warnings = _load_graph(args)
    rep = diagonal_distance(g, f, _search_config(args))
    result = {"distance": rep.distance}
    result.update(_witness_result(rep.witness))
    result["vectors_examined"] = rep.vectors_examined
    lines = [
        f"p = {f.p}, n = {g.n}",
        f"distance = {rep.distance}",
        f"witness k = {_vec_str(rep.witness)}",
        f"witness word = {_word_str(rep.witness)}",
        f"vectors examined = {rep.vectors_examined}",
    ]
    report = CliReport("distance", {"graph_file": args.graph_file, "p": f.p, "n": g.n}, result, warnings)
    return report, lines, 0


def _cmd_code_distance(args):
    g, f, warnings = _load_graph(args)
    codes = parse_codewords(Path(args.codes_file).read_text(encoding="utf-8"), g.n, f)
    if not codes:
        raise ParseError("codeword file contains no codewords")
    res = code_distance(g, f, codes, _search_config(args))
    best = res.table[res.pair]
    result = {"distance": res.delta, "pair": list(res.pair)}
    result.update(_witness_result(best.witness))
    result["pairs"] = [[r, s, rep.distance] for (r, s), rep in sorted(res.table.items())]
    lines = [f"p = {f.p}, n = {g.n}, codewords = {len(codes)}", "pair table (r, s, distance):"]
    lines += [f"  {r} {s} {rep.distance}" for (r, s), rep in sorted(res.table.items())]
    lines += [
        f"delta = {res.delta} at pair ({res.pair[0]}, {res.pair[1]})",
        f"witness k = {_vec_str(best.witness)}",
        f"witness word = {_word_str(best.witness)}",
    ]
    inputs = {"graph_file": args.graph_file, "codes_file": args.codes_file, "p": f.p, "n": g.n}
    return CliReport("code-distance", inputs, result, warnings), lines, 0


def _cmd_kernel(args):
    g, f, warnings = _load_graph(args)
    lam = build_lambda(adjacency_matrix(g, f))
    basis = kernel_basis(lam, f)
    vectors = [SymplecticVector(tuple(int(v) for v in b)) for b in basis]
    result = {
        "kernel_dim": len(basis),
        "lambda": [[int(v) for v in row] for row in lam],
        "basis": [list(k.entries) for k in vectors],
    }
    lines = [f"p = {f.p}, n = {g.n}", f"Lambda = [I | Gamma] ({g.n} x {2 * g.n}):"]
    lines += ["  " + _vec_str(SymplecticVector(tuple(int(v) for v in row))) for row in lam]
    lines.append(f"kernel dimension = {len(basis)}")
    lines.append("basis (z | x):")
    lines += ["  " + _vec_str(k) for k in vectors]
    report = CliReport("kernel", {"graph_file": args.graph_file, "p": f.p, "n": g.n}, result, warnings)
    return report, lines, 0


def _cmd_verify(args):
    g, f, warnings = _load_graph(args)
    fast = diagonal_distance(g, f, _search_config(args))
    cap_args = {"hard_cap": f.p ** (2 * g.n)} if args.force else {}
    slow = brute_force_distance(g, f, **cap_args)
    match = fast.distance == slow.distance
    result = {"match": match, "distance": fast.distance}
    result.update(_witness_result(fast.witness))
    result["oracle_distance"] = slow.distance
    result["oracle_witness_z"] = list(slow.witness.z)
    result["oracle_witness_x"] = list(slow.witness.x)
    lines = [
        f"p = {f.p}, n = {g.n}",
        f"kernel search: distance = {fast.distance}, witness = {_word_str(fast.witness)}",
        f"brute force:   distance = {slow.distance}, witness = {_word_str(slow.witness)}",
        f"MATCH ({fast.distance} = {slow.distance})" if match else f"MISMATCH ({fast.distance} != {slow.distance})",
    ]
    report = CliReport("verify", {"graph_file": args.graph_file, "p": f.p, "n": g.n}, result, warnings)
    return report, lines, 0 if match else 4


def _cmd_gen(args):
    try:
        g = generate(args.family, args.n)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None
    text = serialize(g, args.p)
    result = {"n": g.n, "file": text}
    report = CliReport("gen", {"family": args.family, "p": args.p}, result, [])
    return report, [text.rstrip("\n")], 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    t0 = time.perf_counter()
    try:
        report, lines, code = args.func(args)
    except _UsageError as exc:
        print(f"diagdist: error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, ValueError, OSError) as exc:
        print(f"diagdist: error: {exc}", file=sys.stderr)
        return 2
    except SearchTooLarge as exc:
        print(f"diagdist: error: {exc}", file=sys.stderr)
        return 3
    report.elapsed_ms = round((time.perf_counter() - t0) * 1000.0, 3)
    if not args.quiet:
        for w in report.warnings:
            print(f"warning: {w}", file=sys.stderr)
    if args.json:
        print(json.dumps(report.json_payload(), indent=2))
    else:
        for line in lines:
            print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
