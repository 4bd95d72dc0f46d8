"""Command-line surface: verifiers, builders, and renderers.

Exit codes: 0 on success or accepted verification, 1 on a rejected
verification, 2 on usage, parse, or domain errors.  `--json` prints a
machine-readable report; `--manifest PATH` records the command, parameters,
seed, artifact hashes, and verdicts of the run.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import certificates as cert_mod
from . import ell1 as ell1_mod
from . import measures as measures_mod
from . import planar as planar_mod
from . import polyomino as poly_mod
from . import spherical as sph_mod
from .errors import SeppackError
from .serialize import fraction_from_json
from .svg import render_svg


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _write(path: str | None, text: str) -> list[str]:
    if path is None or path == "-":
        sys.stdout.write(text)
        global _PAYLOAD_ON_STDOUT
        _PAYLOAD_ON_STDOUT = True
        return []
    Path(path).write_text(text)
    return [path]


_PAYLOAD_ON_STDOUT = False


def _fraction(text: str) -> Fraction:
    try:
        return fraction_from_json(text)
    except SeppackError:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from None


def _reference_body(name: str) -> planar_mod.SymmetricPolygon:
    bodies = {
        "square": planar_mod.square_body,
        "hexagon": planar_mod.hexagon_body,
        "octagon": planar_mod.octagon_body,
    }
    if name not in bodies:
        raise SeppackError(f"unknown reference body {name!r}")
    return bodies[name]()


def _load_body(args) -> planar_mod.SymmetricPolygon:
    if getattr(args, "ref", None):
        return _reference_body(args.ref)
    if getattr(args, "file", None):
        return planar_mod.body_from_json(_read(args.file))
    raise SeppackError("need a body: give FILE or --ref NAME")


# --- handlers: each returns (exit_code, report, written_paths) -----------------

def _cmd_code_verify(args):
    code = sph_mod.parse_code_file(_read(args.file), args.alpha)
    report = sph_mod.verify_code(code)
    out = {
        "vectors": len(code),
        "dimension": code.dimension,
        "alpha": str(args.alpha),
        "coherence": sph_mod.max_abs_inner_product(code),
        **report.as_dict(),
    }
    return (0 if report.accepted else 1), out, []


def _cmd_code_search(args):
    code = sph_mod.deletion_search(args.dim, args.seed, args.trials)
    k, expect = sph_mod.expected_survivors(args.dim)
    text = sph_mod.format_code_file(code)
    written = _write(args.out, text)
    out = {
        "dimension": args.dim,
        "seed": args.seed,
        "trials": args.trials,
        "sampled": k,
        "guaranteed_expectation": expect,
        "survivors": len(code),
        "coherence": sph_mod.max_abs_inner_product(code),
        "accepted": sph_mod.verify_code(code).accepted,
    }
    return 0, out, written


def _cmd_cert_lift(args):
    code = sph_mod.parse_code_file(_read(args.file), args.alpha)
    cert = cert_mod.lift_from_code(code, args.k)
    report = cert_mod.verify_certificate(cert)
    written = _write(args.out, cert_mod.certificate_to_json(cert))
    out = {
        "pairs": len(cert),
        "dimension": cert.dimension,
        **report.as_dict(),
    }
    return (0 if report.accepted else 1), out, written


def _cmd_cert_verify(args):
    cert = cert_mod.certificate_from_json(_read(args.file))
    report = cert_mod.verify_certificate(cert)
    out = {"pairs": len(cert), "dimension": cert.dimension, **report.as_dict()}
    return (0 if report.accepted else 1), out, []


def _cmd_cert_reduce(args):
    cert = cert_mod.certificate_from_json(_read(args.file))
    matrix, removed = cert_mod.reduce_certificate(cert, args.epsilon)
    rank = None
    if matrix.rows and matrix.kind == "rational":
        rank = cert_mod.rank_exact(matrix)
    out = {
        "size": matrix.rows,
        "removed_pairs": removed,
        "rank": rank,
        "rank_bound": cert.dimension - removed + 1,
        "entries": [str(v) for v in matrix.entries],
    }
    return 0, out, []


def _cmd_cert_bound(args):
    value = cert_mod.hadwiger_upper_bound_smooth(args.dim)
    return 0, {"dimension": args.dim, "upper_bound": value}, []


def _cmd_ell1_build(args):
    code = ell1_mod.rs_indicator_code(args.k)
    written = _write(args.out, ell1_mod.code_to_text(code))
    out = {
        "k": args.k,
        "length": code.length,
        "codewords": len(code),
        "min_distance": ell1_mod.min_distance(code),
    }
    return 0, out, written


def _cmd_ell1_verify(args):
    code = ell1_mod.code_from_text(_read(args.file))
    packing = ell1_mod.L1Packing.from_code(code)
    report = ell1_mod.verify_total_separability_l1(packing)
    out = {
        "codewords": len(code),
        "length": code.length,
        "min_distance": ell1_mod.min_distance(code),
        "radius": str(packing.radius),
        **report.as_dict(),
    }
    return (0 if report.accepted else 1), out, []


def _cmd_ell1_neighbors(args):
    code = ell1_mod.code_from_text(_read(args.file))
    dist = ell1_mod.min_distance(code)
    if args.word is not None:
        counts = [
            ell1_mod.min_distance_neighbor_count(code, code.words[args.word])
        ]
    else:
        counts = [
            ell1_mod.min_distance_neighbor_count(code, w) for w in code.words
        ]
    out = {
        "codewords": len(code),
        "min_distance": dist,
        "neighbor_counts": sorted(set(counts)),
        "min_neighbors": min(counts),
        "max_neighbors": max(counts),
    }
    return 0, out, []


def _cmd_planar_classify(args):
    body = _load_body(args)
    quasi, witness = planar_mod.is_quasi_hexagon(body)
    out = {
        "class": planar_mod.classify_body(body),
        "quasi_hexagon": quasi,
        "witness": [[str(c) for c in u] for u in witness] if witness else None,
    }
    return 0, out, []


def _cmd_planar_pack(args):
    body = _load_body(args)
    packing = planar_mod.generate_packing(body, args.n)
    graph = planar_mod.contact_graph(packing)
    written = _write(args.out, planar_mod.packing_to_json(packing))
    out = {
        "class": planar_mod.classify_body(body),
        "translates": len(packing),
        "contacts": len(graph.edges),
        "formula": planar_mod.max_contact_count(
            planar_mod.classify_body(body), args.n
        ),
    }
    return 0, out, written


def _cmd_planar_contacts(args):
    packing = planar_mod.packing_from_json(_read(args.file))
    graph = planar_mod.contact_graph(packing)
    out = {
        "translates": len(packing),
        "contacts": len(graph.edges),
        "max_degree": graph.max_degree(),
        "edges": sorted(list(e) for e in graph.edges),
    }
    return 0, out, []


def _cmd_planar_verify(args):
    packing = planar_mod.packing_from_json(_read(args.file))
    result = planar_mod.verify_total_separability(packing)
    out = {
        "translates": len(packing),
        "separable": result.separable,
        "witness_lines": {
            f"{i},{j}": [[str(phi[0]), str(phi[1])], str(c)]
            for (i, j), (phi, c) in sorted(result.witnesses.items())
        },
        "failures": [
            {"pair": list(pair), "blocking": blocker}
            for pair, blocker in result.failures
        ],
    }
    return (0 if result.separable else 1), out, []


def _cmd_planar_measure(args):
    body = _load_body(args)
    measure = measures_mod.build_constrained_measure(body)
    out = {
        "breakpoints": [str(b) for b in measure.breakpoints],
        "densities": [str(d) for d in measure.densities],
        "total_mass": str(sum(
            d * (b2 - b1)
            for d, b1, b2 in zip(
                measure.densities, measure.breakpoints, measure.breakpoints[1:]
            )
        )),
        "zero_intervals": [
            [str(a), str(b)] for a, b in measure.zero_intervals()
        ],
    }
    return 0, out, []


def _cmd_planar_render(args):
    packing = planar_mod.packing_from_json(_read(args.file))
    separators = []
    if args.lines:
        result = planar_mod.verify_total_separability(packing)
        separators = list(result.witnesses.values())
    written = _write(args.svg, render_svg(packing, separators))
    return 0, {"translates": len(packing), "lines": len(separators)}, written


def _cmd_poly_optimal(args):
    cluster = poly_mod.optimal_cluster(args.lattice, args.n)
    written = _write(args.out, poly_mod.cluster_to_text(cluster))
    out = {
        "lattice": args.lattice,
        "cells": len(cluster),
        "adjacencies": poly_mod.adjacency_count(cluster),
        "formula": poly_mod.max_adjacency(args.lattice, args.n),
    }
    return 0, out, written


def _cmd_poly_count(args):
    cluster = poly_mod.cluster_from_text(_read(args.file), args.lattice)
    out = {
        "lattice": args.lattice,
        "cells": len(cluster),
        "adjacencies": poly_mod.adjacency_count(cluster),
    }
    return 0, out, []


def _cmd_poly_merge(args):
    c1 = poly_mod.cluster_from_text(_read(args.file1), "square")
    c2 = poly_mod.cluster_from_text(_read(args.file2), "square")
    merged = poly_mod.merge_clusters(c1, c2)
    written = _write(args.out, poly_mod.cluster_to_text(merged))
    out = {
        "cells": len(merged),
        "adjacencies": poly_mod.adjacency_count(merged),
        "lower_bound": poly_mod.adjacency_count(c1)
        + poly_mod.adjacency_count(c2),
    }
    return 0, out, written


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seppack",
        description="Construct and verify totally separable packing "
        "certificates, codes, and planar contact structures.",
    )
    parser.add_argument("--json", action="store_true",
                        help="emit a machine-readable JSON report")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for randomized subcommands")
    parser.add_argument("--manifest", metavar="PATH",
                        help="write a reproducibility manifest to PATH")
    top = parser.add_subparsers(dest="group", required=True)

    code = top.add_parser("code", help="spherical code tables").add_subparsers(
        dest="cmd", required=True
    )
    p = code.add_parser("verify", help="check a unit-vector table")
    p.add_argument("--alpha", type=_fraction, required=True)
    p.add_argument("file")
    p.set_defaults(run=_cmd_code_verify)
    p = code.add_parser("search", help="random-deletion code search")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                   help="seed (also accepted as a global flag)")
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(run=_cmd_code_search)

    cert = top.add_parser("cert", help="separability certificates").add_subparsers(
        dest="cmd", required=True
    )
    p = cert.add_parser("lift", help="lift a code table to a certificate")
    p.add_argument("--alpha", type=_fraction, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("file")
    p.add_argument("--out")
    p.set_defaults(run=_cmd_cert_lift)
    p = cert.add_parser("verify", help="verify a certificate JSON file")
    p.add_argument("file")
    p.set_defaults(run=_cmd_cert_verify)
    p = cert.add_parser("reduce", help="reduce to a small-entry matrix")
    p.add_argument("--epsilon", type=_fraction, default=None)
    p.add_argument("file")
    p.set_defaults(run=_cmd_cert_reduce)
    p = cert.add_parser("bound", help="upper bound in dimensions 5..7")
    p.add_argument("--dim", type=int, required=True)
    p.set_defaults(run=_cmd_cert_bound)

    ell1 = top.add_parser("ell1", help="binary-code ball packings").add_subparsers(
        dest="cmd", required=True
    )
    p = ell1.add_parser("build", help="build the Reed-Solomon indicator code")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(run=_cmd_ell1_build)
    p = ell1.add_parser("verify", help="verify total separability of a code packing")
    p.add_argument("file")
    p.set_defaults(run=_cmd_ell1_verify)
    p = ell1.add_parser("neighbors", help="minimum-distance neighbor counts")
    p.add_argument("file")
    p.add_argument("--word", type=int, default=None)
    p.set_defaults(run=_cmd_ell1_neighbors)

    planar = top.add_parser("planar", help="planar packing toolkit").add_subparsers(
        dest="cmd", required=True
    )

    def body_args(p):
        p.add_argument("file", nargs="?")
        p.add_argument("--ref", choices=("square", "hexagon", "octagon"))

    p = planar.add_parser("classify", help="parallelogram / quasi-hexagon / general")
    body_args(p)
    p.set_defaults(run=_cmd_planar_classify)
    p = planar.add_parser("pack", help="generate an optimal separable packing")
    body_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(run=_cmd_planar_pack)
    p = planar.add_parser("contacts", help="contact graph of a packing file")
    p.add_argument("file")
    p.set_defaults(run=_cmd_planar_contacts)
    p = planar.add_parser("verify", help="exact total-separability check")
    p.add_argument("file")
    p.set_defaults(run=_cmd_planar_verify)
    p = planar.add_parser("measure", help="constrained boundary measure")
    body_args(p)
    p.set_defaults(run=_cmd_planar_measure)
    p = planar.add_parser("render", help="SVG drawing of a packing")
    p.add_argument("file")
    p.add_argument("--svg", required=True)
    p.add_argument("--lines", action="store_true",
                   help="overlay separating-line witnesses")
    p.set_defaults(run=_cmd_planar_render)

    poly = top.add_parser("polyomino", help="lattice cell clusters").add_subparsers(
        dest="cmd", required=True
    )
    p = poly.add_parser("optimal", help="max-adjacency cluster")
    p.add_argument("--lattice", choices=poly_mod.LATTICES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(run=_cmd_poly_optimal)
    p = poly.add_parser("count", help="adjacency count of a cluster file")
    p.add_argument("file")
    p.add_argument("--lattice", choices=poly_mod.LATTICES, default="square")
    p.set_defaults(run=_cmd_poly_count)
    p = poly.add_parser("merge", help="glue two square clusters")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--out")
    p.set_defaults(run=_cmd_poly_merge)
    return parser


def _sha256(path: str) -> str | None:
    p = Path(path)
    if path == "-" or not p.is_file():
        return None
    return hashlib.sha256(p.read_bytes()).hexdigest()


def _write_manifest(path: str, argv, args, code: int, report: dict,
                    written: list[str]) -> None:
    inputs = {}
    for key in ("file", "file1", "file2"):
        value = getattr(args, key, None)
        if value and value != "-":
            digest = _sha256(value)
            if digest:
                inputs[value] = digest
    outputs = {p: _sha256(p) for p in written}
    manifest = {
        "command": argv,
        "parameters": {
            k: (str(v) if isinstance(v, Fraction) else v)
            for k, v in vars(args).items()
            if k not in ("run", "manifest", "json") and v is not None
        },
        "seed": args.seed,
        "input_hashes": inputs,
        "output_hashes": outputs,
        "exit_code": code,
        "verdicts": {
            k: v
            for k, v in report.items()
            if isinstance(v, (bool, int, str, float))
        },
    }
    Path(path).write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")


def main(argv=None) -> int:
    global _PAYLOAD_ON_STDOUT
    _PAYLOAD_ON_STDOUT = False
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, report, written = args.run(args)
    except SeppackError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    stream = sys.stderr if _PAYLOAD_ON_STDOUT else sys.stdout
    if args.json:
        print(json.dumps(report, indent=2, sort_keys=True, default=str),
              file=stream)
    else:
        for key, value in report.items():
            if isinstance(value, (list, dict)) and len(str(value)) > 120:
                continue
            print(f"{key}: {value}", file=stream)
    if args.manifest:
        _write_manifest(args.manifest, argv, args, code, report, written)
    return code


if __name__ == "__main__":
    sys.exit(main())
