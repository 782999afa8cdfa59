"""Command-line front end.

Exit codes: 0 when every asserted check holds (or the command succeeded),
1 when an asserted check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from pathlib import Path
from typing import Sequence

from . import closed_forms as cf
from .eigen import DEFAULT_GROUP_TOL, eigenvalues, energy, group
from .enumeration import enumerate_free_trees, enumerate_with_connected_complement
from .formatting import DEFAULT_PRECISION, dumps, fmt_float
from .graphs import (
    Graph,
    build_dnd,
    build_t3,
    canonical_code,
    complement,
    format_edge_list,
    parse_edge_list,
    parse_pruefer,
    path,
    star,
    tree_from_pruefer,
)
from .matrices import adjacency_matrix, distance_matrix, eccentricity_matrix, format_matrix
from .verifier import (
    DEFAULT_N_MAX,
    EXHAUSTIVE_MAX,
    STATISTICS,
    TheoremId,
    appendix_table_crosscheck,
    check,
    extremal_table,
)

FAMILIES = ("path", "star", "t3", "dnd", "pruefer", "edges")
MATRICES = {"eccentricity": eccentricity_matrix, "adjacency": adjacency_matrix, "distance": distance_matrix}


class UsageError(Exception):
    pass


def _precision(text: str) -> int:
    p = int(text)
    if not 1 <= p <= 17:
        raise argparse.ArgumentTypeError("precision must be in 1..17")
    return p


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _require(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"family {args.family!r} needs {', '.join(missing)}")


def build_family(args) -> Graph:
    fam = args.family
    if fam == "path":
        _require(args, "n")
        return path(args.n)
    if fam == "star":
        _require(args, "n")
        return star(args.n)
    if fam == "t3":
        _require(args, "n", "a", "b")
        return build_t3(args.n, args.a, args.b)
    if fam == "dnd":
        _require(args, "n", "d", "a", "b")
        return build_dnd(args.n, args.d, args.a, args.b)
    if fam == "pruefer":
        _require(args, "seq")
        return tree_from_pruefer(parse_pruefer(args.seq))
    _require(args, "edges")
    text = sys.stdin.read() if args.edges == "-" else Path(args.edges).read_text()
    return parse_edge_list(text, args.n)


def _target_matrix(args):
    g = build_family(args)
    target = complement(g) if args.of == "complement" else g
    return MATRICES[args.matrix](target)


# ---------------------------------------------------------------- commands


def cmd_spectrum(args) -> int:
    m = _target_matrix(args)
    spec = eigenvalues(m)
    out = {
        "family": args.family,
        "of": args.of,
        "matrix": args.matrix,
        "values": list(spec.values),
        "grouped": [[v, k] for v, k in group(spec, args.tol).pairs],
        "energy": energy(spec),
    }
    text = dumps(out, args.precision) + "\n"
    if args.show_matrix:
        text = format_matrix(m) + text
    _emit(text, args.out)
    return 0


def cmd_energy(args) -> int:
    _emit(fmt_float(energy(eigenvalues(_target_matrix(args))), args.precision) + "\n", args.out)
    return 0


def _needs(args, *names):
    missing = [f"--{n}" for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"formula {args.name!r} needs {', '.join(missing)}")
    return [getattr(args, n) for n in names]


def _bounds(d):
    return {k: {"value": b.value, "kind": b.kind, "attainer": b.attainer} for k, b in d.items()}


def _spectrum_json(s: cf.ClosedFormSpectrum):
    return {"pairs": [[v, m] for v, m in s.pairs], "values": s.values()}


FORMULAS = {
    "spec-t3": lambda a: _spectrum_json(cf.spec_t3_complement(*_needs(a, "n", "a", "b"))),
    "energy-t3": lambda a: cf.energy_t3_complement(*_needs(a, "n", "a", "b")),
    "spec-t4": lambda a: _spectrum_json(cf.spec_t4_complement(*_needs(a, "n"))),
    "energy-t4": lambda a: cf.energy_t4_complement(*_needs(a, "n")),
    "path-energy": lambda a: cf.path_adjacency_energy(*_needs(a, "n")),
    "path-complement-energy": lambda a: cf.path_complement_energy(*_needs(a, "n")),
    "xi1-path-complement": lambda a: cf.xi1_path_complement(*_needs(a, "n")),
    "bounds-diam3": lambda a: _bounds(cf.bounds_diam3(*_needs(a, "n"))),
    "energy-bounds-diam3": lambda a: _bounds(cf.energy_bounds_diam3(*_needs(a, "n"))),
    "adjacency-tree-bounds": lambda a: _bounds(cf.adjacency_tree_bounds(*_needs(a, "n"), a.s)),
    "exceptional-root": lambda a: cf.exceptional_root(*_needs(a, "s")),
    "tree-ecc-minima": lambda a: _bounds(cf.tree_ecc_minima(*_needs(a, "n"))),
    "nordhaus-gaddum": lambda a: _bounds(cf.nordhaus_gaddum_bounds(*_needs(a, "n"))),
}


def cmd_formula(args) -> int:
    value = FORMULAS[args.name](args)
    text = fmt_float(value, args.precision) if isinstance(value, float) else dumps(value, args.precision)
    _emit(text + "\n", args.out)
    return 0


def cmd_enumerate(args) -> int:
    trees = enumerate_with_connected_complement(args.n) if args.connected_complement else enumerate_free_trees(args.n)
    chunks = []
    for t in trees:
        code = canonical_code(t)
        chunks.append(code + "\n" if args.format == "codes" else f"# {code}\n{format_edge_list(t)}\n")
    _emit("".join(chunks), args.out)
    return 0


def cmd_extremal(args) -> int:
    if not 4 <= args.n <= EXHAUSTIVE_MAX:
        raise UsageError(f"--n must be in 4..{EXHAUSTIVE_MAX}")
    rows = extremal_table(args.stat, args.n, args.jobs)
    if args.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "canonical_code", "statistic", "value", "rank"])
        for rank, (_, code, value) in enumerate(rows, 1):
            w.writerow([args.n, code, args.stat, fmt_float(value, args.precision), rank])
        text = buf.getvalue()
    else:
        table = [
            {"rank": r, "code": code, "edges": [list(e) for e in t.edges()], "value": v}
            for r, (t, code, v) in enumerate(rows, 1)
        ]
        text = dumps(table, args.precision, indent=1) + "\n"
    _emit(text, args.out)
    return 0


def _report_document(reports, n_range) -> dict:
    summary = {"n_range": list(n_range), "holds": [], "fails": [], "informational": []}
    for r in reports:
        summary[r.verdict].append(r.id.value)
    return {"summary": summary, "reports": reports}


def cmd_verify(args) -> int:
    if not args.all and not args.id:
        raise UsageError("verify needs --all or at least one --id")
    limit = EXHAUSTIVE_MAX if args.extended else DEFAULT_N_MAX
    if not 4 <= args.n <= args.n_max <= limit:
        hint = "" if args.extended else f" (orders up to {EXHAUSTIVE_MAX} need --extended)"
        raise UsageError(f"need 4 <= --n <= --n-max <= {limit}{hint}")
    ids = list(TheoremId) if args.all else [TheoremId(i) for i in args.id]
    reports = [check(tid, args.n, args.n_max, args.jobs) for tid in ids]
    doc = _report_document(reports, (args.n, args.n_max))
    doc["reports"] = [r.to_dict(timings=args.timings) for r in reports]
    _emit(dumps(doc, args.precision, indent=1) + "\n", args.out)
    for r in reports:
        print(f"{r.id.value:22s} {r.verdict}", file=sys.stderr)
    return 1 if any(r.verdict == "fails" for r in reports) else 0


def cmd_table_check(args) -> int:
    report = appendix_table_crosscheck()
    _emit(dumps(report.to_dict(timings=args.timings), args.precision, indent=1) + "\n", args.out)
    return 0


# ---------------------------------------------------------------- parser


def _jobs_default() -> int:
    return int(os.environ.get("ECC_SPECTRA_JOBS", "1"))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=_precision, default=DEFAULT_PRECISION, help="decimal places (1..17)")
    common.add_argument("--out", help="write to this file instead of stdout")

    fam = argparse.ArgumentParser(add_help=False)
    fam.add_argument("--family", choices=FAMILIES, required=True)
    fam.add_argument("--n", type=int)
    fam.add_argument("--a", type=int)
    fam.add_argument("--b", type=int)
    fam.add_argument("--d", type=int)
    fam.add_argument("--seq", help="comma-separated Prüfer sequence")
    fam.add_argument("--edges", help="edge-list file ('-' for stdin)")
    fam.add_argument("--of", choices=("tree", "complement"), default="complement")
    fam.add_argument("--matrix", choices=tuple(MATRICES), default="eccentricity")

    parser = argparse.ArgumentParser(prog="eccspectra", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common, fam], help="spectrum of a tree or its complement")
    p.add_argument("--tol", type=float, default=DEFAULT_GROUP_TOL, help="multiplicity grouping tolerance")
    p.add_argument("--show-matrix", action="store_true")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("energy", parents=[common, fam], help="sum of absolute eigenvalues")
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("formula", parents=[common], help="evaluate a closed form")
    p.add_argument("name", choices=sorted(FORMULAS))
    for flag in ("n", "a", "b", "d", "s"):
        p.add_argument(f"--{flag}", type=int)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("enumerate", parents=[common], help="list free trees")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected-complement", action="store_true")
    p.add_argument("--format", choices=("edges", "codes"), default="edges")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("extremal", parents=[common], help="rank all non-star trees by a statistic")
    p.add_argument("--stat", choices=sorted(STATISTICS), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--csv", action="store_true")
    p.add_argument("--jobs", type=int, default=_jobs_default())
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("verify", parents=[common], help="exhaustive checks of the extremal claims")
    p.add_argument("--all", action="store_true")
    p.add_argument("--id", action="append", choices=[t.value for t in TheoremId])
    p.add_argument("--n", type=int, default=4, help="lowest order")
    p.add_argument("--n-max", type=int, default=DEFAULT_N_MAX, help="highest order")
    p.add_argument("--extended", action="store_true", help=f"allow orders up to {EXHAUSTIVE_MAX}")
    p.add_argument("--jobs", type=int, default=_jobs_default())
    p.add_argument("--timings", action="store_true", help="include wall times (output no longer reproducible)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("table-check", parents=[common], help="recompute the tabulated complement energies")
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_table_check)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
