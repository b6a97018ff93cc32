"""Command-line interface.

Examples
--------
  quospec spectrum petersen.txt
  quospec local-spectrum hb1.txt --vertex 4 --format json
  quospec quotient c4.txt --partition cells.txt
  quospec crossed hb1.txt --vertex 0
  quospec reconstruct petersen.txt --jobs 4
  quospec check p3.txt --walk-regular
  quospec families cycle:5 > c5.txt

Exit codes: 0 ok / verdict true, 1 verdict false, 2 input error,
3 numerical failure, 4 precondition violation.
"""

import argparse
import json
import sys

from . import families
from .errors import (
    DisconnectedGraphError,
    GraphFormatError,
    NotEquitableError,
    NumericalError,
    WalkCountOverflowError,
)
from .graph import format_edge_list, parse_edge_list, parse_graph6
from .localspec import (
    crossed_table,
    is_walk_regular,
    local_spectrum,
    oracle_spectrum,
    reconstruct_spectrum,
    vertex_quotient,
)
from .partition import find_witness, parse_partition, quotient_matrix
from .spectra import DEFAULT_TOL, quotient_eigen

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_NUMERIC, EXIT_PRECONDITION = range(5)

# Magnitudes below this are rounding noise at the default tolerances.
_ZERO_SNAP = 1e-12


class InputError(Exception):
    pass


def _num(x):
    x = float(x)
    if abs(x) < _ZERO_SNAP:
        return 0.0
    return float(f"{x:.12g}")


def _fmt(x):
    return f"{_num(x):.12g}"


def _read_graph(path):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    if path.endswith(".g6") or text.lstrip().startswith(">>graph6<<"):
        return parse_graph6(text)
    return parse_edge_list(text)


def _read_partition(path, n):
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_partition(fh.read(), n)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _check_vertex(g, u):
    if not 0 <= u < g.n:
        raise InputError(f"vertex {u} out of range for a graph on {g.n} vertices")


def _spectrum_payload(spec):
    return [{"value": _num(v), "multiplicity": int(m)} for v, m in spec]


def _quotient_payload(q):
    cells = [list(c) for c in q.partition.cells] if q.partition else None
    return {"cells": cells, "sizes": list(q.cell_sizes), "matrix": q.matrix.tolist()}


def _base_report(args, g):
    return {"command": args.command, "graph": g.digest(), "tolerance": args.tol}


def cmd_spectrum(args, g):
    report = _base_report(args, g)
    report["spectrum"] = _spectrum_payload(oracle_spectrum(g, args.tol))
    return report, EXIT_OK


def cmd_reconstruct(args, g):
    report = _base_report(args, g)
    spec = reconstruct_spectrum(g, seed=args.seed_partition, tol=args.tol, jobs=args.jobs)
    report["spectrum"] = _spectrum_payload(spec)
    return report, EXIT_OK


def cmd_local_spectrum(args, g):
    _check_vertex(g, args.vertex)
    ls = local_spectrum(g, args.vertex, seed=args.seed_partition, tol=args.tol)
    report = _base_report(args, g)
    report["vertex"] = args.vertex
    report["quotient"] = _quotient_payload(ls.quotient)
    report["local_spectrum"] = [
        {"value": _num(v), "multiplicity": _num(m)} for v, m in ls
    ]
    return report, EXIT_OK


def cmd_quotient(args, g):
    if args.partition is not None:
        q = quotient_matrix(g, _read_partition(args.partition, g.n))
    else:
        _check_vertex(g, args.vertex)
        q = vertex_quotient(g, args.vertex, args.seed_partition)
    report = _base_report(args, g)
    report["quotient"] = _quotient_payload(q)
    report["spectrum"] = _spectrum_payload(quotient_eigen(q, args.tol).spectrum)
    return report, EXIT_OK


def cmd_crossed(args, g):
    _check_vertex(g, args.vertex)
    table = crossed_table(
        g, args.vertex, seed=args.seed_partition, method=args.method, tol=args.tol
    )
    report = _base_report(args, g)
    report["vertex"] = args.vertex
    report["quotient"] = _quotient_payload(vertex_quotient(g, args.vertex, args.seed_partition))
    report["crossed"] = {
        "eigenvalues": [_num(t) for t in table.eigenvalues],
        "cells": list(table.cell_sizes),
        "table": [[_num(x) for x in row] for row in table.table],
        "sums": [_num(x) for x in table.column_sums],
    }
    return report, EXIT_OK


def cmd_check(args, g):
    report = _base_report(args, g)
    if args.walk_regular:
        verdict = is_walk_regular(g, args.tol)
        report["check"] = {"property": "walk-regular", "verdict": verdict}
    else:
        pi = _read_partition(args.equitable, g.n)
        witness = find_witness(g, pi)
        verdict = witness is None
        report["check"] = {
            "property": "equitable",
            "verdict": verdict,
            "witness": None if verdict else witness._asdict(),
        }
    return report, EXIT_OK if verdict else EXIT_FALSE


def _render_table(report):
    lines = [f"# {report['command']}  graph={report['graph'][:16]}  tol={report['tolerance']:g}"]
    if "vertex" in report:
        lines.append(f"vertex: {report['vertex']}")
    if "quotient" in report:
        q = report["quotient"]
        if q["cells"] is not None:
            lines.append("cells: " + " | ".join(",".join(map(str, c)) for c in q["cells"]))
        lines.append("sizes: " + " ".join(map(str, q["sizes"])))
        lines.append("quotient:")
        lines.extend("  " + " ".join(f"{x:>4d}" for x in row) for row in q["matrix"])
    if "spectrum" in report:
        lines.append("eigenvalue            multiplicity")
        lines.extend(f"{_fmt(e['value']):>20}  {e['multiplicity']}" for e in report["spectrum"])
    if "local_spectrum" in report:
        lines.append("eigenvalue            local multiplicity")
        lines.extend(
            f"{_fmt(e['value']):>20}  {_fmt(e['multiplicity'])}" for e in report["local_spectrum"]
        )
    if "crossed" in report:
        c = report["crossed"]
        width = 20
        lines.append(f"{'theta / cell':>{width}}" + "".join(f"{j:>{width}}" for j in range(len(c["cells"]))))
        lines.append(f"{'|V_j|':>{width}}" + "".join(f"{s:>{width}}" for s in c["cells"]))
        for theta, row in zip(c["eigenvalues"], c["table"]):
            lines.append(f"{_fmt(theta):>{width}}" + "".join(f"{_fmt(x):>{width}}" for x in row))
        lines.append(f"{'sum':>{width}}" + "".join(f"{_fmt(x):>{width}}" for x in c["sums"]))
    if "check" in report:
        chk = report["check"]
        lines.append(f"{chk['property']}: {str(chk['verdict']).lower()}")
        if chk.get("witness"):
            w = chk["witness"]
            lines.append(
                f"witness: vertices {w['u']} and {w['u_other']} of cell {w['i']} have "
                f"{w['count_u']} and {w['count_other']} neighbours in cell {w['j']}"
            )
    return "\n".join(lines) + "\n"


def render(report, fmt):
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2) + "\n"
    return _render_table(report)


def cmd_families(args):
    if args.name is None:
        for name, (_, arity) in sorted(families.FIXTURES.items()):
            sig = name if arity == 0 else f"{name}:" + ",".join(["N"] * arity)
            sys.stdout.write(sig + "\n")
        return EXIT_OK
    try:
        g = families.fixture(args.name)
    except (KeyError, ValueError) as exc:
        raise InputError(str(exc)) from None
    sys.stdout.write(f"# {args.name}\n" + format_edge_list(g))
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=DEFAULT_TOL, help="eigenvalue clustering tolerance")
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument(
        "--seed-partition",
        choices=("refined", "distance"),
        default="refined",
        help="partition hung from a vertex: coarsest equitable refinement or distance partition",
    )

    parser = argparse.ArgumentParser(
        prog="quospec", description="Graph spectra from quotient matrices of equitable partitions."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="spectrum of A by direct eigendecomposition")
    p.add_argument("graph")

    p = sub.add_parser("local-spectrum", parents=[common], help="local spectrum of one vertex")
    p.add_argument("graph")
    p.add_argument("--vertex", type=int, required=True)

    p = sub.add_parser("quotient", parents=[common], help="quotient matrix and its eigenvalues")
    p.add_argument("graph")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--vertex", type=int)
    which.add_argument("--partition", metavar="FILE")

    p = sub.add_parser("crossed", parents=[common], help="crossed local multiplicity table")
    p.add_argument("graph")
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--method", choices=("lagrange", "idempotent"), default="lagrange")

    p = sub.add_parser("reconstruct", parents=[common], help="spectrum from the union of local spectra")
    p.add_argument("graph")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("check", parents=[common], help="walk-regularity or equitability verdict")
    p.add_argument("graph")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--walk-regular", action="store_true")
    which.add_argument("--equitable", metavar="FILE")

    p = sub.add_parser("families", help="list fixtures or emit one as an edge list")
    p.add_argument("name", nargs="?", help="fixture such as 'petersen' or 'cycle:5'")
    return parser


COMMANDS = {
    "spectrum": cmd_spectrum,
    "local-spectrum": cmd_local_spectrum,
    "quotient": cmd_quotient,
    "crossed": cmd_crossed,
    "reconstruct": cmd_reconstruct,
    "check": cmd_check,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "families":
            return cmd_families(args)
        g = _read_graph(args.graph)
        report, code = COMMANDS[args.command](args, g)
    except (InputError, GraphFormatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (NumericalError, WalkCountOverflowError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (NotEquitableError, DisconnectedGraphError) as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    sys.stdout.write(render(report, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
