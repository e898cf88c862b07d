"""Command-line front end: build | verify | spectrum | isospec.

Exit codes: 0 holds / isospectral, 1 not isospectral, 2 identity fails,
3 precondition violated, 4 usage error, 5 input/output or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

import numpy as np

from . import isospec, named, theorems, walks
from .errors import (ComplexInput, IrrationalWeight, MissingWeight, InvalidProbability,
                     ParseError, PreconditionViolation, QWSpectraError)
from .formats import read_graph_file
from .graph import Graph
from .matrix import ExactMatrix
from .scalars import format_gaussian, parse_gaussian, parse_rational

EXIT_ISOSPECTRAL, EXIT_NOT_ISOSPECTRAL = 0, 1
EXIT_PRECONDITION, EXIT_USAGE, EXIT_IO = 3, 4, 5

VERTEX_KINDS = ("adjacency", "degree", "S", "D", "T", "Sp")
ARC_KINDS = ("U", "grover", "szegedy", "coined", "P", "B", "edge-matrix",
             "u-plus", "u2-plus", "u3-plus")
BUILD_KINDS = VERTEX_KINDS + ("coboundary",) + ARC_KINDS
SPECTRUM_KINDS = ("adjacency", "grover", "u-plus", "u2-plus")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- input ---------------------------------------------------------------------

def load_graphs(spec: str, fmt: str | None = None) -> list[tuple[str, Graph]]:
    """``name:petersen`` or a file path; graph6 files may hold several graphs."""
    if spec.startswith("name:"):
        try:
            return [(spec, named.by_name(spec[5:]))]
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
    graphs = read_graph_file(spec, fmt)
    if not graphs:
        raise ParseError(f"{spec}: no graphs found")
    if len(graphs) == 1:
        return [(spec, graphs[0])]
    return [(f"{spec}:{i + 1}", g) for i, g in enumerate(graphs)]


def load_graph(spec: str, fmt: str | None = None) -> Graph:
    graphs = load_graphs(spec, fmt)
    if len(graphs) != 1:
        raise UsageError(f"{spec} holds {len(graphs)} graphs; this command takes one")
    return graphs[0][1]


def _float_value(x) -> complex:
    if isinstance(x, bool):
        raise ParseError(f"not a number: {x!r}")
    if isinstance(x, (int, float)):
        return complex(x)
    if isinstance(x, dict):
        return complex(_float_value(x.get("re", 0)).real, _float_value(x.get("im", 0)).real)
    if isinstance(x, str):
        try:
            return complex(parse_gaussian(x))
        except ParseError:
            try:
                return complex(float(x))
            except ValueError:
                raise ParseError(f"not a number: {x!r}") from None
    raise ParseError(f"not a number: {x!r}")


def load_values(path: str, mode: str) -> list:
    data = json.loads(Path(path).read_text())
    if not isinstance(data, list):
        raise ParseError(f"{path}: expected a JSON array indexed by arc")
    if mode == "exact":
        try:
            return [parse_gaussian(x) for x in data]
        except (ParseError, TypeError) as exc:
            raise ParseError(f"{path}: {exc} (exact mode needs 'p/q' strings or integers)") from None
    return [_float_value(x) for x in data]


def parse_s(text: str, mode: str):
    try:
        return parse_rational(text)
    except ParseError:
        if mode == "float":
            try:
                return float(text)
            except ValueError:
                pass
        raise UsageError(f"--s {text!r}: expected a rational 'p/q'"
                         + ("" if mode == "float" else " (floats need --mode float)")) from None


def _weights(args, g):
    return load_values(args.weights, args.mode) if args.weights else walks.unit_weights(g)


def _prob(args, g, required: bool):
    if args.prob:
        vals = load_values(args.prob, args.mode)
        if args.mode == "exact":
            for v in vals:
                if not v.is_real:
                    raise InvalidProbability("probabilities must be real")
            return [v.re for v in vals]
        return [v.real for v in vals]
    if required:
        raise UsageError("this matrix needs --prob FILE")
    return walks.simple_walk(g)


# -- output --------------------------------------------------------------------

def _float_json(x: complex):
    x = complex(x)
    return x.real if x.imag == 0 else [x.real, x.imag]


def _matrix_rows(m, mode: str) -> list[list]:
    if isinstance(m, ExactMatrix):
        if mode == "exact":
            return [[format_gaussian(v) for v in row] for row in m.tolist()]
        m = m.to_float()
    return [[_float_json(v) for v in row] for row in np.asarray(m)]


def _csv_cell(v) -> str:
    if isinstance(v, dict):
        return f"{v['re']}{'' if v['im'].startswith('-') else '+'}{v['im']}i"
    if isinstance(v, list):
        return repr(complex(v[0], v[1]))
    return str(v)


def arc_legend(g: Graph) -> list[dict]:
    return [{"arc": a, "edge": a % g.m if g.m else None, "origin": g.origin(a),
             "terminus": g.terminus(a), "inverse": g.inverse(a)} for a in range(g.n_arcs)]


def emit(payload, args, csv_rows: list[list] | None = None):
    if args.emit == "csv" and csv_rows is not None:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for row in csv_rows:
            writer.writerow([_csv_cell(v) for v in row])
        text = buf.getvalue()
    else:
        text = json.dumps(payload, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


# -- commands ------------------------------------------------------------------

def build_matrix(g: Graph, kind: str, args):
    mode = args.mode
    if kind in ("szegedy", "T", "Sp") and not args.prob:
        raise UsageError(f"--matrix {kind} needs --prob FILE")
    if kind in ("u-plus", "u2-plus", "u3-plus") and mode != "exact":
        raise UsageError("positive supports are built in exact mode only")
    table = {
        "adjacency": lambda: walks.adjacency(g, mode),
        "degree": lambda: walks.degree_matrix(g, mode),
        "S": lambda: walks.matrix_S(g, _weights(args, g), mode),
        "D": lambda: walks.matrix_D(g, _weights(args, g), mode),
        "T": lambda: walks.transition_T(g, _prob(args, g, True), mode),
        "Sp": lambda: walks.matrix_Sp(g, _prob(args, g, True), mode),
        "coboundary": lambda: walks.coboundary_Aw(g, _weights(args, g), mode),
        "U": lambda: walks.matrix_U(g, _weights(args, g), parse_s(args.s, mode), mode),
        "grover": lambda: walks.grover(g, mode),
        "szegedy": lambda: walks.szegedy(g, _prob(args, g, True), mode),
        "coined": lambda: walks.coined_form(g, _weights(args, g), mode),
        "P": lambda: walks.shift_P(g, mode),
        "B": lambda: walks.edge_matrix_B(g, mode),
        "edge-matrix": lambda: walks.edge_matrix_B(g, mode) - walks.shift_P(g, mode),
        "u-plus": lambda: walks.u_plus(g),
        "u2-plus": lambda: walks.u2_plus(g),
        "u3-plus": lambda: walks.u3_plus(g),
    }
    return table[kind]()


def cmd_build(args) -> int:
    g = load_graph(args.graph, args.format)
    m = build_matrix(g, args.matrix, args)
    rows = _matrix_rows(m, args.mode)
    payload = {"matrix": args.matrix, "mode": args.mode, "graph": g.summary(),
               "shape": [len(rows), len(rows[0]) if rows else 0], "entries": rows}
    if args.matrix in ARC_KINDS or args.matrix == "coboundary":
        payload["arcs"] = arc_legend(g)
    emit(payload, args, rows)
    return 0


def cmd_verify(args) -> int:
    g = load_graph(args.graph, args.format)
    tid = args.theorem
    if tid == "thm1":
        report = theorems.verify_theorem1(g, _weights(args, g), parse_s(args.s, args.mode),
                                          args.mode, args.tol)
    elif tid == "cor21":
        report = theorems.verify_cor21(g, _prob(args, g, False), args.mode, args.tol)
    elif tid == "cor22":
        report = theorems.verify_cor22(g, _prob(args, g, False), args.mode, args.tol)
    elif tid == "cor23":
        report = theorems.verify_cor23(g)
    elif tid == "thm3":
        report = theorems.verify_theorem3(g)
    elif tid == "eq24":
        report = theorems.verify_eq24(g)
    elif tid == "thm2":
        report = theorems.verify_theorem2(g)
    else:
        report = theorems.backtracking_decomposition(g)
    payload = report.to_json()
    emit(payload, args, [["theorem", "verdict", "elapsed_ms"],
                         [report.theorem, report.verdict, f"{report.elapsed_ms:.3f}"]])
    return report.exit_code


def cmd_spectrum(args) -> int:
    g = load_graph(args.graph, args.format)
    if args.matrix == "adjacency":
        values = theorems.spectrum_adjacency(g, tol=args.tol)
        payload = {"matrix": "adjacency", "graph": g.summary(), "eigenvalues": values}
        emit(payload, args, [[v] for v in values])
        return 0
    fn = {"grover": theorems.spectrum_grover, "u-plus": theorems.spectrum_u_plus,
          "u2-plus": theorems.spectrum_u2_plus}[args.matrix]
    values, report = fn(g)
    pairs = [[z.real, z.imag] for z in values]
    payload = {"matrix": args.matrix, "graph": g.summary(), "eigenvalues": pairs,
               "check": report.to_json()}
    emit(payload, args, [["re", "im"]] + pairs)
    return 0 if report.holds else report.exit_code


def cmd_isospec(args) -> int:
    specs = list(args.graphs) + list(args.graph or [])
    entries: list[tuple[str, Graph]] = []
    for spec in specs:
        entries.extend(load_graphs(spec, args.format))
    if len(entries) < 2:
        raise UsageError("isospec needs at least two graphs")
    ids = [gid for gid, _ in entries]
    graphs = [g for _, g in entries]
    report = isospec.batch_compare(graphs, args.matrix, ids, include_fingerprints=args.fingerprints)
    all_same = not report["excluded"] and len(report["classes"]) == 1
    report["isospectral"] = all_same
    if len(graphs) == 2 and not report["excluded"] and not all_same:
        fa = isospec.fingerprint(graphs[0], args.matrix)
        fb = isospec.fingerprint(graphs[1], args.matrix)
        report["witness"] = isospec.fingerprint_witness(fa, fb)
    emit(report, args, [[gid, i] for i, cls in enumerate(report["classes"]) for gid in cls])
    return EXIT_ISOSPECTRAL if all_same else EXIT_NOT_ISOSPECTRAL


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qwspectra", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, graph_required=True):
        if graph_required:
            p.add_argument("--graph", required=True,
                           help="edge-list or graph6 file, or name:<petersen|k4|...>")
        p.add_argument("--format", choices=("edge-list", "graph6"),
                       help="override format detection by extension")
        p.add_argument("--mode", choices=("exact", "float"), default="exact")
        p.add_argument("--tol", type=float, default=1e-9)
        p.add_argument("--out", help="write output here instead of stdout")
        p.add_argument("--emit", choices=("json", "csv"), default="json")

    p = sub.add_parser("build", help="construct a matrix")
    common(p)
    p.add_argument("--matrix", required=True, choices=BUILD_KINDS)
    p.add_argument("--weights", help="JSON array of 2m Gaussian-rational arc weights")
    p.add_argument("--prob", help="JSON array of 2m rational arc probabilities")
    p.add_argument("--s", default="2", help="rational parameter s (default 2)")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("verify", help="check one identity on a graph")
    p.add_argument("theorem", choices=theorems.THEOREM_IDS)
    common(p)
    p.add_argument("--weights")
    p.add_argument("--prob")
    p.add_argument("--s", default="2")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("spectrum", help="closed-form spectrum with exact residual check")
    common(p)
    p.add_argument("--matrix", required=True, choices=SPECTRUM_KINDS)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("isospec", help="compare graphs by exact characteristic polynomial")
    common(p, graph_required=False)
    p.add_argument("graphs", nargs="*", help="graph files or name:<...>")
    p.add_argument("--graph", action="append", help="additional graph (repeatable)")
    p.add_argument("--matrix", required=True, choices=isospec.KINDS)
    p.add_argument("--fingerprints", action="store_true", help="include coefficient vectors")
    p.set_defaults(func=cmd_isospec)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qwspectra: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionViolation as exc:
        print(f"qwspectra: precondition violated ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ParseError, OSError, json.JSONDecodeError) as exc:
        print(f"qwspectra: input error ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_IO
    except (IrrationalWeight, MissingWeight, InvalidProbability, ComplexInput, TypeError) as exc:
        print(f"qwspectra: invalid input ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QWSpectraError as exc:
        print(f"qwspectra: error ({type(exc).__name__}): {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
