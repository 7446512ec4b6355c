"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 resource limit.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

from . import suites
from .bruhat_graph import bruhat_graph
from .classification import load_matrix
from .cosets import (
    build_system,
    coatom_data,
    delta_upper_bound,
    describe,
    double_coset,
    project_and_fiber,
    xi_local_dim,
)
from .errors import CoxeterError, InvariantError, NotComparable, OrderMismatch, ResourceLimit
from .export import dumps, graph_to_dot, graph_to_json, hasse_to_dot, hasse_to_json
from .group import DEFAULT_CAP, Group, build_group
from .orders import bruhat_leq, interval, lower_mask
from .polynomials import (
    directional_poincare,
    eulerian4,
    eulerian_specializations,
    inout_poincare,
    poincare,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class UsageError(Exception):
    pass


# -- shared helpers ------------------------------------------------------


def load_group(args) -> Group:
    if args.matrix:
        spec = load_matrix(args.matrix)
    elif args.type is not None:
        spec = args.type
    else:
        raise UsageError("one of --type or --matrix is required")
    return build_group(spec, cap=args.cap)


def element(g: Group, text: str | None, what: str = "--w") -> int:
    if text is None:
        raise UsageError(f"{what} is required")
    return g.parse(text)


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def _table(rows) -> str:
    widths = [max(len(str(r[i])) for r in rows) for i in range(len(rows[0]))]
    return "".join(
        "  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in rows
    )


def _parse_value(text: str):
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot read value {text!r}") from exc


def parse_eval(text: str, variables) -> dict:
    """``2,2,2,2`` (positional), ``q=-1`` or ``t=2`` (a prefix sets ``t1..t4``)."""
    parts = [p for p in text.split(",") if p.strip()]
    if all("=" not in p for p in parts):
        if len(parts) != len(variables):
            raise UsageError(f"--eval needs {len(variables)} values for {', '.join(variables)}")
        return dict(zip(variables, map(_parse_value, parts)))
    point = {}
    for p in parts:
        if "=" not in p:
            raise UsageError(f"mixed positional and named values in {text!r}")
        name, value = (x.strip() for x in p.split("=", 1))
        targets = [v for v in variables if v == name] or [v for v in variables if v.startswith(name)]
        if not targets:
            raise UsageError(f"unknown variable {name!r}")
        for v in targets:
            point[v] = _parse_value(value)
    missing = [v for v in variables if v not in point]
    if missing:
        raise UsageError(f"--eval gives no value for {', '.join(missing)}")
    return point


def _eval_names(text: str) -> set[str]:
    return {p.split("=", 1)[0].strip() for p in text.split(",") if "=" in p}


# -- commands ------------------------------------------------------------


def cmd_group(args, g: Group) -> tuple[str, int]:
    summary = {
        "type": g.label,
        "rank": g.rank,
        "order": g.order,
        "reflections": len(g.reflections),
        "longest": g.format(g.longest),
        "longest_length": int(g.length[g.longest]),
    }
    gens = [
        {"generator": f"s{i + 1}", "m": list(g.matrix.m[i]), "element": g.format(g.gen(i))}
        for i in range(g.rank)
    ]
    if args.format == "json":
        return dumps({"kind": "group", **summary, "matrix": g.matrix.to_json(), "generators": gens}), 0
    if args.format == "csv":
        return _csv([["key", "value"], *summary.items()]), 0
    text = "".join(f"{k}: {v}\n" for k, v in summary.items())
    if gens:
        rows = [["generator", "element", "m(s, -)"]]
        rows += [[x["generator"], x["element"], " ".join(map(str, x["m"]))] for x in gens]
        text += "generators:\n" + _table(rows)
    return text, 0


def cmd_cosets(args, g: Group) -> tuple[str, int]:
    kind = args.kind
    system = build_system(g, kind, hasse_diagram=False, cap=args.node_cap)
    data: dict = {"kind": f"cosets-{kind}", "group": g.label, "count": len(system.nodes)}
    lines = [f"group: {g.label}", f"system: {kind}", f"count: {len(system.nodes)}"]
    rows = None

    if args.component is not None:
        w = g.parse(args.component)
        idx = system.components[w]
        dd = g.descent_data(w)
        header = f"component of {g.format(w)}: {len(idx)} nodes"
        if kind == "delta":
            xi = build_system(g, "xi", cap=args.node_cap)
            rows = [["x0", "x1", "M_L", "M_R", "size", "local_dim", "fiber", "fiber_dim"]]
            entries = []
            for i in idx:
                X = system.nodes[i]
                f = project_and_fiber(g, xi, system, X)
                c = coatom_data(g, X, w)
                entries.append({**describe(g, X), "local_dim": c.local_dim,
                                "fiber_size": len(f.fiber), "fiber_dim": f.dimension})
                rows.append([g.format(X.x0), g.format(X.x1), g.format_subset(X.M_L),
                             g.format_subset(X.M_R), len(X), c.local_dim, len(f.fiber),
                             f.dimension])
            header += f", delta = {len(idx)}, bound 2^{dd.d_tilde} = {delta_upper_bound(g, w)}"
        elif kind == "xi":
            rows = [["I", "x0", "x1", "J", "local_dim"]]
            entries = []
            for i in idx:
                F = system.nodes[i]
                entries.append({"I": g.format_subset(F.I), "J": g.format_subset(F.J),
                                **describe(g, F.coset), "local_dim": xi_local_dim(g, F)})
                rows.append([g.format_subset(F.I), g.format(F.coset.x0), g.format(F.coset.x1),
                             g.format_subset(F.J), xi_local_dim(g, F)])
        else:
            rows = [["x0", "x1", "J", "size"]]
            entries = []
            for i in idx:
                X = system.nodes[i]
                entries.append(describe(g, X))
                rows.append([g.format(X.x0), g.format(X.x1), g.format_subset(X.M_R), len(X)])
        data["component"] = {"w": g.format(w), "size": len(idx), "nodes": entries}
        lines.append(header)
    elif args.table:
        rows = [["w", "d", "d_tilde", "count", "bound"]]
        for w in range(g.order):
            dd = g.descent_data(w)
            rows.append([g.format(w), dd.d, dd.d_tilde, len(system.components[w]), 2**dd.d_tilde])
        data["table"] = [dict(zip(rows[0], r)) for r in rows[1:]]
        data["bound_total"] = sum(r[4] for r in rows[1:])
        lines.append(f"sum of 2^d_tilde: {data['bound_total']}")
    elif args.list:
        rows = [["x0", "x1", "I", "J"]] if kind == "xi" else [["x0", "x1", "M_L", "M_R", "size"]]
        for node in system.nodes:
            if kind == "xi":
                rows.append([g.format(node.coset.x0), g.format(node.coset.x1),
                             g.format_subset(node.I), g.format_subset(node.J)])
            else:
                rows.append([g.format(node.x0), g.format(node.x1), g.format_subset(node.M_L),
                             g.format_subset(node.M_R), len(node)])
        data["nodes"] = [dict(zip(rows[0], r)) for r in rows[1:]]

    if args.format == "json":
        return dumps(data), 0
    if args.format == "csv":
        return _csv(rows if rows else [["count"], [len(system.nodes)]]), 0
    text = "\n".join(lines) + "\n"
    if rows:
        text += _table(rows)
    return text, 0


def cmd_verify(args, g: Group) -> tuple[str, int]:
    reports = suites.run(g, args.suite, jobs=args.jobs)
    ok = all(r.passed for r in reports)
    if args.format == "json":
        body = dumps({"kind": "verify", "group": g.label, "passed": ok,
                      "reports": [r.to_dict(timing=args.timing) for r in reports]})
    elif args.format == "csv":
        rows = [["suite", "checks", "failures", "passed"]]
        rows += [[r.suite, r.checks, r.failure_count, r.passed] for r in reports]
        body = _csv(rows)
    else:
        out = [f"group: {g.label}"]
        for r in reports:
            line = r.summary()
            if args.timing and r.wall_time is not None:
                line += f" [{r.wall_time:.2f}s]"
            out.append(line)
            for k, v in r.stats.items():
                out.append(f"  {k}: {json.dumps(v, ensure_ascii=False)}")
            for wit in r.failures:
                out.append(f"  witness: {json.dumps(wit, ensure_ascii=False)}")
        body = "\n".join(out) + "\n"
    return body, EXIT_OK if ok else EXIT_FAIL


def cmd_poly(args, g: Group) -> tuple[str, int]:
    which = args.which
    data: dict = {"kind": f"poly-{which}", "group": g.label}
    lines = []
    evaluated = None
    if which == "eulerian4":
        a = eulerian4(g)
        data["poly"] = a.to_json()
        lines.append(f"A_W = {a}")
        specs = eulerian_specializations(g, a)
        data["specializations"] = {k: p.to_json() for k, p in specs.items()}
        lines += [f"{k}: {p}" for k, p in specs.items()]
        target = a
    else:
        w = element(g, args.w)
        data["w"] = g.format(w)
        if which == "poincare":
            p = poincare(g, w)
            data.update(poly=p.poly.to_json(), average=str(p.average), palindromic=p.palindromic)
            lines += [f"P_w = {p.poly}", f"average: {p.average}", f"palindromic: {p.palindromic}"]
            target = p.poly
        elif which == "directional":
            kinds = [args.kind] if args.kind else ["L", "R", "C"]
            data["polys"] = {}
            for k in kinds:
                p = directional_poincare(g, w, k)
                data["polys"][k] = p.to_json()
                lines.append(f"P^{k} = {p}")
            target = directional_poincare(g, w, kinds[0])
        else:
            io_ = inout_poincare(g, w)
            data.update(poly=io_.poly.to_json(), out_poly=io_.out_poly.to_json(),
                        out_at_minus_one=io_.out_at_minus_one)
            lines += [f"P^in-out = {io_.poly}", f"P^out = {io_.out_poly}",
                      f"P^out(-1) = {io_.out_at_minus_one}"]
            target = io_.poly
            if args.eval and _eval_names(args.eval) == {"q"}:
                target = io_.out_poly
    if args.eval:
        evaluated = target.evaluate(**parse_eval(args.eval, target.variables))
        data["eval"] = {"at": args.eval, "value": str(evaluated)}
        lines.append(f"value at {args.eval}: {evaluated}")
    if args.format == "json":
        return dumps(data), 0
    if args.format == "csv":
        rows = [["exponents", "coefficient"]]
        rows += [[" ".join(map(str, e)), c] for e, c in target.sorted_terms()]
        return _csv(rows), 0
    return "\n".join(lines) + "\n", 0


def _vertex_set(g: Group, spec: str) -> list[int]:
    tokens = spec.split()
    if not tokens:
        raise UsageError("empty vertex spec")
    head = tokens[0]
    if head == "all" and len(tokens) == 1:
        return list(range(g.order))
    if head == "interval" and len(tokens) == 3:
        u, w = g.parse(tokens[1]), g.parse(tokens[2])
        if not bruhat_leq(g, u, w):
            raise NotComparable(f"{tokens[1]} is not below {tokens[2]}")
        return list(interval(g, u, w).members)
    if head == "lower" and len(tokens) == 2:
        return [int(v) for v in lower_mask(g, g.parse(tokens[1])).nonzero()[0]]
    if head == "coset" and len(tokens) == 4:
        I, x, J = g.parse_subset(tokens[1]), g.parse(tokens[2]), g.parse_subset(tokens[3])
        return list(double_coset(g, I, x, J).members)
    if head == "element" and len(tokens) == 2:
        return [g.parse(tokens[1])]
    raise UsageError(f"cannot read vertex spec {spec!r}")


def cmd_export(args, g: Group) -> tuple[str, int]:
    fmt = args.format if args.format in ("dot", "json") else "dot"
    if args.object == "graph":
        graph = bruhat_graph(g, _vertex_set(g, args.vertices), short_only=args.short_only)
        return (graph_to_dot(g, graph) if fmt == "dot" else graph_to_json(g, graph)), 0
    system = build_system(g, args.system, cap=args.node_cap)
    nodes = None
    if args.component is not None:
        nodes = system.components[g.parse(args.component)]
    text = hasse_to_dot(g, system, nodes) if fmt == "dot" else hasse_to_json(g, system, nodes)
    return text, 0


# -- parser --------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--type", help="type label, e.g. A3, B3, I2(7), A1xA2")
    src.add_argument("--matrix", help='JSON file {"rank": n, "m": [[...]]}')
    common.add_argument("--format", choices=["text", "json", "csv", "dot"], default=None)
    common.add_argument("--out", help="write output to this file")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="maximum group order")
    common.add_argument("--node-cap", type=int, default=500_000, help="maximum system size")
    common.add_argument("--jobs", type=int, default=None, help="worker processes")
    common.add_argument("--timing", action="store_true", help="include wall time")

    parser = argparse.ArgumentParser(
        prog="coxcosets", description="Finite Coxeter groups and parabolic double cosets."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("group", parents=[common], help="group summary")

    p = sub.add_parser("cosets", parents=[common], help="enumerate Delta, Xi or Sigma")
    p.add_argument("kind", choices=["delta", "xi", "sigma"])
    p.add_argument("--component", help="restrict to the component of this element")
    p.add_argument("--table", action="store_true", help="per-element component sizes")
    p.add_argument("--list", action="store_true", help="list every node")

    p = sub.add_parser("verify", parents=[common], help="run an exhaustive suite")
    p.add_argument("suite", choices=[*suites.SUITES, "all"])

    p = sub.add_parser("poly", parents=[common], help="polynomials")
    p.add_argument("which", choices=["poincare", "eulerian4", "directional", "inout"])
    p.add_argument("--w", help="element (one-line for type A, or s2.s1.s3)")
    p.add_argument("--kind", choices=["L", "R", "C"], help="directional kind")
    p.add_argument("--eval", help="values: 2,2,2,2 or q=-1 or t=2")

    p = sub.add_parser("export", parents=[common], help="DOT or JSON export")
    p.add_argument("object", choices=["graph", "hasse"])
    p.add_argument("--vertices", default="all",
                   help="'all', 'interval u w', 'lower w', 'coset I x J' or 'element w'")
    p.add_argument("--short-only", action="store_true", help="Hasse edges only")
    p.add_argument("--system", choices=["delta", "xi", "sigma"], default="delta")
    p.add_argument("--component", help="restrict a Hasse export to one component")
    return parser


COMMANDS = {
    "group": cmd_group,
    "cosets": cmd_cosets,
    "verify": cmd_verify,
    "poly": cmd_poly,
    "export": cmd_export,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = "dot" if args.command == "export" else "text"
    start = time.perf_counter()
    try:
        g = load_group(args)
        text, code = COMMANDS[args.command](args, g)
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (InvariantError, OrderMismatch) as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, CoxeterError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.timing and args.format == "text" and args.command != "verify":
        text += f"wall time: {time.perf_counter() - start:.3f}s\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
