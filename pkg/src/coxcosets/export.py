"""DOT and JSON renderings of Bruhat graphs and coset-system Hasse diagrams.

Output is sorted throughout so identical inputs give byte-identical text.
"""

from __future__ import annotations

import json

from .bruhat_graph import BruhatGraph, degree_profile
from .cosets import CosetSystem, MarkedCoset, describe
from .group import Group

SCHEMA = "coxeter-cosets/1"


def dumps(data: dict) -> str:
    return json.dumps({"schema": SCHEMA, **data}, indent=2, sort_keys=False, ensure_ascii=False) + "\n"


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def graph_to_dot(g: Group, graph: BruhatGraph, name: str = "bruhat") -> str:
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for v in graph.vertices:
        lines.append(f"  n{v} [label={_quote(g.format(v))}];")
    for u, v, short in graph.edges:
        style = "solid" if short else "dashed"
        lines.append(f"  n{u} -> n{v} [style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_json(g: Group, graph: BruhatGraph) -> str:
    prof = degree_profile(graph)
    return dumps(
        {
            "kind": "bruhat-graph",
            "group": g.label,
            "vertices": [
                {
                    "id": v,
                    "name": g.format(v),
                    "length": int(g.length[v]),
                    "in": prof.in_(v),
                    "out": prof.out(v),
                }
                for v in graph.vertices
            ],
            "edges": [{"from": u, "to": v, "short": short} for u, v, short in graph.edges],
        }
    )


def _node_label(g: Group, node) -> str:
    if isinstance(node, MarkedCoset):
        X = node.coset
        return (
            f"({g.format_subset(node.I)}, [{g.format(X.x0)},{g.format(X.x1)}], "
            f"{g.format_subset(node.J)})"
        )
    return f"[{g.format(node.x0)},{g.format(node.x1)}]"


def _node_json(g: Group, node, i: int) -> dict:
    if isinstance(node, MarkedCoset):
        out = {"id": i, "I": sorted(s + 1 for s in node.I), "J": sorted(s + 1 for s in node.J)}
        out.update(describe(g, node.coset))
        return out
    return {"id": i, **describe(g, node)}


def hasse_to_dot(g: Group, system: CosetSystem, nodes=None) -> str:
    keep = range(len(system.nodes)) if nodes is None else sorted(nodes)
    keep_set = set(keep)
    lines = [f"digraph {system.kind.value} {{", "  rankdir=BT;"]
    for i in keep:
        lines.append(f"  c{i} [shape=box, label={_quote(_node_label(g, system.nodes[i]))}];")
    for i in keep:
        for j in system.up[i]:
            if j in keep_set:
                lines.append(f"  c{i} -> c{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def hasse_to_json(g: Group, system: CosetSystem, nodes=None) -> str:
    keep = range(len(system.nodes)) if nodes is None else sorted(nodes)
    keep_set = set(keep)
    return dumps(
        {
            "kind": f"hasse-{system.kind.value}",
            "group": g.label,
            "nodes": [_node_json(g, system.nodes[i], i) for i in keep],
            "covers": [[i, j] for i in keep for j in system.up[i] if j in keep_set],
        }
    )
