"""Exhaustive verification suites over a whole group."""

from __future__ import annotations

import time

import numpy as np

from . import bruhat_graph as bg
from .cosets import build_system, project_and_fiber, structural_checks, xi_local_dim
from .group import Group
from .orders import bruhat_leq, lifting_check, lower_mask
from .parallel import map_items
from .report import Report

SUITES = (
    "regularity",
    "degree-invariance",
    "out-eulerian",
    "structure",
    "deodhar",
    "lifting",
    "carrell-peterson",
)


def _merged(name: str, parts) -> Report:
    rep = Report(name)
    for part in parts:
        rep.merge(part)
    return rep


def regularity(g: Group, jobs: int | None = 1) -> Report:
    delta = build_system(g, "delta", hasse_diagram=False)
    rep = _merged("regularity", map_items(lambda g, X: bg.verify_coset_regularity(g, X), g,
                                          delta.nodes, jobs))
    rep.stats["cosets"] = len(delta.nodes)
    return rep


def degree_invariance(g: Group, jobs: int | None = 1) -> Report:
    rep = _merged("degree-invariance", map_items(bg.verify_degree_invariance, g,
                                                 range(g.order), jobs))
    rep.stats["elements"] = g.order
    return rep


def _out_eulerian_for(g: Group, w: int) -> Report:
    rep = Report("out-eulerian")
    noncritical = critical = 0
    for u in np.flatnonzero(lower_mask(g, w)):
        u = int(u)
        if u != w:
            rep.check(bg.length_eulerian_sum(g, u, w) == 0, check="length-sum",
                      u=g.format(u), w=g.format(w))
        if bg.is_critical(g, u, w):
            critical += 1
            continue
        noncritical += 1
        s = bg.out_eulerian_sum(g, u, w)
        rep.check(s == 0, check="out-sum", u=g.format(u), w=g.format(w), total=s)
    rep.stats.update(noncritical=noncritical, critical=critical)
    return rep


def out_eulerian(g: Group, jobs: int | None = 1) -> Report:
    return _merged("out-eulerian", map_items(_out_eulerian_for, g, range(g.order), jobs))


def deodhar(g: Group, jobs: int | None = 1) -> Report:
    return _merged("deodhar", map_items(bg.deodhar_check, g, range(g.order), jobs))


def _lifting_for(g: Group, w: int) -> Report:
    rep = Report("lifting")
    for u in np.flatnonzero(lower_mask(g, w)):
        u = int(u)
        if u != w:
            rep.check(lifting_check(g, u, w), u=g.format(u), w=g.format(w))
    return rep


def lifting(g: Group, jobs: int | None = 1) -> Report:
    return _merged("lifting", map_items(_lifting_for, g, range(g.order), jobs))


def _carrell_peterson_for(g: Group, w: int) -> Report:
    rep = Report("carrell-peterson")
    c = bg.carrell_peterson(g, w)
    rep.check(c.average == c.regular == c.palindromic, w=g.format(w), clauses=c._asdict())
    rep.stats["regular"] = int(c.regular)
    return rep


def carrell_peterson(g: Group, jobs: int | None = 1) -> Report:
    return _merged("carrell-peterson", map_items(_carrell_peterson_for, g, range(g.order), jobs))


def structure(g: Group, jobs: int | None = 1) -> Report:
    """Delta structure plus fiber and Xi-component checks."""
    delta = build_system(g, "delta")
    xi = build_system(g, "xi")
    rep = structural_checks(g, delta)
    for X in delta.nodes:
        f = project_and_fiber(g, xi, delta, X)
        rep.check(f.boolean_complex and f.projection_monotone and f.dimension_drop_ok,
                  check="fiber", x0=g.format(X.x0), x1=g.format(X.x1))
    total = 0
    for w in range(g.order):
        dd = g.descent_data(w)
        comp = [xi.nodes[i] for i in xi.components[w]]
        total += len(comp)
        dims = sorted(xi_local_dim(g, F) for F in comp)
        rep.check(len(comp) == 2**dd.d_tilde and dims[0] == -1 and dims[-1] == dd.d_tilde - 1,
                  check="xi-component", w=g.format(w))
        rep.check(len(delta.components[w]) <= 2**dd.d_tilde, check="delta-bound", w=g.format(w))
    rep.check(total == len(xi.nodes), check="xi-partition")
    rep.stats.update(delta=len(delta.nodes), xi=len(xi.nodes))
    return rep


RUNNERS = {
    "regularity": regularity,
    "degree-invariance": degree_invariance,
    "out-eulerian": out_eulerian,
    "structure": structure,
    "deodhar": deodhar,
    "lifting": lifting,
    "carrell-peterson": carrell_peterson,
}


def run(g: Group, suite: str, jobs: int | None = 1) -> list[Report]:
    names = SUITES if suite == "all" else (suite,)
    out = []
    for name in names:
        start = time.perf_counter()
        rep = RUNNERS[name](g, jobs)
        rep.wall_time = time.perf_counter() - start
        out.append(rep)
    return out


__all__ = ["SUITES", "RUNNERS", "run", "bruhat_leq"]
