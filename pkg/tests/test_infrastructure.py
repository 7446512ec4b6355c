import doctest
import json

import pytest

import coxcosets.classification
import coxcosets.cosets
import coxcosets.group
import coxcosets.polynomials
from cache import group, system
from coxcosets.bruhat_graph import bruhat_graph
from coxcosets.export import SCHEMA, graph_to_dot, graph_to_json, hasse_to_dot, hasse_to_json
from coxcosets.group import build_group
from coxcosets.models import DihedralModel, ReflectionModel
from coxcosets.parallel import map_items
from coxcosets.report import MAX_WITNESSES, Report


@pytest.mark.parametrize(
    "module",
    [coxcosets.classification, coxcosets.cosets, coxcosets.group, coxcosets.polynomials],
)
def test_doctests(module):
    result = doctest.testmod(module)
    assert result.failed == 0 and result.attempted > 0


@pytest.mark.parametrize(
    "label, order, reflections",
    [("H4", 14400, 60), ("F4", 1152, 24), ("E6", 51840, 36), ("D5", 1920, 20)],
)
def test_large_groups_enumerate_exactly(label, order, reflections):
    g = build_group(label, bruhat_cache=False)
    assert g.order == order
    assert len(g.reflections) == reflections == g.length[g.longest_element()]


def test_h3_reflection_model_matches_abstract_relations():
    g = group("H3")
    # (s1 s2)^5 = e and no smaller power
    x = g.multiply(g.gen(0), g.gen(1))
    powers = [x]
    for _ in range(4):
        powers.append(g.multiply(powers[-1], x))
    assert powers[-1] == 0 and 0 not in powers[:-1]


def test_dihedral_model_agrees_with_reflection_model():
    from coxcosets.classification import standard_matrix

    for m in (3, 4, 5, 6, 8):
        dih = build_group(f"I2({m})")
        assert dih.order == 2 * m
        assert sorted(dih.length) == sorted([0] + [k for k in range(1, m) for _ in (0, 1)] + [m])
    assert DihedralModel(5).identity() is not None
    assert ReflectionModel(standard_matrix("H", 3)).identity() is not None


def test_parallel_map_keeps_order():
    g = group("A3")
    serial = map_items(lambda g, w: int(g.length[w]) * 100 + w, g, range(g.order), jobs=1)
    forked = map_items(lambda g, w: int(g.length[w]) * 100 + w, g, range(g.order), jobs=3)
    assert serial == forked


def test_report_merge_and_witness_cap():
    a = Report("x")
    for i in range(30):
        a.check(i % 2 == 0, i=i)
    assert a.checks == 30 and a.failure_count == 15
    assert len(a.failures) == 15
    b = Report("x")
    for i in range(10):
        b.fail(i=i)
    a.merge(b)
    assert a.failure_count == 25 and len(a.failures) == MAX_WITNESSES
    assert a.summary() == "x: FAIL (30 checks, 25 failures)"
    assert "wall_time" not in a.to_dict()


def test_exports_are_deterministic_and_well_formed():
    g = group("A3")
    graph = bruhat_graph(g, range(g.order))
    dot = graph_to_dot(g, graph)
    assert dot == graph_to_dot(g, bruhat_graph(g, reversed(range(g.order))))
    assert dot.count("->") == len(graph.edges)
    data = json.loads(graph_to_json(g, graph))
    assert data["schema"] == SCHEMA
    assert sum(v["out"] for v in data["vertices"]) == len(data["edges"])
    s = system("A2", "delta")
    h = json.loads(hasse_to_json(group("A2"), s))
    assert len(h["nodes"]) == 19
    assert hasse_to_dot(group("A2"), s).count("->") == len(h["covers"])
