import csv
import io
import json
import subprocess
import sys

import pytest

from coxcosets import cli, suites
from coxcosets.report import Report


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_group_summary(capsys):
    code, out, _ = run(capsys, "group", "--type", "A3")
    assert code == 0
    assert "order: 24" in out and "longest: 4321" in out


def test_group_json(capsys):
    code, out, _ = run(capsys, "group", "--type", "H3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["schema"] == "coxeter-cosets/1"
    assert data["order"] == 120


@pytest.mark.parametrize("kind, count", [("delta", 19), ("xi", 33)])
def test_cosets_counts(capsys, kind, count):
    code, out, _ = run(capsys, "cosets", kind, "--type", "A2", "--format", "json")
    assert code == 0 and json.loads(out)["count"] == count


def test_cosets_component_csv(capsys):
    code, out, _ = run(capsys, "cosets", "delta", "--type", "A2", "--component", "321",
                       "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert code == 0 and rows[0][0] == "x0"
    fibers = sorted((int(r[6]), int(r[7])) for r in rows[1:])
    assert fibers == [(1, -1), (1, -1), (1, -1), (3, 0), (3, 0), (7, 1)]


def test_cosets_table_reports_281(capsys):
    code, out, _ = run(capsys, "cosets", "delta", "--type", "A3", "--table")
    assert code == 0 and "sum of 2^d_tilde: 281" in out


def test_cosets_xi_list(capsys):
    code, out, _ = run(capsys, "cosets", "xi", "--type", "A1", "--list", "--format", "json")
    assert code == 0 and len(json.loads(out)["nodes"]) == 5


@pytest.mark.parametrize("suite", ["regularity", "structure", "out-eulerian"])
def test_verify_passes(capsys, suite):
    code, out, _ = run(capsys, "verify", suite, "--type", "A3", "--jobs", "1")
    assert code == 0 and f"{suite}: PASS" in out


def test_verify_all_json(capsys):
    code, out, _ = run(capsys, "verify", "all", "--type", "A2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["passed"]
    assert [r["suite"] for r in data["reports"]] == list(suites.SUITES)
    assert all("wall_time" not in r for r in data["reports"])


def test_verify_failure_exit_code(capsys, monkeypatch):
    def broken(g, jobs=1):
        rep = Report("regularity")
        rep.check(False, note="forced")
        return rep

    monkeypatch.setitem(suites.RUNNERS, "regularity", broken)
    code, out, _ = run(capsys, "verify", "regularity", "--type", "A2")
    assert code == 1 and "FAIL" in out and "forced" in out


def test_parallel_output_matches_serial(capsys):
    _, serial, _ = run(capsys, "verify", "all", "--type", "B2", "--jobs", "1", "--format", "json")
    _, parallel, _ = run(capsys, "verify", "all", "--type", "B2", "--jobs", "2", "--format", "json")
    assert serial == parallel


@pytest.mark.parametrize(
    "argv, text",
    [
        (["poly", "eulerian4", "--type", "A2", "--eval", "2,2,2,2"], "value at 2,2,2,2: 33"),
        (["poly", "eulerian4", "--type", "A3", "--eval", "t=2"], "value at t=2: 281"),
        (["poly", "inout", "--type", "A3", "--w", "3412", "--eval", "q=-1"], "value at q=-1: 0"),
        (["poly", "poincare", "--type", "A3", "--w", "3412"],
         "P_w = 1 + 3*q + 5*q^2 + 4*q^3 + q^4"),
        (["poly", "directional", "--type", "A4", "--w", "45312", "--kind", "C", "--eval", "1,1"],
         "value at 1,1: "),
    ],
)
def test_poly(capsys, argv, text):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and text in out


def test_export_graph_dot(capsys):
    code, out, _ = run(capsys, "export", "graph", "--type", "A3",
                       "--vertices", "interval 1324 3412")
    assert code == 0 and out.startswith("digraph")
    assert out.count("style=solid") == 16 and "style=dashed" not in out
    _, again, _ = run(capsys, "export", "graph", "--type", "A3",
                      "--vertices", "interval 1324 3412")
    assert out == again


def test_export_graph_json_and_long_edges(capsys):
    code, out, _ = run(capsys, "export", "graph", "--type", "A2", "--format", "json")
    data = json.loads(out)
    assert code == 0 and len(data["vertices"]) == 6
    assert sum(not e["short"] for e in data["edges"]) == 1
    _, dot, _ = run(capsys, "export", "graph", "--type", "A2", "--short-only")
    assert "dashed" not in dot


def test_export_hasse(capsys, tmp_path):
    target = tmp_path / "h.json"
    code, _, _ = run(capsys, "export", "hasse", "--type", "A2", "--system", "xi",
                     "--component", "321", "--format", "json", "--out", str(target))
    data = json.loads(target.read_text())
    assert code == 0 and len(data["nodes"]) == 16
    # boolean lattice of rank 4 has 4 * 2^3 covers
    assert len(data["covers"]) == 32


def test_matrix_file(capsys, tmp_path):
    path = tmp_path / "b3.json"
    path.write_text(json.dumps({"rank": 3, "m": [[1, 3, 2], [3, 1, 4], [2, 4, 1]]}))
    code, out, _ = run(capsys, "group", "--matrix", str(path))
    assert code == 0 and "type: B3" in out


@pytest.mark.parametrize(
    "argv, code",
    [
        (["group"], 2),
        (["group", "--type", "Q3"], 2),
        (["group", "--type", "E8"], 3),
        (["cosets", "xi", "--type", "A3", "--node-cap", "10"], 3),
        (["poly", "poincare", "--type", "A3"], 2),
        (["poly", "poincare", "--type", "A3", "--w", "1123"], 2),
        (["poly", "eulerian4", "--type", "A2", "--eval", "1,2"], 2),
        (["export", "graph", "--type", "A3", "--vertices", "interval 2134 1243"], 2),
        (["export", "graph", "--type", "A3", "--vertices", "bogus"], 2),
        (["group", "--matrix", "/nonexistent.json"], 2),
    ],
)
def test_exit_codes(capsys, argv, code):
    got, _, err = run(capsys, *argv)
    assert got == code and err.startswith("error:")


def test_argparse_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "nonsense", "--type", "A2"])
    assert exc.value.code == 2


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "coxcosets.cli", "group", "--type", "B2", "--format", "json"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(proc.stdout)["order"] == 8
