import io
import json

import pytest

from local_antimagic.cli import main
from local_antimagic.serialize import (
    document,
    graph_from_dict,
    graph_to_dict,
    parse_document,
    to_dot,
)
from local_antimagic import build_cycle, c_labeling, merge_vertices, case_plan


def run_cli(capsys, monkeypatch, args, stdin=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(args)
    out = capsys.readouterr().out
    return code, out


def test_graph_json_roundtrip():
    g = merge_vertices(build_cycle(16), case_plan(1, 2))
    assert graph_from_dict(graph_to_dict(g)) == g


def test_document_roundtrip():
    g, f = build_cycle(6), c_labeling(6)
    g2, f2, extra = parse_document(json.dumps(document(g, f, note="x")))
    assert g2 == g and f2.labels == f.labels and extra == {"note": "x"}


def test_dot_export_contains_sums():
    g, f = build_cycle(4), c_labeling(4)
    dot = to_dot(g, f)
    assert "graph {" in dot and "v0\\n4" in dot
    assert dot.count("--") == 4


def test_build_then_verify_pipeline(capsys, monkeypatch):
    code, out = run_cli(capsys, monkeypatch, ["label", "circulant", "--m", "16", "--steps", "1,3"])
    assert code == 0
    code, out = run_cli(
        capsys, monkeypatch, ["verify", "--expect-colors", "3"], stdin=out
    )
    assert code == 0
    report = json.loads(out)
    assert report["ok"] and sorted(report["colors"]) == [52, 66, 68]


def test_verify_rejects_wrong_expectation(capsys, monkeypatch):
    code, out = run_cli(capsys, monkeypatch, ["label", "c", "--m", "8"])
    code, out = run_cli(
        capsys, monkeypatch, ["verify", "--expect-colors", "2"], stdin=out
    )
    assert code == 1


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        main(["no-such-command"])
    assert err.value.code == 2


def test_transform_case_command(capsys, monkeypatch):
    code, out = run_cli(
        capsys, monkeypatch, ["transform", "case", "--case", "1", "--k", "2"]
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["expected_colors"] == [28, 34, 36]
    code, _ = run_cli(capsys, monkeypatch, ["verify"], stdin=out)
    assert code == 0


def test_transform_matrix_render(capsys, monkeypatch):
    code, out = run_cli(
        capsys, monkeypatch, ["transform", "matrix", "--s", "3", "--t", "2", "--render"]
    )
    assert code == 0
    assert "456" in out and "520" in out and "516" in out


def test_transform_matrix_json_fields(capsys, monkeypatch):
    code, out = run_cli(capsys, monkeypatch, ["transform", "matrix", "--s", "2", "--t", "0"])
    doc = json.loads(out)
    assert set(doc) >= {"graph", "labels", "A", "B", "M01", "Mlab", "steps"}
    assert doc["steps"] == [1, 3]


def test_transform_union_pipeline(capsys, monkeypatch):
    code, labeled = run_cli(capsys, monkeypatch, ["label", "union2a", "--r", "9"])
    assert code == 0
    directives = json.dumps(
        [{"fuse": [2 * i, 2 * i + 1], "step": 3} for i in range(4)]
        + [{"merge": 8, "case": 1, "k": 2}]
    )
    orders = ",".join(["34"] * 8 + ["16"])
    code, out = run_cli(
        capsys,
        monkeypatch,
        ["transform", "union", "--orders", orders, "--directives", directives],
        stdin=labeled,
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["colors"] == [578, 612]


def test_spectrum_command(capsys, monkeypatch):
    code, out = run_cli(
        capsys,
        monkeypatch,
        ["spectrum", "--m", "16", "--steps", "1,3", "--against", "1,7"],
    )
    data = json.loads(out)
    assert code == 0
    assert data["cospectral"] is False
    assert abs(data["spectrum"][0] - 4.0) < 1e-9


def test_iso_multiplier_command(capsys, monkeypatch):
    code, out = run_cli(
        capsys,
        monkeypatch,
        ["iso", "--multiplier", "--n", "16", "--a", "3", "--b", "11"],
    )
    assert code == 0 and json.loads(out)["isomorphic"]


def test_oracle_command(capsys, monkeypatch):
    code, built = run_cli(capsys, monkeypatch, ["build", "cycle", "--m", "5"])
    code, out = run_cli(capsys, monkeypatch, ["oracle", "chi-la"], stdin=built)
    assert code == 0
    assert json.loads(out)["chi_la"] == 3


def test_oracle_budget_exit(capsys, monkeypatch):
    code, built = run_cli(capsys, monkeypatch, ["build", "cycle", "--m", "16"])
    code, _ = run_cli(
        capsys, monkeypatch, ["oracle", "chi-la", "--max-edges", "8"], stdin=built
    )
    assert code == 1


def test_export_roundtrip_identity(capsys, monkeypatch):
    code, out = run_cli(capsys, monkeypatch, ["label", "c", "--m", "7"])
    code, out2 = run_cli(capsys, monkeypatch, ["export", "json"], stdin=out)
    assert json.loads(out) == json.loads(out2)


def test_export_dot(capsys, monkeypatch):
    code, out = run_cli(capsys, monkeypatch, ["label", "c", "--m", "5"])
    code, dot = run_cli(capsys, monkeypatch, ["export", "dot"], stdin=out)
    assert code == 0 and dot.startswith("graph {")


def test_reproduce_all(capsys, monkeypatch):
    code, out = run_cli(capsys, monkeypatch, ["reproduce-all"])
    assert code == 0
    assert "FAIL" not in out
    assert out.count("ok") >= 9


def test_error_exit_code_on_bad_parameters(capsys, monkeypatch):
    code, _ = run_cli(capsys, monkeypatch, ["label", "circulant", "--m", "9", "--steps", "1,2"])
    assert code == 1
