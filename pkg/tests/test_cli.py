"""End-to-end CLI runs: JSON in, JSON/CSV/SVG out, exit codes, determinism."""

import json

import pytest

from borsuk.cli import cli_dispatch


@pytest.fixture
def cube2(tmp_path):
    body = tmp_path / "cube2.json"
    body.write_text(json.dumps({"dim": 2, "facets": [
        {"a": ["1", "0"], "b": "1"},
        {"a": ["0", "1"], "b": "1"},
    ]}))
    points = tmp_path / "cube2-vertices.json"
    points.write_text(json.dumps({"dim": 2, "points": [
        ["1", "1"], ["1", "-1"], ["-1", "1"], ["-1", "-1"],
    ]}))
    return body, points


def run(argv, capsys):
    code = cli_dispatch([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, out


def test_borsuk_cube(cube2, capsys):
    body, points = cube2
    code, out = run(["borsuk", "--body", body, "--points", points], capsys)
    assert code == 0
    obj = json.loads(out)
    assert obj["number"] == 4
    assert obj["optimal"] is True
    assert obj["stats"]["time"] is None


def test_borsuk_with_timings(cube2, capsys):
    body, points = cube2
    code, out = run(["borsuk", "--body", body, "--points", points, "--timings"], capsys)
    assert code == 0
    assert json.loads(out)["stats"]["time"] is not None


def test_gauge_inline_point(cube2, capsys):
    body, _ = cube2
    code, out = run(["gauge", "--body", body, "--point", '["2","0"]', "--point", '["1/2","1/3"]'], capsys)
    assert code == 0
    assert json.loads(out)["values"] == ["2", "1/2"]


def test_diameter_graph(cube2, capsys):
    body, points = cube2
    code, out = run(["diameter", "--body", body, "--points", points], capsys)
    assert code == 0
    obj = json.loads(out)
    assert obj["diameter"] == "2"
    assert len(obj["edges"]) == 6


def test_diffbody(tmp_path, capsys):
    poly = tmp_path / "triangle.json"
    poly.write_text(json.dumps({"dim": 2, "vertices": [["0", "0"], ["1", "0"], ["0", "1"]]}))
    code, out = run(["diffbody", "--polytope", poly], capsys)
    assert code == 0
    obj = json.loads(out)
    assert len(obj["vertices"]) == 6


def test_lift_polytope_and_points(tmp_path, capsys):
    poly = tmp_path / "seg.json"
    poly.write_text(json.dumps({"dim": 1, "vertices": [["-1"], ["1"]]}))
    code, out = run(["lift", "--polytope", poly], capsys)
    assert code == 0
    assert json.loads(out)["body"]["dim"] == 2

    pts = tmp_path / "pts.json"
    pts.write_text(json.dumps({"dim": 1, "points": [["0"], ["1"]]}))
    code, out = run(["lift", "--points", pts], capsys)
    assert code == 0
    obj = json.loads(out)
    assert len(obj["points"]) == 4
    assert obj["labels"] == [[0, 1], [1, 1], [0, -1], [1, -1]]


def test_cover(tmp_path, capsys):
    poly = tmp_path / "sq.json"
    poly.write_text(json.dumps({"dim": 2, "vertices": [["0", "0"], ["1", "0"], ["0", "1"], ["1", "1"]]}))
    code, out = run(["cover", "--polytope", poly, "--ratio", "3/5", "--grid-step", "1/4"], capsys)
    assert code == 0
    obj = json.loads(out)
    assert len(obj["centers"]) == 4
    assert obj["certificate_level"] == "sample_certified"


def test_bounds_csv_row_count(capsys):
    code, out = run(["bounds", "--n-max", "64", "--format", "csv"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "n,partition_bound,covering_bound,binomial_bound"
    assert len(lines) == 64  # header plus n = 2..64


def test_verify_suite_exit_zero(capsys):
    code, out = run(["verify", "--suite", "doubling", "--count", "3", "--seed", "7"], capsys)
    assert code == 0
    obj = json.loads(out)
    assert obj["checks_failed"] == 0


def test_plot2d(cube2, tmp_path, capsys):
    body, points = cube2
    part = tmp_path / "part.json"
    part.write_text(json.dumps({"n_points": 4, "classes": [[0], [1], [2], [3]]}))
    out_file = tmp_path / "fig.svg"
    code, _ = run(["plot2d", "--body", body, "--points", points,
                   "--partition", part, "--out", out_file], capsys)
    assert code == 0
    data = out_file.read_bytes()
    assert data.startswith(b"<svg")
    # byte-identical on rerun
    code, _ = run(["plot2d", "--body", body, "--points", points,
                   "--partition", part, "--out", out_file], capsys)
    assert out_file.read_bytes() == data


def test_identical_invocations_identical_bytes(cube2, capsys):
    body, points = cube2
    _, out1 = run(["borsuk", "--body", body, "--points", points], capsys)
    _, out2 = run(["borsuk", "--body", body, "--points", points], capsys)
    assert out1 == out2
    _, v1 = run(["verify", "--suite", "grunbaum_plane", "--count", "2", "--seed", "3"], capsys)
    _, v2 = run(["verify", "--suite", "grunbaum_plane", "--count", "2", "--seed", "3"], capsys)
    assert v1 == v2


def test_domain_error_exits_one(tmp_path, capsys):
    poly = tmp_path / "sq.json"
    poly.write_text(json.dumps({"dim": 2, "vertices": [["0", "0"], ["1", "0"], ["0", "1"], ["1", "1"]]}))
    code = cli_dispatch(["lift"])  # neither --polytope nor --points
    assert code == 1
    code = cli_dispatch(["gauge", "--body", str(poly)])  # triangle-ish: no point given either
    assert code == 1


def test_missing_file_exits_one(capsys):
    code = cli_dispatch(["diffbody", "--polytope", "/nonexistent.json"])
    assert code == 1


def test_usage_error_exits_two(capsys):
    assert cli_dispatch(["borsuk"]) == 2  # missing required arguments
    assert cli_dispatch(["frobnicate"]) == 2
    assert cli_dispatch(["verify", "--suite", "unknown-name"]) == 2


def test_invalid_body_exits_one(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"dim": 2, "vertices": [["0", "0"], ["1", "0"], ["0", "1"]]}))
    code = cli_dispatch(["gauge", "--body", str(bad), "--point", '["1","1"]'])
    assert code == 1
