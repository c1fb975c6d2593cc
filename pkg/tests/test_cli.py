"""Command-line behavior: schemas, exit codes, determinism, SVG output."""

import json
import math
import xml.etree.ElementTree as ET

import pytest

from ovalcaustics import cli
from ovalcaustics.trigpoly import TrigPoly

SVG_NS = "{http://www.w3.org/2000/svg}"


def write_spec(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def cw_spec(tmp_path):
    return write_spec(tmp_path, "cw.json", {"kind": "support", "a0": 10, "terms": [[3, 1, 0]]})


@pytest.fixture
def fig10_spec(tmp_path):
    return write_spec(tmp_path, "fig10.json", {
        "kind": "support", "a0": 115,
        "terms": [[2, 10, 0], [3, 1 / 3, 0], [4, 0, 1], [5, 0, -3]]})


class TestInfo:
    def test_constant_width_summary(self, capsys, cw_spec):
        code, out, _ = run(capsys, ["info", cw_spec])
        assert code == 0
        rep = json.loads(out)["report"]
        assert rep["length"] == pytest.approx(20 * math.pi)
        assert rep["is_constant_width"] is True

    def test_circle(self, capsys, tmp_path):
        path = write_spec(tmp_path, "circle.json", {"kind": "support", "a0": 5, "terms": []})
        code, out, _ = run(capsys, ["info", path])
        rep = json.loads(out)["report"]
        assert rep["length"] == pytest.approx(10 * math.pi)
        assert rep["area"] == pytest.approx(25 * math.pi)

    def test_not_an_oval_exit_3(self, capsys, tmp_path):
        path = write_spec(tmp_path, "bad.json", {"kind": "support", "a0": 1, "terms": [[2, 1, 0]]})
        code, _, err = run(capsys, ["info", path])
        assert code == 3
        assert "NotAnOval" in err and "-2" in err

    def test_malformed_json_exit_2(self, capsys, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{nope")
        code, _, err = run(capsys, ["info", str(path)])
        assert code == 2

    def test_unknown_kind_exit_2(self, capsys, tmp_path):
        path = write_spec(tmp_path, "weird.json", {"kind": "spline"})
        assert run(capsys, ["info", path])[0] == 2

    def test_missing_file_exit_6(self, capsys, tmp_path):
        assert run(capsys, ["info", str(tmp_path / "nothere.json")])[0] == 6

    def test_parametric_info(self, capsys, tmp_path):
        path = write_spec(tmp_path, "ell.json", {
            "kind": "parametric",
            "x": {"a0": 0, "terms": [[1, 2, 0]]},
            "y": {"a0": 0, "terms": [[1, 0, 1]]},
            "orientation": 1})
        code, out, _ = run(capsys, ["info", path])
        assert code == 0
        rep = json.loads(out)["report"]
        assert rep["area"] == pytest.approx(2 * math.pi, rel=1e-10)


class TestDerive:
    def test_cwms_cusp_count(self, capsys, tmp_path):
        path = write_spec(tmp_path, "f4.json", {"kind": "support", "a0": 38, "terms": [[6, 1, 0]]})
        code, out, _ = run(capsys, ["derive", path, "--set", "cwms"])
        assert code == 0
        assert json.loads(out)["report"]["cusp_count"] == 12

    def test_sms_cusp_count(self, capsys, tmp_path):
        path = write_spec(tmp_path, "f9.json",
                          {"kind": "support", "a0": 102, "terms": [[4, 1, 0], [5, 1, 0]]})
        code, out, _ = run(capsys, ["derive", path, "--set", "sms"])
        assert json.loads(out)["report"]["cusp_count"] == 10

    def test_degenerate_point(self, capsys, cw_spec):
        code, out, _ = run(capsys, ["derive", cw_spec, "--set", "cwms"])
        assert code == 0
        assert json.loads(out)["report"] == {"degenerate": "point", "point": [0.0, 0.0]}

    def test_equidistant_needs_lambda(self, capsys, cw_spec):
        assert run(capsys, ["derive", cw_spec, "--set", "equidistant"])[0] == 4

    def test_equidistant_with_lambda(self, capsys, cw_spec):
        code, out, _ = run(capsys, ["derive", cw_spec, "--set", "equidistant",
                                    "--lambda", "0.25"])
        assert code == 0
        assert json.loads(out)["report"]["kind"] == {"name": "equidistant", "lambda": 0.25}

    def test_usage_error_on_unknown_set(self, capsys, cw_spec):
        assert run(capsys, ["derive", cw_spec, "--set", "evolute"])[0] == 4


class TestVerify:
    def test_fig10_passes(self, capsys, fig10_spec):
        code, out, _ = run(capsys, ["verify", fig10_spec])
        assert code == 0
        rep = json.loads(out)["report"]["identities"]
        L2 = rep["length"] ** 2
        assert all(e["residual"] <= 1e-9 * L2 for e in rep["equalities"])

    def test_with_stability(self, capsys, fig10_spec):
        code, out, _ = run(capsys, ["verify", fig10_spec, "--stability"])
        assert code == 0
        stab = json.loads(out)["report"]["stability"]
        assert set(stab["bound_slacks"]) == {"6.6", "6.7", "6.8", "6.14", "6.16", "6.17", "6.18"}

    def test_circle_all_zero(self, capsys, tmp_path):
        path = write_spec(tmp_path, "c.json", {"kind": "support", "a0": 5, "terms": []})
        code, out, _ = run(capsys, ["verify", path])
        assert code == 0
        rep = json.loads(out)["report"]["identities"]
        assert rep["wigner_area"] == 0.0 and rep["cwms_area"] == 0.0

    def test_parametric_verify(self, capsys, tmp_path):
        path = write_spec(tmp_path, "ell.json", {
            "kind": "parametric",
            "x": {"a0": 0, "terms": [[1, 2, 0]]},
            "y": {"a0": 0, "terms": [[1, 0, 1]]},
            "orientation": 1})
        code, out, _ = run(capsys, ["verify", path])
        assert code == 0
        assert json.loads(out)["report"]["equality_residual"] <= 1e-8


class TestRender:
    def test_fig10_polylines_and_markers(self, capsys, fig10_spec, tmp_path):
        out_path = tmp_path / "fig10.svg"
        code, _, _ = run(capsys, ["render", fig10_spec, "--sets", "m,wigner,cwms,sms",
                                  "--samples", "512", "-o", str(out_path)])
        assert code == 0
        root = ET.parse(out_path).getroot()
        assert len(root.findall(f".//{SVG_NS}polyline")) == 4
        cusps = [c for c in root.findall(f".//{SVG_NS}circle")
                 if c.get("class") == "cusp"]
        assert len(cusps) == 5 + 4 + 10

    def test_circle_center_marker(self, capsys, tmp_path):
        path = write_spec(tmp_path, "c.json", {"kind": "support", "a0": 5, "terms": []})
        out_path = tmp_path / "c.svg"
        code, _, _ = run(capsys, ["render", path, "--sets", "m,sms", "-o", str(out_path)])
        assert code == 0
        root = ET.parse(out_path).getroot()
        assert len(root.findall(f".//{SVG_NS}polyline")) == 1
        centers = [c for c in root.findall(f".//{SVG_NS}circle")
                   if c.get("class") == "center"]
        assert len(centers) == 1

    def test_parametric_sms_markers(self, capsys, tmp_path):
        path = write_spec(tmp_path, "ell.json", {
            "kind": "parametric",
            "x": {"a0": 0, "terms": [[1, 2, 0]]},
            "y": {"a0": 0, "terms": [[1, 0, 1]]},
            "orientation": 1})
        out_path = tmp_path / "e.svg"
        code, _, _ = run(capsys, ["render", path, "--sets", "m,sms",
                                  "--samples", "256", "-o", str(out_path)])
        assert code == 0
        root = ET.parse(out_path).getroot()
        assert len(root.findall(f".//{SVG_NS}polyline")) == 2
        cusps = [c for c in root.findall(f".//{SVG_NS}circle")
                 if c.get("class") == "cusp"]
        assert len(cusps) == 4

    def test_too_few_samples_exit_4(self, capsys, cw_spec, tmp_path):
        assert run(capsys, ["render", cw_spec, "--sets", "m", "--samples", "8",
                            "-o", str(tmp_path / "x.svg")])[0] == 4

    def test_unwritable_output_exit_6(self, capsys, cw_spec, tmp_path):
        assert run(capsys, ["render", cw_spec, "--sets", "m",
                            "-o", str(tmp_path / "no" / "dir" / "x.svg")])[0] == 6


class TestFuzz:
    def test_small_sweep_passes(self, capsys):
        code, out, _ = run(capsys, ["fuzz", "--seed", "1", "--count", "10", "--degree", "6"])
        assert code == 0
        rep = json.loads(out)
        assert rep["report"]["passed"] == 10
        assert rep["seed"] == 1

    def test_deterministic_output(self, capsys):
        argv = ["fuzz", "--seed", "7", "--count", "3", "--degree", "5"]
        _, out1, _ = run(capsys, argv)
        _, out2, _ = run(capsys, argv)
        assert out1 == out2

    def test_zero_count_exit_4(self, capsys):
        assert run(capsys, ["fuzz", "--seed", "1", "--count", "0"])[0] == 4

    def test_degree_cap_exit_4(self, capsys):
        assert run(capsys, ["fuzz", "--seed", "1", "--count", "1", "--degree", "17"])[0] == 4


class TestRoundTrip:
    def test_support_spec_round_trip(self, capsys, tmp_path):
        p = TrigPoly(12.5, [(2, 0.125, -0.75), (5, 1 / 3, 0.0)])
        obj = {"kind": "support", **p.to_json_dict()}
        path = write_spec(tmp_path, "rt.json", obj)
        kind, oval = cli.parse_spec(json.loads((tmp_path / "rt.json").read_text()))
        assert kind == "support"
        assert oval.p == p

    def test_info_is_deterministic(self, capsys, fig10_spec):
        _, out1, _ = run(capsys, ["info", fig10_spec])
        _, out2, _ = run(capsys, ["info", fig10_spec])
        assert out1 == out2
