"""Smoke tests for the python bindings: the main operations round-trip
exact rational strings end to end."""

import json
import os
import pathlib

import ilcp

FIXTURES = pathlib.Path(os.environ.get("ILCP_FIXTURES", "fixtures"))


def read_fixture(name):
    return (FIXTURES / f"{name}.json").read_text()


def test_solve_lcp_three_solutions():
    out = ilcp.solve_lcp([["2", "7"], ["6", "5"]], ["-4", "-5"])
    assert out["complete"]
    assert out["rays"] == []
    assert sorted(out["points"]) == sorted([["15/32", "7/16"], ["2", "0"], ["0", "1"]])


def test_solve_lcp_ray():
    out = ilcp.solve_lcp([["0"]], ["0"])
    assert out["points"] == []
    assert out["rays"][0]["base"] == ["0"]
    assert out["rays"][0]["dir"] == ["1"]
    assert "t_max" not in out["rays"][0]


def test_check_point_exclusion_certificate():
    doc = read_fixture("hplus_3d")
    verdict = ilcp.check_point(doc, "1/19,7/19,6/19")
    assert verdict["in_solution_set"]
    assert not verdict["in_symmetric_solution_set"]
    assert "m11 = 5" in verdict["certificate"]
    assert "[3/19, 48/19]" in verdict["certificate"]


def test_check_point_witness():
    doc = read_fixture("hplus_2d")
    verdict = ilcp.check_point(doc, "5/7,6/7")
    assert verdict["in_solution_set"]
    assert verdict["in_symmetric_solution_set"]
    assert verdict["witness"]["M"] == [["4", "-1"], ["-1", "2"]]
    assert verdict["witness"]["q"] == ["-2", "-1"]


def test_classify():
    out = ilcp.classify(read_fixture("m_matrix_2d"))
    assert out["all_m_matrices"]["in_class"]
    assert out["all_hplus_matrices"]["in_class"]
    assert out["all_p_matrices"]["in_class"]
    hp = ilcp.classify(read_fixture("hplus_3d"))
    assert not hp["all_m_matrices"]["in_class"]
    assert hp["all_hplus_matrices"]["in_class"]


def test_analyze_report_exact_values():
    report = json.loads(ilcp.analyze(read_fixture("m_matrix_2d")))
    assert report["inf"][0]["rat"] == "1"
    assert report["sup"] == [
        {"rat": "44", "dec": "44"},
        {"rat": "10", "dec": "10"},
    ]
    polygon = [p for p in report["patterns"] if p["pattern"] == "w1=0,w2=0"][0]
    verts = [[c["rat"] for c in v] for v in polygon["vertices"]]
    assert ["100/3", "14/3"] in verts


def test_svg_is_deterministic():
    doc = read_fixture("m_matrix_2d")
    # Trim the grid for speed; determinism is the point here.
    payload = json.loads(doc)
    payload["options"]["grid_step"] = "1"
    doc = json.dumps(payload)
    a = ilcp.render_svg(doc, [], 16)
    b = ilcp.render_svg(doc, [], 16)
    assert a == b
    assert a.startswith("<svg") and a.rstrip().endswith("</svg>")
