import os

import pytest

import hocolim

DATA = os.environ.get("HOCOLIM_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def fixture(name):
    return os.path.join(DATA, name)


def test_homotopy_pushout_of_the_circle():
    ws = hocolim.load([fixture("pushout.json"), fixture("suspension_F.json")])
    assert ws.indexed_diagrams == ["F"]
    assert hocolim.hocolim(ws, "F") == [1, 0, 1]
    # the strict pushout collapses the circle to a point
    assert hocolim.colim(ws, "F") == [1]


def test_cube_fibers_satisfy_thomason():
    ws = hocolim.load([fixture("cube_base.json"), fixture("cube_fibers.json")])
    report = hocolim.verify_thomason(ws, "H")
    assert report.verdict
    assert [row[1] for row in report.betti] == [[1], [1]]
    assert "verdict   positive" in str(report)


def test_generate_is_deterministic_and_round_trips():
    for family in hocolim.families:
        a = hocolim.generate(family, seed=7).dump()
        assert a == hocolim.generate(family, seed=7).dump()
        assert hocolim.parse(a).dump() == a


def test_nerve_and_space_homology():
    ws = hocolim.generate("simplicial-map", seed=3)
    assert ws.maps == ["f"]
    assert hocolim.homology(ws, "K")[0] >= 1
    poset = hocolim.generate("poset", seed=2)
    assert hocolim.nerve_homology(poset)[0] >= 1


def test_ocolim_matches_colim_over_generated_diagrams():
    for seed in range(1, 6):
        ws = hocolim.generate("bounded-diagram-via-closure", seed=seed)
        assert hocolim.ocolim(ws, "F") == hocolim.colim(ws, "F")


def test_suites_report_positive():
    for name in ("fubini", "thomason", "cone", "homotopy-pushout"):
        report = hocolim.suite(name, seed=4, instances=2)
        assert report, report.detail
        assert '"verdict": true' in report.to_json()


def test_errors_are_python_exceptions():
    with pytest.raises(hocolim.IoError, match="unsupported schema version"):
        hocolim.parse('{"version": 2}')
    with pytest.raises(ValueError):
        hocolim.suite("no-such-suite")
    with pytest.raises(ValueError):
        hocolim.generate("spheres")
