import pytest

import polsyz

VILLA = "x1^2\nx1*x2\nx2^2\nx2*x3\nx3^2\n"


def test_villa():
    d = polsyz.analyze(VILLA)
    assert d["polarizable"] is False
    assert d["normal"] is False
    assert d["linearly_presented"] is False
    assert d["dimension"] == 3
    assert d["witnesses"]


def test_pairs_and_round_trip():
    src = (6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (2, 4), (4, 6)])
    assert polsyz.to_mon(polsyz.to_mon(src)) == polsyz.to_mon(src)
    assert polsyz.analyze(src)["polarizable"] is False
    assert polsyz.oracle(src, degree_bound=10)["summary"]["agree_with_theorem"] is True
    assert len(polsyz.walks(src)["walks"]) == 4


def test_syzygies_and_pinch():
    z = polsyz.syzygies(VILLA)
    assert len(z["vectors"]) == 3
    p = polsyz.syzygies(VILLA, module="P")
    assert p["generic_rank"] == p["expected_rank"]
    octagon = (8, [(i, i + 1) for i in range(1, 8)] + [(1, 8), (1, 4)])
    r = polsyz.pinch(octagon, 1, 4)
    assert r["output"]["n"] == 7
    assert polsyz.analyze(r["mon"])["polarizable"] is False


def test_errors():
    with pytest.raises(polsyz.ParseError):
        polsyz.analyze("x1*x2*x3\n")
    with pytest.raises(polsyz.IncohesiveError):
        polsyz.analyze("x1*x2\nx3*x4\n")
    with pytest.raises(ValueError):
        polsyz.syzygies(VILLA, module="Q")
