import pytest

from toricdef.classify import (
    FAMILY_DIMS,
    NOTE_EXAMPLE_GAMMA,
    NOTE_EXAMPLE_INCOMPLETE,
    DimensionReport,
    b_dims,
    classify,
    crosscheck,
    family_parameter,
    hh_assembly,
    higher_vanishing,
    interior_check,
    p_min,
)
from toricdef.lattice import in_interior
from toricdef.t1 import t1_dims

FIXTURES = ["p123", "hexagon", "square", "rectangle", "trapezoid"]


def test_p123_families(p123):
    rep = classify(p123)
    got = [(f.kind, f.j + 1, f.q, f.p_min, f.dims) for f in rep.families]
    assert got == [
        ("c", 1, 2, 1, (1, 2, 1)),
        ("c", 1, 3, 2, (1, 2, 1)),
        ("c", 3, 2, 1, (1, 2, 1)),
    ]
    assert rep.sporadic == {p123.degree(2): ((0, 1, 1), ["b"])}
    assert rep.notes == [NOTE_EXAMPLE_INCOMPLETE, NOTE_EXAMPLE_GAMMA]
    assert t1_dims(p123, p123.degree(2)) == (0, 1, 1)


def test_p123_gamma_reading(p123):
    rep = classify(p123)
    # 3R* - gamma s_1 belongs to the (j=1, q=3) family from gamma = 2 on
    for gamma in range(2, 8):
        R = p123.degree(3, 0, gamma)
        assert rep.dims_at(p123, R) == FAMILY_DIMS
        assert t1_dims(p123, R) == FAMILY_DIMS
    # the literal 2R* - gamma s_1 reading lands in the (j=1, q=2) family
    assert rep.labels_at(p123, p123.degree(2, 0, 2)) == "c"


def test_hexagon(hexagon):
    rep = classify(hexagon)
    assert rep.families == []
    assert rep.sporadic == {hexagon.canonical_degree: ((3, 3, 0), ["a"])}


def test_square(square):
    rep = classify(square)
    assert rep.dims_at(square, square.degree(2)) == (2, 5, 3)
    assert b_dims(4) == (2, 5, 3)
    assert crosscheck(square, 4, 10) == []


@pytest.mark.parametrize("name", ["hexagon", "square", "rectangle", "trapezoid"])
def test_crosscheck_clean(name, request):
    cone = request.getfixturevalue(name)
    assert crosscheck(cone, 4, 10) == []


def test_p123_interior_gap(p123):
    # frozen evaluator output at the single disagreement in the acceptance box
    bad = crosscheck(p123, 5, 20)
    assert [(m.degree, m.classified, m.evaluated) for m in bad] == [
        ((0, -1, 2), (0, 0, 0), (0, 1, 1))
    ]
    R = bad[0].degree
    assert R == p123.degree(3, 0, 1)
    assert in_interior(R, p123)
    assert p123.weights(R) == (3, 3, 1)


@pytest.mark.parametrize("name", FIXTURES)
def test_higher_vanishing(name, request):
    cone = request.getfixturevalue(name)
    assert higher_vanishing(cone, 3, 6) == []


@pytest.mark.parametrize("name", FIXTURES)
def test_report_invariants(name, request):
    cone = request.getfixturevalue(name)
    rep = classify(cone)
    for R, (dims, labels) in rep.sporadic.items():
        assert any(dims) and labels
    for fam in rep.families:
        assert fam.kind == "c" and fam.dims == FAMILY_DIMS
        assert interior_check(cone, fam)
        assert p_min(cone, fam.j, fam.q) == fam.p_min
        for p in range(fam.p_min, fam.p_min + 4):
            R = fam.degree(cone, p)
            assert family_parameter(cone, fam.j, fam.q, R) == p
            assert fam.contains(cone, R)
    assert DimensionReport.from_json(rep.to_json()) == rep


def test_d_and_e_cases(rectangle, trapezoid, square):
    rep = classify(rectangle)
    kinds = {lab for _, labels in rep.sporadic.values() for lab in labels}
    assert kinds == {"a", "d", "e"}
    # the square's parallel pairs are not longer than the other edges
    assert not any("d" in labels for _, labels in classify(square).sporadic.values())
    rep = classify(trapezoid)
    assert rep.labels_at(trapezoid, trapezoid.degree(2)) == "d"


def test_hh_assembly(p123, hexagon):
    hh = hh_assembly(p123)
    fams = hh["HH2"]["T1_(1)"]["families"]
    assert [(f["edge"], f["q"], f["dim"]) for f in fams] == [(1, 2, 1), (1, 3, 1), (3, 2, 1)]
    assert hh["HH2"]["T1_(1)"]["sporadic"] == []
    assert len(hh["HH2"]["placeholders"]) == 1 and len(hh["HH3"]["placeholders"]) == 2
    hh = hh_assembly(hexagon)
    assert hh["HH2"]["T1_(1)"]["sporadic"] == [{"degree": [0, 0, 1], "dim": 3, "cases": ["a"]}]
    rep = classify(p123)
    i2 = hh_assembly(p123, rep)["HH3"]["T1_(2)"]
    assert [r["dim"] for r in i2["sporadic"]] == [1]
    assert [f["dim"] for f in i2["families"]] == [2, 2, 2]
