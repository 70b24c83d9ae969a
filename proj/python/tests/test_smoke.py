import pytest

import toroidal


def test_basic_representation_dims():
    m = toroidal.Model("A", 1, 2)
    csv = toroidal.char_table(m, "L0", order=4, format="csv")
    assert csv.splitlines() == ["q1,dim", "0,1", "1,3", "2,4", "3,7", "4,13"]


def test_suites_pass():
    m = toroidal.Model("A", 1, 2)
    for suite in ["highest-weight", "garland", "symfun", "automorphism"]:
        rows = toroidal.verify(m, suite, emax=4, samples=20)
        assert rows and all(r["pass"] for r in rows), suite


def test_small_bracket_slice():
    m = toroidal.Model("A", 1, 2)
    rows = toroidal.verify(m, "brackets", emax=3, samples=10)
    assert rows[0]["pass"] and rows[0]["checked"] > 0


def test_closed_form_matches_spanning():
    m = toroidal.Model("A", 2, 2)
    a = toroidal.char_table(m, "closed-form", order=4, format="csv")
    b = toroidal.char_table(m, "Wloc-spanning", order=4, format="csv")
    assert a == b
    js = toroidal.char_series(m, "Wloc-spanning", order=3)
    assert js["provenance"] == "spanning"
    assert js["series"]["variables"] == ["q1", "q2"]


def test_errors():
    with pytest.raises(toroidal.NotSimplyLaced):
        toroidal.Model("G", 2, 2)
    with pytest.raises(toroidal.InvalidArgument):
        toroidal.Model("A", 0, 2)
    m = toroidal.Model("A", 1, 2)
    with pytest.raises(toroidal.InvalidArgument):
        toroidal.verify(m, "nonsense")
    with pytest.raises(toroidal.SliceExhausted):
        toroidal.verify(m, "highest-weight", emax=0)


def test_symfun_strings():
    assert toroidal.garland_coeff(1) != ""
    assert toroidal.elementary(2, 3) != ""
    assert "brackets" in toroidal.suite_names()
