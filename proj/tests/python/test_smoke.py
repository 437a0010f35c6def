"""Smoke tests for the python module: frozen values and basic laws."""

from fractions import Fraction

import pytest

import qsymcat as q


def test_path_counts():
    assert q.count_e_catalan(4, 0) == 14
    assert q.count_e_catalan(2, 1) == 5
    assert [q.count_e_catalan(n, 0) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]


def test_enumeration_is_sorted_and_consistent():
    assert q.enumerate_e_catalan(3, 0) == [
        [0, 0, 0],
        [0, 0, 1],
        [0, 0, 2],
        [0, 1, 0],
        [0, 1, 1],
    ]
    for n in range(5):
        for e in range(3):
            paths = q.enumerate_e_catalan(n, e)
            assert len(paths) == q.count_e_catalan(n, e)
            assert paths == sorted(paths)
            assert all(q.is_e_catalan(p, e) for p in paths)
            assert not any(q.reaches_level(p, e) for p in paths)


def test_composition_helpers():
    assert q.descent_set([2, 1]) == {2}
    assert q.composition_from_subset({2}, 3) == [2, 1]
    assert q.refinements([2, 1]) == [[2, 1], [1, 1, 1]]
    assert q.refines([1, 1, 1], [2, 1])
    assert not q.refines([1, 2], [2, 1])
    assert q.factorize_for_recursion([1, 0, 2]) == ([1], 2, [])
    assert "x3" in q.render_path([0, 0, 2])


def test_qsym_polynomials():
    assert str(q.fundamental_qsym([2], 2)) == "x1^2 + x1*x2 + x2^2"
    assert str(q.monomial_qsym([2, 1], 3)) == "x1^2*x2 + x1^2*x3 + x2^2*x3"
    assert q.expand_in_m([2, 1]) == [([2, 1], 1), ([1, 1, 1], 1)]
    assert q.check_f_recurrence([2, 1], 4)


def test_generator_polynomials():
    assert str(q.gfun([1, 0, 1], 3)) == "x1*x3 - x2^2"
    assert str(q.gfun([0, 1], 2)) == "x2"
    assert q.check_lm([0, 3, 0, 1], 4)
    assert q.check_shift_relation([1], 2)
    assert str(q.m_remainder([2], 2)) == "x2^2"
    g = q.gfun([2, 1], 3)
    f = q.fundamental_qsym([2, 1], 3)
    assert g == f


def test_polynomial_parsing_and_arithmetic():
    p = q.parse_polynomial("x1^2*x2 - 3*x2^3", 2)
    assert str(p) == "x1^2*x2 - 3*x2^3"
    assert (p - p).is_zero
    assert p.window == 2
    terms = p.terms()
    assert terms[0] == ("1", [2, 1])
    assert terms[1] == ("-3", [0, 3])


def test_hilbert_function():
    t = q.hilbert_function(3, 0, 3)
    assert t["dims"] == [1, 2, 2, 0]
    assert t["total"] == 5
    assert t["catalan_bound"] == 5
    assert t["equality"] is True
    assert q.slice_rank(2, 0, 2) == 3
    assert q.slice_rank(2, 0, 1) == 1
    assert q.slice_rank(3, 0, 0) == 0


def test_normal_form_and_membership():
    assert str(q.normal_form_monomial([1, 0], 2, 0)) == "-x2"
    assert str(q.normal_form_monomial([0, 1], 2, 0)) == "x2"
    assert q.normal_form_monomial([1, 1], 2, 0).is_zero
    assert q.contains(q.gfun([0, 2], 3), 3, 0)
    assert not q.contains(q.parse_polynomial("x2", 3), 3, 0)
    p = q.parse_polynomial("x1^2 - x2 + 2*x1*x3", 3)
    assert q.reduce_by_gbasis(p, 3, 0) == q.normal_form(p, 3, 0)


def test_apolar_pairing():
    x1x2 = q.parse_polynomial("x1*x2", 2)
    assert q.apolar_pair(x1x2, x1x2) == Fraction(1)
    sq = q.parse_polynomial("x1^2", 2)
    assert q.apolar_pair(sq, sq) == Fraction(2)
    assert q.apolar_pair(q.parse_polynomial("x1", 2), q.parse_polynomial("x2", 2)) == 0
    assert q.superharmonic_dim(2, 0, 1) == 1
    assert q.superharmonic_dim(2, 0, 2) == 0


def test_errors_are_python_exceptions():
    with pytest.raises(ValueError):
        q.gfun([1, 0, 1], 2)  # window too small
    with pytest.raises(ValueError):
        q.parse_polynomial("y1", 2)
    with pytest.raises(ValueError):
        q.verify("nonsense")


def test_verify_suites():
    r = q.verify("frel", max_deg=3)
    assert r["suite"] == "frel"
    assert r["passed"] is True
    assert r["instances"] == 7
    assert r["failures"] == []

    reports = q.verify(
        "all", max_deg=3, max_len=2, max_n=2, max_e=1, window=4, samples=20, threads=2
    )
    assert [r["suite"] for r in reports] == [
        "frel",
        "lm",
        "shift",
        "syzygy",
        "lattice",
        "filtration",
        "pairing",
        "reduce-equiv",
    ]
    assert all(r["passed"] for r in reports)
