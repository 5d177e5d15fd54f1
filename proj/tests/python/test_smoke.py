import pytest

import plrs


def test_terms_and_gaps():
    assert plrs.terms([1, 3], 4) == [1, 2, 5, 11]
    assert plrs.term([1, 0, 4], 5) == 15
    assert plrs.brown_gap([1, 0, 4], 5) == -1
    first, gaps = plrs.brown_scan([1, 0, 4], 10)
    assert first == 5
    assert len(gaps) == 10


def test_big_terms_are_python_ints():
    t = plrs.term([2], 200)
    assert t == 2**199


def test_classify():
    v = plrs.classify([1, 3])
    assert v["verdict"] == "Incomplete"
    assert v["witness"] == 4
    assert plrs.classify([1, 1, 0, 0, 0, 0, 15])["proof"]["rule"] == "FamilyDoubleOne"
    assert plrs.classify([1, 0, 2, 3])["verdict"] == "ConjecturallyComplete"


def test_validation_errors():
    with pytest.raises(plrs.PlrsError):
        plrs.validate_coefficients([0, 1])
    with pytest.raises(ValueError):
        plrs.classify([1, 0])


def test_decompositions():
    assert plrs.legal_decompose([1, 3], 9) == [1, 2, 0]
    assert plrs.is_legal([1, 3], [1, 2, 0])
    assert plrs.value_of([1, 1], [1, 0, 0, 1, 0]) == 10
    assert plrs.enumerate_legal([1, 1], 10) == [[1, 0, 0, 1, 0]]
    assert plrs.distinct_decompose([1, 3], 9) is None
    assert plrs.distinct_decompose([2], 7) == [1, 2, 3]
    with pytest.raises(plrs.CapError):
        plrs.distinct_decompose([1, 1], 2_000_000)


def test_bounds():
    assert plrs.fib(10) == 89
    assert plrs.max_n_single_one(5) == 14
    assert plrs.max_n_double_one(4) == 20
    assert plrs.max_n_g_ones(1, 2) is None
    assert plrs.max_n_g_ones(3, 2) == 7
    assert plrs.corollary_shift_bound(6, 2) == 11
    assert plrs.empirical_max_n([1, 1, 0, 0])["max_n"] == 6


def test_figure_and_census():
    rows = plrs.figure_table(2, 2, 2, 4, 2)
    assert [r["empirical_max_n"] for r in rows] == [6, 7, 7]
    report = plrs.census(3)
    assert report["max_first_failure"] == 5
    assert [1, 0, 4] in report["extremal_vectors"]
    assert plrs.check_fail_at_2l_minus_1(3) == 9
