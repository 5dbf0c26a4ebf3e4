from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sylvsums.arith import UniPoly, poly_from_roots
from sylvsums.doublesum import sylvester_double_sum
from sylvsums.errors import DomainError
from sylvsums.sylvmatrix import Branch
from sylvsums.verify import (
    classify,
    main_theorem_rhs,
    random_instance,
    run_suites,
    verify_main_theorem,
    verify_matrix_suite,
)


def test_classify_examples():
    c = classify(2, 2, 1, 1)
    assert (c.tag, c.d, c.k, c.sigma) == (Branch.COFACTOR, 2, 1, 3)
    assert classify(1, 4, 1, 1).tag is Branch.ZERO
    assert classify(1, 3, 0, 2).tag is Branch.F
    assert classify(2, 3, 2, 3).tag is Branch.RES


def test_classify_rejects():
    with pytest.raises(DomainError):
        classify(2, 2, 3, 0)
    with pytest.raises(DomainError):
        classify(3, 2, 0, 0)


@given(st.integers(min_value=1, max_value=7), st.data())
def test_branches_partition_grid(m, data):
    n = data.draw(st.integers(min_value=m, max_value=9))
    for p in range(m + 1):
        for q in range(n + 1):
            d = p + q
            c = classify(m, n, p, q)
            hits = [
                d < m or m == d < n,
                m < d < n - 1,
                m < d == n - 1,
                n <= d <= m + n - 1,
                d == m + n,
            ]
            assert sum(hits) == 1
            tags = [Branch.SRES, Branch.ZERO, Branch.F, Branch.COFACTOR, Branch.RES]
            assert c.tag is tags[hits.index(True)]


def test_rhs_examples():
    assert main_theorem_rhs([1, 2], [3, 4], 1, 1) == UniPoly([14, -10, 2])
    assert main_theorem_rhs([1, 2], [3, 4], 1, 0) == UniPoly([-10, 4])
    assert main_theorem_rhs([2], [3], 1, 1) == -(poly_from_roots([2]) * poly_from_roots([3]))


def test_historical_case_four():
    # m = d = n: C(m-1, q) f + C(m-1, p) g
    A, B = [1, 2, 3], [5, 7, 11]
    f, g = poly_from_roots(A), poly_from_roots(B)
    for p in range(4):
        q = 3 - p
        expected = f.scale(comb(2, q)) + g.scale(comb(2, p))
        assert sylvester_double_sum(A, B, p, q) == expected == main_theorem_rhs(A, B, p, q)


@pytest.mark.parametrize("A, B", [([1, 2], [3, 4]), ([2], [3]), ([1, 2], [5, 6, 7, 8]), ([1, 2], [3, 5, 7, 9, 11])])
def test_verify_main_theorem_examples(A, B):
    rep = verify_main_theorem(A, B)
    assert rep.passed
    assert len(rep.checks) == (len(A) + 1) * (len(B) + 1)


def test_zero_branch_exercised():
    rep = verify_main_theorem([1, 2], [3, 5, 7, 9, 11])
    assert any(c.case == "ZeroBranch" for c in rep.checks)


@pytest.mark.parametrize("A, B", [([2], [3]), ([1, 2], [3, 4, 5]), ([1], [3, 4, 5, 6])])
def test_verify_matrix_suite_examples(A, B):
    rep = verify_matrix_suite(A, B)
    assert rep.passed, rep.failures()


def test_matrix_suite_vanishing_recorded():
    rep = verify_matrix_suite([1], [3, 4, 5, 6])
    assert [c.name for c in rep.checks if c.name.startswith("vanishing")] == ["vanishing[d=2]"]


def test_report_records_witness_on_failure():
    rep = verify_main_theorem([1, 2], [3, 4])
    rep.add("bogus", Branch.SRES, False, UniPoly([1]), UniPoly([2]))
    assert not rep.passed
    assert rep.failures()[0].witness == ("1", "2")
    assert rep.to_json()["pass"] is False


def test_random_instance_golden():
    A, B = random_instance(2, 2, 42)
    assert A == (Fraction(16), Fraction(-31, 3))
    assert B == (Fraction(-37, 8), Fraction(-16))
    assert random_instance(1, 1, 0) == random_instance(1, 1, 0)
    assert random_instance(2, 3, 7) == ((Fraction(-17, 5), Fraction(1)),
                                        (Fraction(-9, 2), Fraction(-25, 4), Fraction(25)))


@given(st.integers(min_value=1, max_value=5), st.integers(min_value=0, max_value=5),
       st.integers(min_value=0, max_value=2**64 - 1))
def test_random_instance_contract(m, extra, seed):
    A, B = random_instance(m, m + extra, seed)
    vals = list(A) + list(B)
    assert len(A) == m and len(B) == m + extra
    assert len(set(vals)) == len(vals)
    for v in vals:
        assert -99 <= v.numerator <= 99 and 1 <= v.denominator <= 20


def test_run_suites_all():
    rep = run_suites(2, 3, 7, "all")
    assert rep.passed
    assert rep.to_json()["seed"] == 7
