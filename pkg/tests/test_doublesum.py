from fractions import Fraction
from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sylvsums.arith import UniPoly, poly_from_roots
from sylvsums.doublesum import double_sum_terms, enumerate_subsets, sylvester_double_sum
from sylvsums.errors import DomainError
from sylvsums.linalg import r_product
from sylvsums.subres import resultant

from strategies import distinct_rats


def pointwise_double_sum(A, B, p, q, x0):
    """The defining sum evaluated at x = x0, straight from the formula."""
    total = Fraction(0)
    for Ai in combinations(range(len(A)), p):
        A1 = [A[i] for i in Ai]
        A2 = [a for i, a in enumerate(A) if i not in Ai]
        for Bi in combinations(range(len(B)), q):
            B1 = [B[i] for i in Bi]
            B2 = [b for i, b in enumerate(B) if i not in Bi]
            num = r_product([x0], A1) * r_product([x0], B1) * r_product(A1, B1) * r_product(A2, B2)
            total += num / (r_product(A1, A2) * r_product(B1, B2))
    return total


def test_enumerate_subsets_examples():
    sels = list(enumerate_subsets([1, 2], 1))
    assert [(s.chosen, s.complement, s.sign) for s in sels] == [((1,), (2,), 1), ((2,), (1,), -1)]
    (only,) = enumerate_subsets([1, 2, 3], 0)
    assert only.chosen == () and only.complement == (1, 2, 3) and only.sign == 1


def test_enumerate_subsets_range():
    with pytest.raises(DomainError):
        list(enumerate_subsets([1, 2], 3))


@given(st.integers(min_value=0, max_value=6), st.data())
def test_subset_sign_is_parity_of_inversions(n, data):
    size = data.draw(st.integers(min_value=0, max_value=n))
    L = list(range(n))
    sels = list(enumerate_subsets(L, size))
    assert len(sels) == comb(n, size)
    for s in sels:
        perm = list(s.chosen) + list(s.complement)
        assert sorted(perm) == L
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        assert s.sign == (-1) ** inv


def test_double_sum_examples():
    assert sylvester_double_sum([2], [3], 0, 0) == UniPoly([-1])
    assert sylvester_double_sum([1, 2], [3, 4], 1, 1) == UniPoly([14, -10, 2])
    assert sylvester_double_sum([1, 2], [3, 4], 1, 0) == UniPoly([-10, 4])


def test_double_sum_range_checks():
    with pytest.raises(DomainError):
        sylvester_double_sum([1, 2], [3], 3, 0)
    with pytest.raises(DomainError):
        sylvester_double_sum([1], [3], 0, -1)


def test_overlapping_lists_allowed():
    # A and B share 2; only within-list distinctness is required
    assert sylvester_double_sum([1, 2], [2, 3], 0, 0) == UniPoly([r_product([1, 2], [2, 3])])


@settings(max_examples=30, deadline=None)
@given(distinct_rats(min_size=2, max_size=7), st.data())
def test_matches_pointwise_formula(vals, data):
    m = data.draw(st.integers(min_value=1, max_value=len(vals) - 1))
    A, B = vals[:m], vals[m:]
    p = data.draw(st.integers(min_value=0, max_value=len(A)))
    q = data.draw(st.integers(min_value=0, max_value=len(B)))
    s = sylvester_double_sum(A, B, p, q)
    assert s.degree <= p + q
    for x0 in (Fraction(0), Fraction(1, 3), Fraction(-7, 2)):
        assert s(x0) == pointwise_double_sum(A, B, p, q, x0)


@settings(max_examples=20, deadline=None)
@given(distinct_rats(min_size=2, max_size=7), st.data())
def test_permutation_invariance(vals, data):
    m = data.draw(st.integers(min_value=1, max_value=len(vals) - 1))
    A, B = vals[:m], vals[m:]
    p = data.draw(st.integers(min_value=0, max_value=len(A)))
    q = data.draw(st.integers(min_value=0, max_value=len(B)))
    A2 = data.draw(st.permutations(A))
    B2 = data.draw(st.permutations(B))
    assert sylvester_double_sum(A, B, p, q) == sylvester_double_sum(A2, B2, p, q)


@pytest.mark.parametrize("m, n, p, q", [(3, 4, 1, 2), (2, 5, 2, 3), (4, 4, 0, 4), (1, 1, 1, 0)])
def test_term_count(m, n, p, q):
    A = list(range(m))
    B = [Fraction(1, 2) + i for i in range(n)]
    assert sum(1 for _ in double_sum_terms(A, B, p, q)) == comb(m, p) * comb(n, q)


@settings(max_examples=20, deadline=None)
@given(distinct_rats(min_size=2, max_size=7), st.data())
def test_full_selection_is_res_f_g(vals, data):
    m = data.draw(st.integers(min_value=1, max_value=len(vals) - 1))
    A, B = vals[:m], vals[m:]
    f, g = poly_from_roots(A), poly_from_roots(B)
    assert sylvester_double_sum(A, B, len(A), len(B)) == (f * g).scale(resultant(f, g))
    assert resultant(f, g) == r_product(A, B)
