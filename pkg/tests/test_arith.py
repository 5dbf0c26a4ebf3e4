from fractions import Fraction

import pytest
from hypothesis import given

from sylvsums.arith import (
    ZERO_DEGREE,
    BiPoly,
    UniPoly,
    binomial,
    coeff_of_T,
    eval_poly,
    monic_from_coeffs,
    parse_rat,
    poly_from_roots,
    sign_pow,
)
from sylvsums.errors import DomainError, NonMonicError

from strategies import bipolys, distinct_rats, small_rats, unipolys


def test_rational_arithmetic():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)
    half = Fraction(2, 4)
    assert (half.numerator, half.denominator) == (1, 2)
    assert (Fraction(0, 7).numerator, Fraction(0, 7).denominator) == (0, 1)
    with pytest.raises(ZeroDivisionError):
        Fraction(3) / 0


@pytest.mark.parametrize(
    "text, value",
    [("7", Fraction(7)), ("-3/4", Fraction(-3, 4)), ("2/4", Fraction(1, 2)), ("−5", Fraction(-5))],
)
def test_parse_rat(text, value):
    assert parse_rat(text) == value


@pytest.mark.parametrize("text", ["", "1.5", "3/0", "1/-2", "x", "--1", "1/2/3"])
def test_parse_rat_rejects(text):
    with pytest.raises(ValueError):
        parse_rat(text)


@pytest.mark.parametrize("n, k, expected", [(4, 2, 6), (3, 5, 0), (0, 0, 1), (5, -1, 0), (6, 6, 1)])
def test_binomial(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_negative_n():
    with pytest.raises(DomainError):
        binomial(-1, 0)


@pytest.mark.parametrize("e, expected", [(0, 1), (-3, -1), (1 * (2 - 1), -1), (-4, 1), (7, -1)])
def test_sign_pow(e, expected):
    assert sign_pow(e) == expected


def test_poly_products(x):
    assert (x - 1) * (x - 2) == UniPoly([2, -3, 1])
    p = UniPoly([1, 2, 3])
    assert p + UniPoly() == p
    assert str(UniPoly([14, -10, 2])) == "2*x^2 - 10*x + 14"
    assert str(UniPoly([Fraction(-1, 2), 0, -1])) == "-x^2 - 1/2"
    assert str(UniPoly()) == "0"


def test_bipoly_from_hand_expansion(x):
    T = BiPoly.T()
    p = (x - 2) - T * (x - 3)
    assert p.t_coeffs == (UniPoly([-2, 1]), UniPoly([3, -1]))
    assert coeff_of_T(p, 1) == UniPoly([3, -1])
    assert coeff_of_T(p, 7).is_zero()
    assert p.eval_T(1) == UniPoly([1])
    assert p.eval_x(3) == BiPoly([[1]])
    assert str(p) == "-x*T + 3*T + x - 2"


def test_poly_from_roots():
    assert poly_from_roots([1, 2]) == UniPoly([2, -3, 1])
    assert poly_from_roots([]) == UniPoly([1])
    assert poly_from_roots([3, 4]) == UniPoly([12, -7, 1])


def test_eval_and_degree():
    assert eval_poly(UniPoly([2, -3, 1]), 3) == 2
    assert UniPoly().degree == ZERO_DEGREE
    assert UniPoly().degree < -10**9
    assert UniPoly([0, 0, 0]).coeffs == ()


def test_monic_from_coeffs():
    assert monic_from_coeffs([2, -3, 1]) == UniPoly([2, -3, 1])
    with pytest.raises(NonMonicError):
        monic_from_coeffs([2, -3, 2])


@given(unipolys, unipolys, unipolys)
def test_unipoly_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a - a == UniPoly()


@given(bipolys, bipolys, bipolys)
def test_bipoly_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(unipolys, unipolys)
def test_degree_of_product(a, b):
    if a and b:
        assert (a * b).degree == a.degree + b.degree


@given(distinct_rats())
def test_poly_from_roots_vanishes(roots):
    f = poly_from_roots(roots)
    assert f.is_monic() and f.degree == len(roots)
    assert all(f(r) == 0 for r in roots)


@given(unipolys)
def test_canonical_idempotent(p):
    assert UniPoly(p.coeffs) == p
    assert UniPoly(list(p.coeffs) + [0, 0]).coeffs == p.coeffs


@given(bipolys, small_rats)
def test_eval_T_matches_coefficient_sum(p, t):
    expected = UniPoly()
    for j, u in enumerate(p.t_coeffs):
        expected = expected + u.scale(t ** j)
    assert p.eval_T(t) == expected
