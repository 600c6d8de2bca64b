from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from genusbound._exact import bezout, det_int, nullspace, primitive_integer, rank, to_fraction, xgcd
from genusbound.errors import InputError, PreconditionError

ints = st.integers(-10**6, 10**6)


@given(ints, ints)
def test_xgcd_identity(a, b):
    d, x, y = xgcd(a, b)
    assert d == sympy.igcd(a, b)
    assert x * a + y * b == d


@pytest.mark.parametrize("a,b,expected", [((2), 3, (2, -1)), (1, 0, (1, 0)), (-1, 0, (-1, 0)), (0, 1, (0, 1))])
def test_bezout_examples(a, b, expected):
    assert bezout(a, b) == expected


@given(ints, ints)
def test_bezout_canonical(a, b):
    if sympy.igcd(a, b) != 1:
        with pytest.raises(PreconditionError):
            bezout(a, b)
        return
    p, q = bezout(a, b)
    assert p * a + q * b == 1
    if b:
        assert 0 <= p < abs(b)


def test_to_fraction():
    assert to_fraction("3/4") == Fraction(3, 4)
    assert to_fraction("-2") == -2
    assert to_fraction(5) == 5
    for bad in (0.5, "1/0", "x", True, None):
        with pytest.raises(InputError):
            to_fraction(bad)


matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 6).flatmap(
        lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


@given(matrices)
def test_rank_and_kernel_match_sympy(rows):
    M = sympy.Matrix(rows)
    assert rank(rows) == M.rank()
    ker = nullspace(rows, len(rows[0]))
    assert len(ker) == len(rows[0]) - M.rank()
    for v in ker:
        assert all(sum(Fraction(a) * x for a, x in zip(row, v)) == 0 for row in rows)
    if ker:
        assert sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in v] for v in ker]).rank() == len(ker)


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(st.integers(-9, 9), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_det_matches_sympy(rows):
    assert det_int(rows) == sympy.Matrix(rows).det()


def test_primitive_integer():
    assert primitive_integer([Fraction(1, 2), Fraction(-1, 3), 0]) == [3, -2, 0]
    with pytest.raises(PreconditionError):
        primitive_integer([0, 0])
