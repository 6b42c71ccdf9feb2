from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from vndim.gaussian import I, ONE, ZERO, GaussRational, gaussian_gcd, parse_coeff

rats = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 1000)
gauss = st.builds(GaussRational, rats, rats)


@given(gauss, gauss, gauss)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    if b:
        assert (a / b) * b == a


@given(gauss)
def test_parts_and_canonical_form(a):
    assert GaussRational(a.re, a.im) == a
    assert hash(GaussRational(a.re, a.im)) == hash(a)
    assert a.conjugate().conjugate() == a
    assert (a * a.conjugate()).im == 0
    assert (a * a.conjugate()).re == a.norm()


def test_mixed_arithmetic():
    assert GaussRational(1, 2) + 1 == GaussRational(2, 2)
    assert 1 - I == GaussRational(1, -1)
    assert I * I == -ONE
    assert GaussRational(Fraction(1, 2)) == Fraction(1, 2)
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


@given(gauss)
def test_text_round_trip(a):
    assert parse_coeff(str(a)) == a


@pytest.mark.parametrize(
    "text,value",
    [("3", GaussRational(3)), ("-1/2", GaussRational(Fraction(-1, 2))), ("2*i", GaussRational(0, 2)),
     ("1/2+3/4*i", GaussRational(Fraction(1, 2), Fraction(3, 4))), ("1-1*i", GaussRational(1, -1))],
)
def test_parse_coeff(text, value):
    assert parse_coeff(text) == value


@given(st.integers(-30, 30), st.integers(-30, 30), st.integers(-30, 30), st.integers(-30, 30))
def test_gaussian_gcd_divides(a, b, c, d):
    g = gaussian_gcd((a, b), (c, d))
    if g == (0, 0):
        assert (a, b, c, d) == (0, 0, 0, 0)
        return
    G = GaussRational(*g)
    for z in (GaussRational(a, b), GaussRational(c, d)):
        q = z / G
        assert q.re.denominator == 1 and q.im.denominator == 1
    assert g[0] > 0 and g[1] >= 0


def test_gaussian_gcd_examples():
    # 5 = (2+i)(2-i); gcd(5, 2+i) is an associate of 2+i
    assert gaussian_gcd((5, 0), (2, 1)) in {(2, 1), (1, 2)}
    assert gaussian_gcd((0, 0), (0, -3)) == (3, 0)
    assert gaussian_gcd((2, 0), (1, 1)) == (1, 1)
