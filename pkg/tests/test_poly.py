import pytest
from hypothesis import given, strategies as st

from rennerhecke.poly import ONE, Q, ZERO, IntPolynomial

polys = st.lists(st.integers(-50, 50), max_size=6).map(lambda c: IntPolynomial(tuple(c)))


def test_examples():
    assert str((Q - 1) * Q) == "q^2-q"
    assert IntPolynomial.parse("q^2-q").eval_at(2) == 2
    assert (Q + 1) * (Q + 1) == IntPolynomial((1, 2, 1))
    assert str((Q + 1) * (Q + 1)) == "q^2+2q+1"


def test_normalization():
    assert IntPolynomial((1, 0, 0)).coeffs == (1,)
    assert ZERO.coeffs == () and not ZERO
    assert str(ZERO) == "0"
    assert str(IntPolynomial((0, -3))) == "-3q"


def test_no_overflow():
    big = Q.scalar(10 ** 30) + 1
    assert (big * big).coeffs == (1, 2 * 10 ** 30, 10 ** 60)


@pytest.mark.parametrize("text", ["", "q^", "2x", "++q"])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        IntPolynomial.parse(text)


@given(polys)
def test_parse_round_trip(p):
    assert IntPolynomial.parse(str(p)) == p


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a * ONE == a and a + ZERO == a
    assert a - a == ZERO


@given(polys, polys, st.integers(-5, 5))
def test_evaluation_is_a_homomorphism(a, b, q0):
    assert (a * b).eval_at(q0) == a.eval_at(q0) * b.eval_at(q0)
    assert (a + b).eval_at(q0) == a.eval_at(q0) + b.eval_at(q0)
    if a and b:
        assert (a * b).degree == a.degree + b.degree
