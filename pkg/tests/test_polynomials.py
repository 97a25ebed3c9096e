import pytest
from hypothesis import given
from hypothesis import strategies as st

from imbalance.polynomials import (
    ONE, Q, ZERO, MultiPoly, QPoly, binomial_power, one_minus_q_power, q_binomial,
    q_factorial, q_int,
)

coeff_lists = st.lists(st.integers(-20, 20), max_size=7)


def test_trailing_zeros_are_trimmed():
    assert QPoly([1, 2, 0, 0]).coeffs == (1, 2)
    assert QPoly([0, 0]).is_zero()
    assert ZERO.degree == -1 or ZERO.is_zero()


def test_evaluation_and_integer_comparison():
    p = QPoly([1, 1])
    assert p(1) == 2 and p(-1) == 0
    assert ONE == 1
    assert Q * Q == QPoly.monomial(2)


def test_q_binomial_small_values():
    assert q_binomial(5, 0) == 1
    assert q_binomial(3, 1) == QPoly([1, 1, 1])
    assert q_binomial(3, 1)(-1) == 1
    assert q_binomial(4, 2) == QPoly([1, 1, 2, 1, 1])
    with pytest.raises(ValueError):
        q_binomial(3, 4)


def test_q_factorial_is_product_of_q_integers():
    assert q_factorial(3) == q_int(1) * q_int(2) * q_int(3)
    assert q_factorial(4)(1) == 24


def test_exact_division():
    num = one_minus_q_power(6)
    assert num.exact_div(one_minus_q_power(2)) == QPoly([1, 0, 1, 0, 1])
    with pytest.raises(ArithmeticError):
        one_minus_q_power(5).exact_div(one_minus_q_power(2))


def test_strip_low_and_palindrome():
    p = QPoly([0, 0, 1, 3, 1])
    assert p.low_degree == 2
    assert p.strip_low() == QPoly([1, 3, 1])
    assert p.is_palindromic(6)
    assert not p.is_palindromic(5)


@given(coeff_lists, coeff_lists, coeff_lists)
def test_ring_axioms(a, b, c):
    a, b, c = QPoly(a), QPoly(b), QPoly(c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) - b == a
    assert a * b == b * a


@given(coeff_lists, st.lists(st.integers(-5, 5), max_size=4), st.sampled_from([1, -1]))
def test_divmod_reconstructs(a, low, lead):
    a, b = QPoly(a), QPoly(low + [lead])
    quo, rem = a.divmod(b)
    assert quo * b + rem == a
    assert rem.is_zero() or rem.degree < b.degree


@given(st.integers(0, 9), st.integers(0, 9))
def test_q_binomial_symmetry_and_value_at_one(n, k):
    if k > n:
        return
    from math import comb

    p = q_binomial(n, k)
    assert p == q_binomial(n, n - k)
    assert p(1) == comb(n, k)
    assert p.is_palindromic(k * (n - k))


def test_multipoly_basics():
    q, x = MultiPoly.variable(2, 0), MultiPoly.variable(2, 1)
    assert (q + x) ** 2 == q * q + (q * x).scale(2) + x * x
    assert binomial_power(2, 0, 1, 3) == (q + x) ** 3
    assert ((q + x) * x).substitute_zero(1) == MultiPoly(2)
    assert (q + x).uses_variable(1)
    assert (q + x).format(["q", "x"]) in ("q + x", "x + q")
