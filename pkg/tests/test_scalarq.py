"""Exact-arithmetic tests for the coefficient field Q(q) and its q-combinatorics."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qsialg.scalarq import PoleAtPoint, ScalarQ, eval_at, qbinom, qfact, qint, qsym

Q = ScalarQ.gen()


def poly(*cs: int) -> ScalarQ:
    """Ascending-degree integer polynomial in q."""
    return ScalarQ(list(cs))


# -- frozen values ----------------------------------------------------------

def test_qint_values():
    assert qint(3) == poly(1, 1, 1)
    assert qint(0) == ScalarQ.zero()
    assert qint(1) == ScalarQ.one()


def test_qfact_values():
    assert qfact(0) == ScalarQ.one()
    assert qfact(2) == poly(1, 1)
    # (1+q+q^2)(1+q) expanded
    assert qfact(3) == poly(1, 2, 2, 1)


def test_qbinom_values():
    assert qbinom(1, 1) == poly(1, 1)
    for n in range(6):
        assert qbinom(0, n) == ScalarQ.one()
        assert qbinom(n, 0) == ScalarQ.one()
    assert qbinom(2, 1) == poly(1, 1, 1)
    assert qbinom(2, 2) == poly(1, 1, 2, 1, 1)


def test_qsym_values():
    assert qsym(1) == ScalarQ.one()
    assert qsym(0) == ScalarQ.zero()
    assert qsym(2) == ScalarQ((1, 0, 1), (0, 1))  # (q^2+1)/q
    assert qsym(-2) == -qsym(2)
    assert qsym(3) == (Q ** 2 + 1 + Q ** -2)


def test_eval_at_values():
    assert eval_at(qsym(2), 1) == 2
    assert eval_at(qint(3), 1) == 3
    assert eval_at(qbinom(1, 1), 2) == 3
    assert eval_at(Q ** -2, Fraction(1, 2)) == 4


def test_eval_at_errors():
    with pytest.raises(PoleAtPoint):
        eval_at(1 / (Q - 1), 1)
    with pytest.raises(ValueError):
        eval_at(Q, 0)


# -- independent oracle: Pascal-style recurrence ------------------------------

def binom_by_recurrence(n: int, k: int) -> ScalarQ:
    """Gaussian C(n, k)_q built only from the q-Pascal recurrence."""
    if k < 0 or k > n:
        return ScalarQ.zero()
    row = [ScalarQ.one()]
    for m in range(1, n + 1):
        new = [ScalarQ.one()]
        for j in range(1, m):
            new.append(row[j - 1] + ScalarQ.q_power(j) * row[j])
        new.append(ScalarQ.one())
        row = new
    return row[k]


def test_qbinom_matches_recurrence_oracle():
    for n in range(0, 9):
        for k in range(0, n + 1):
            assert qbinom(n - k, k) == binom_by_recurrence(n, k)


def test_q_pascal_identity():
    for n in range(1, 9):
        for k in range(1, n):
            lhs = qbinom(n - k, k)
            rhs = qbinom(n - k, k - 1) + ScalarQ.q_power(k) * qbinom(n - k - 1, k)
            assert lhs == rhs
        assert qbinom(0, n) == qbinom(0, n - 1)  # k = n edge: top coefficient is 1


def test_qbinom_polynomial_nonnegative():
    for i in range(13):
        for j in range(13 - i):
            b = qbinom(i, j)
            assert b.den == (1,), f"binom({i},{j}) is not a polynomial"
            assert all(c >= 0 for c in b.num)


def test_classical_specialization():
    for n in range(1, 9):
        assert eval_at(qint(n), 1) == n
        assert eval_at(qsym(n), 1) == n


# -- canonical form and field laws --------------------------------------------

def test_canonical_form():
    s = ScalarQ((0, 1, 1), (0, 1))  # (q + q^2)/q
    assert s == poly(1, 1)
    t = ScalarQ((1,), (-1, 1))
    assert t.den[-1] > 0
    assert ScalarQ((2, 2), (4,)) == ScalarQ((1, 1), (2,))


def test_cancellation_example():
    assert (Q ** 2 - 1) / (Q - 1) == qint(2)


scalars = st.builds(
    lambda num, den: ScalarQ(num, den if any(den) else [1]),
    st.lists(st.integers(-4, 4), min_size=0, max_size=4),
    st.lists(st.integers(-4, 4), min_size=1, max_size=3),
)


@settings(max_examples=60, deadline=None)
@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert a + ScalarQ.zero() == a
    assert a * ScalarQ.one() == a
    if not a.is_zero():
        assert a * a.inverse() == ScalarQ.one()


@settings(max_examples=40, deadline=None)
@given(scalars)
def test_sub_and_pow(a):
    assert a - a == ScalarQ.zero()
    assert a ** 2 == a * a
    if not a.is_zero():
        assert a ** -1 == a.inverse()
        assert a ** -2 == (a * a).inverse()


def test_hash_consistency():
    assert hash(poly(1, 1)) == hash(qint(2))
    d = {qint(2): "two"}
    assert d[poly(1, 1)] == "two"
