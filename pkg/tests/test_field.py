"""Exact rational-function field: canonical forms, field laws, limits."""

import random

import pytest

from qpoly.field import (
    DivisionByZero,
    IntPoly,
    LambdaPresent,
    NumericPole,
    PoleAtOne,
    RationalFunction as RF,
    parse_rational,
    poly_gcd,
)

ONE = RF.one()
Q = RF.q()
LAM = RF.lam()


# ---------------------------------------------------------------------------
# canonical forms
# ---------------------------------------------------------------------------

def test_geometric_sum_cancels():
    f = (ONE - Q**3) / (ONE - Q)
    assert f.den.is_one()
    assert f == ONE + Q + Q**2


def test_doubling():
    g = (ONE - Q) / (ONE + Q)
    assert g + g == (ONE - Q) * 2 / (ONE + Q)


def test_inverse_monomial():
    h = RF.s_power(-45)
    assert h * RF.s_power(45) == ONE
    assert str(h) == "q^{-45/2}"


def test_zero_representation():
    z = Q - Q
    assert z.is_zero()
    assert z.num.is_zero() and z.den.is_one()


def test_denominator_leading_positive():
    f = ONE / (RF.from_int(-2) * Q + ONE)  # den -2q + 1 flips sign
    assert f.den.leading_coeff() > 0


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        ONE / (Q - Q)
    with pytest.raises(DivisionByZero):
        (Q - Q) ** (-1)


def test_negative_powers():
    f = (ONE + Q) ** (-2)
    assert f * (ONE + Q) ** 2 == ONE


# ---------------------------------------------------------------------------
# q -> 1 limits
# ---------------------------------------------------------------------------

def test_limit_q_number_7():
    n7 = (ONE - Q**7) / (ONE - Q)
    assert n7.limit_q_to_1() == 7


@pytest.mark.parametrize("n", range(1, 21))
def test_limit_q_number_sweep(n):
    assert ((ONE - Q**n) / (ONE - Q)).limit_q_to_1() == n


def test_limit_quesne_c2():
    c2 = (ONE - Q) / ((ONE + Q) * 2)
    assert c2.limit_q_to_1() == 0


def test_limit_pole():
    with pytest.raises(PoleAtOne):
        (ONE / (ONE - Q)).limit_q_to_1()


def test_limit_lambda_rejected():
    with pytest.raises(LambdaPresent):
        LAM.limit_q_to_1()


# ---------------------------------------------------------------------------
# numeric evaluation
# ---------------------------------------------------------------------------

def test_eval_numeric_polynomial():
    f = ONE + Q + Q**2
    assert abs(f.eval_numeric(0.7**0.5) - 2.19) < 1e-12


def test_eval_numeric_quesne_c2():
    c2 = (ONE - Q) / ((ONE + Q) * 2)
    assert abs(c2.eval_numeric(0.5**0.5) - 1 / 6) < 1e-12


def test_eval_numeric_pole():
    with pytest.raises(NumericPole):
        (ONE / (ONE - Q)).eval_numeric(1.0)


def test_eval_numeric_agrees_with_limit():
    # central average at s = 1 +/- eps cancels the first-order term
    eps = 1e-6
    for f in [(ONE - Q**7) / (ONE - Q), (ONE - Q) / ((ONE + Q) * 2), (ONE + Q) ** 3]:
        exact = float(f.limit_q_to_1())
        approx = (f.eval_numeric(1.0 + eps) + f.eval_numeric(1.0 - eps)) / 2
        assert abs(approx - exact) < 1e-8


# ---------------------------------------------------------------------------
# randomized field laws (canonical idempotence included)
# ---------------------------------------------------------------------------

def _random_poly(rng, allow_lam=True):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        es = rng.randint(0, 4)
        el = rng.randint(0, 1) if allow_lam and rng.random() < 0.3 else 0
        terms[(es, el)] = rng.randint(-4, 4)
    return IntPoly(terms)


def _random_rf(rng, allow_lam=True):
    num = _random_poly(rng, allow_lam)
    den = _random_poly(rng, allow_lam)
    while den.is_zero():
        den = _random_poly(rng, allow_lam)
    return RF(num, den)


def test_field_laws_randomized():
    rng = random.Random(1234)
    for case in range(500):
        a = _random_rf(rng)
        b = _random_rf(rng)
        while b.is_zero():
            b = _random_rf(rng)
        assert (a * b) / b == a, f"case {case}"
        assert (a + (-a)).is_zero(), f"case {case}"
        assert a + b == b + a, f"case {case}"


def test_canonical_idempotence_randomized():
    # re-canonicalizing a canonical element and inflating num/den by a common
    # factor both land on the same representation
    rng = random.Random(99)
    for _ in range(200):
        f = _random_rf(rng) * _random_rf(rng)
        again = RF(f.num, f.den)
        assert again.num == f.num and again.den == f.den
        g = _random_poly(rng)
        if g.is_zero():
            continue
        inflated = RF(f.num * g, f.den * g)
        assert inflated == f


def test_coprime_invariant_randomized():
    rng = random.Random(7)
    for _ in range(100):
        f = _random_rf(rng)
        if rng.random() < 0.5:
            g = _random_rf(rng)
            if not g.is_zero():
                f = f / g
        if f.is_zero():
            continue
        assert poly_gcd(f.num, f.den).is_one()


# ---------------------------------------------------------------------------
# text round trip
# ---------------------------------------------------------------------------

def test_parse_print_round_trip_examples():
    for text in ["0", "1", "q^{2} + q + 1", "q^{-45/2}", "(-q + 1)/(2*q + 2)",
                 "(lam^{2} - 1)/(q^{2} - 1)", "-q + 5", "2*q^{1/2}"]:
        assert str(parse_rational(text)) == text


def test_parse_print_round_trip_randomized():
    rng = random.Random(5)
    for _ in range(200):
        f = _random_rf(rng)
        assert parse_rational(str(f)) == f
