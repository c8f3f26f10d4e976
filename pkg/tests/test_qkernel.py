"""q-calculus primitives and the two q-exponential routes."""

import pytest

from qpoly.field import RationalFunction as RF
from qpoly.qkernel import (
    IndexOutOfRange,
    QBase,
    q_binomial,
    q_exp_product_form,
    q_exp_sum,
    q_factorial,
    q_number,
    q_pochhammer,
    quesne_c,
    quesne_series,
)
from qpoly.series import NonzeroConstantTerm, Ring, TruncatedSeries

ONE = RF.one()
Q = RF.q()
RF_RING = Ring(RF.zero(), ONE)


def t_series(order):
    return TruncatedSeries.monomial(RF_RING, ONE, 1, order)


# ---------------------------------------------------------------------------
# q-numbers, factorials, binomials, Pochhammer
# ---------------------------------------------------------------------------

def test_q_number_zero():
    assert q_number(0).is_zero()


def test_q_number_three():
    assert q_number(3) == ONE + Q + Q**2


def test_q_number_inverse_base():
    assert q_number(2, QBase.q_pow(-2)) == ONE + RF.q_power(-2)


def test_q_factorial_empty():
    assert q_factorial(0) == ONE


def test_q_binomial_examples():
    assert q_binomial(3, 1) == ONE + Q + Q**2
    assert q_binomial(5, 0) == ONE
    with pytest.raises(IndexOutOfRange):
        q_binomial(3, 4)
    with pytest.raises(IndexOutOfRange):
        q_binomial(3, -1)


def test_q_binomial_is_polynomial():
    for n in range(8):
        for k in range(n + 1):
            assert q_binomial(n, k).den.is_one()


def test_q_binomial_symmetry():
    for n in range(9):
        for k in range(n + 1):
            assert q_binomial(n, k) == q_binomial(n, n - k)


def test_q_pochhammer_examples():
    base = QBase.q()
    assert q_pochhammer(RF.lam(), base, 0) == ONE
    assert q_pochhammer(RF.lam(), base, 1) == ONE - RF.lam()
    assert q_pochhammer(Q, base, 2) == (ONE - Q) * (ONE - Q**2)


# ---------------------------------------------------------------------------
# Quesne coefficients
# ---------------------------------------------------------------------------

def test_quesne_c_small():
    assert quesne_c(1) == ONE
    assert quesne_c(2) == (ONE - Q) / ((ONE + Q) * 2)
    assert quesne_c(3) == (ONE - Q) ** 2 / ((ONE + Q + Q**2) * 3)


def test_quesne_c_classical_limit():
    assert quesne_c(1).limit_q_to_1() == 1
    for k in range(2, 7):
        assert quesne_c(k).limit_q_to_1() == 0


# ---------------------------------------------------------------------------
# q-exponentials
# ---------------------------------------------------------------------------

def test_q_exp_sum_coefficients():
    arg = t_series(4)
    little = q_exp_sum("e", arg, QBase.q())
    big = q_exp_sum("E", arg, QBase.q())
    assert little.coeff(1) == ONE / (ONE - Q)
    assert big.coeff(2) == Q / ((ONE - Q) * (ONE - Q**2))
    assert big.coeff(1) == ONE / (ONE - Q)


def test_q_exp_zero_argument():
    zero_arg = TruncatedSeries.zero(RF_RING, 5)
    for kind in ("e", "E"):
        assert q_exp_sum(kind, zero_arg, QBase.q()) == TruncatedSeries.one(RF_RING, 5)
        assert q_exp_product_form(kind, zero_arg, QBase.q()) == TruncatedSeries.one(RF_RING, 5)


def test_q_exp_rejects_constant_term():
    bad = TruncatedSeries.one(RF_RING, 4)
    with pytest.raises(NonzeroConstantTerm):
        q_exp_sum("e", bad, QBase.q())
    with pytest.raises(NonzeroConstantTerm):
        q_exp_product_form("E", bad, QBase.q())


@pytest.mark.parametrize("exp", [1, -2, -4])
@pytest.mark.parametrize("kind", ["e", "E"])
def test_quesne_identity(exp, kind):
    # the defining sum and the exp-of-log-series forms agree exactly
    arg = t_series(12)
    base = QBase.q_pow(exp)
    assert q_exp_sum(kind, arg, base) == q_exp_product_form(kind, arg, base)


def test_inverse_identity():
    arg = t_series(12)
    base = QBase.q()
    product = q_exp_sum("e", arg, base) * q_exp_sum("E", -arg, base)
    assert product == TruncatedSeries.one(RF_RING, 12)


def test_physicists_exponential_scaling():
    # exp of sum_k c_k z^k equals the little q-exponential at (1-q)z
    arg = t_series(10)
    assert quesne_series(arg, QBase.q()) == q_exp_sum("e", arg.scale(ONE - Q), QBase.q())


def test_base_must_not_be_one():
    with pytest.raises(ValueError):
        QBase(ONE)
    with pytest.raises(ValueError):
        QBase.q_pow(0)
