"""Partition enumeration and the three connection engines."""

import cmath
import itertools
import math
import random
from fractions import Fraction

import pytest

from qpoly.field import RationalFunction as RF
from qpoly.families import (
    gegenbauer_weight,
    q_gegenbauer_direct,
    q_hermite,
    q_laguerre,
)
from qpoly.connection import (
    BetaPolynomial,
    LambdaPolynomial,
    gegenbauer_classical_lambda,
    gegenbauer_connection,
    gegenbauer_connection_value,
    gegenbauer_sum_rule,
    hermite_connection,
    laguerre_connection,
    laguerre_partitions,
    partitions_of,
    pochhammer,
    substitute_beta,
    sum_rule_explicit,
)
from qpoly.verify import (
    gegenbauer_displayed_connection,
    hermite5_reference,
    laguerre33_reference,
)


# ---------------------------------------------------------------------------
# integer partitions
# ---------------------------------------------------------------------------

def brute_partitions(n):
    """Independent enumeration: ascending parts lists."""
    def gen(m, minpart):
        if m == 0:
            yield ()
        for p in range(minpart, m + 1):
            for rest in gen(m - p, p):
                yield (p,) + rest
    return list(gen(n, 1))


def partition_count_dp(n):
    """Independent count via the coin-style recurrence."""
    dp = [1] + [0] * n
    for part in range(1, n + 1):
        for i in range(part, n + 1):
            dp[i] += dp[i - part]
    return dp[n]


def test_partitions_trivial():
    sols = partitions_of(0)
    assert len(sols) == 1 and sols[0].parts == ()


def test_partitions_counts():
    assert len(partitions_of(5)) == 7
    assert len(partitions_of(10)) == 42


def test_partitions_vs_brute_force():
    for n in range(13):
        sols = partitions_of(n)
        assert len(sols) == partition_count_dp(n)
        got = {sol.parts for sol in sols}
        expected = set()
        for parts in brute_partitions(n):
            mult = {}
            for p in parts:
                mult[p] = mult.get(p, 0) + 1
            expected.add(tuple(sorted(mult.items())))
        assert got == expected
        assert all(sol.target == n for sol in sols)


def test_partitions_order_deterministic():
    # parts-descending lexicographic: [n] first, all-ones last
    sols = partitions_of(5)
    as_lists = []
    for sol in sols:
        parts = []
        for k, m in sorted(sol.parts, reverse=True):
            parts.extend([k] * m)
        as_lists.append(tuple(parts))
    assert as_lists == sorted(as_lists, reverse=True)
    assert as_lists[0] == (5,)
    assert as_lists[-1] == (1,) * 5


# ---------------------------------------------------------------------------
# Laguerre partition solutions
# ---------------------------------------------------------------------------

# first column of the contribution table at n = 3, k = 3, as
# (l, ((j, k_j), ...), ((j, l_j), ...))
TABLE2_SOLUTIONS = {
    (0, ((1, 3),), ()),
    (0, (), ((1, 3),)),
    (3, (), ()),
    (0, ((3, 1),), ()),
    (0, (), ((3, 1),)),
    (0, ((1, 1), (2, 1)), ()),
    (0, (), ((1, 1), (2, 1))),
    (0, ((1, 2),), ((1, 1),)),
    (0, ((1, 1),), ((1, 2),)),
    (1, ((1, 2),), ()),
    (2, ((1, 1),), ()),
    (1, (), ((1, 2),)),
    (2, (), ((1, 1),)),
    (0, ((2, 1),), ((1, 1),)),
    (1, ((2, 1),), ()),
    (1, (), ((2, 1),)),
    (0, ((1, 1),), ((2, 1),)),
    (1, ((1, 1),), ((1, 1),)),
}


def brute_laguerre_partitions(n, k):
    sols = set()
    js = list(range(1, k + 1))
    ranges = [range(k // j + 1) for j in js] * 2
    for combo in itertools.product(*ranges) if js else [()]:
        kv, lv = combo[: len(js)], combo[len(js):]
        used = sum(j * (kv[i] + lv[i]) for i, j in enumerate(js))
        ell = k - used
        if 0 <= ell <= n:
            sols.add((ell,
                      tuple((j, kv[i]) for i, j in enumerate(js) if kv[i]),
                      tuple((j, lv[i]) for i, j in enumerate(js) if lv[i])))
    return sols


def test_laguerre_partitions_table():
    sols = laguerre_partitions(3, 3)
    assert len(sols) == 18
    assert {(s.ell, s.kparts, s.lparts) for s in sols} == TABLE2_SOLUTIONS


def test_laguerre_partitions_degree_zero():
    sols = laguerre_partitions(5, 0)
    assert len(sols) == 1
    assert sols[0].ell == 0 and not sols[0].kparts and not sols[0].lparts


def test_laguerre_partitions_n0():
    assert all(s.ell == 0 for s in laguerre_partitions(0, 2))


def test_laguerre_partitions_vs_brute_force():
    for n in range(4):
        for k in range(5):
            got = {(s.ell, s.kparts, s.lparts) for s in laguerre_partitions(n, k)}
            assert got == brute_laguerre_partitions(n, k)
            assert all(s.target == k for s in laguerre_partitions(n, k))


def test_pochhammer():
    assert pochhammer(3, 0) == 1
    assert pochhammer(0, 2) == 0
    assert pochhammer(3, 2) == 12
    assert pochhammer(-2, 3) == 0  # crosses zero
    assert pochhammer(Fraction(1, 2), 2) == Fraction(3, 4)


# ---------------------------------------------------------------------------
# Hermite connection
# ---------------------------------------------------------------------------

def test_hermite_connection_degree_zero():
    expansion = hermite_connection(0)
    assert expansion.rescaled_total() == q_hermite(0)
    assert len(expansion.terms) == 1


def test_hermite_connection_matches_family():
    for n in range(9):
        assert hermite_connection(n).rescaled_total() == q_hermite(n)


def test_hermite_connection_five():
    expansion = hermite_connection(5)
    assert len(expansion.terms) == 7
    assert expansion.rescaled_total() == hermite5_reference()


def test_hermite_total_is_term_sum():
    expansion = hermite_connection(6)
    total = None
    for term in expansion.terms:
        total = term.value if total is None else total + term.value
    assert total == expansion.total


def test_hermite_sum_invariant_under_order():
    expansion = hermite_connection(7)
    values = [t.value for t in expansion.terms]
    rng = random.Random(3)
    for _ in range(3):
        rng.shuffle(values)
        acc = values[0]
        for v in values[1:]:
            acc = acc + v
        assert acc == expansion.total


# numeric oracle for the contribution-table rows: complex evaluation of the
# prefactors and classical Hermite factors with the radical-bearing parameters
def _float_qnum(n, base):
    return (1 - base**n) / (1 - base)


def _float_qfact(n, base):
    r = 1.0
    for i in range(1, n + 1):
        r *= _float_qnum(i, base)
    return r


def _float_quesne_c(k, base):
    return (1 - base) ** (k - 1) / (k * _float_qnum(k, base))


def _float_hermite(n, x):
    return sum((-1) ** l * math.factorial(n) * (2 * x) ** (n - 2 * l)
               / (math.factorial(l) * math.factorial(n - 2 * l))
               for l in range(n // 2 + 1))


def hermite_row_oracle(solution, n, q, z):
    base2, base4 = q**-2, q**-4
    imag = complex(0, 1)
    total = (_float_qfact(n, base2) * (2 / (q**2 * (1 + base2))) ** (n / 2)
             * imag ** (n + solution.count))
    for k, m in solution.parts:
        ck4 = complex(_float_quesne_c(k, base4))
        zeta = (imag ** (k + 1) * (2 * q * (1 + base2)) ** (k / 2)
                * _float_quesne_c(k, base2) / (2 * cmath.sqrt(ck4)) * z**k)
        total *= cmath.sqrt(ck4) ** m * _float_hermite(m, zeta) / math.factorial(m)
    return total


def test_hermite_rows_match_numeric_oracle():
    q, z = 0.7, 1.3
    expansion = hermite_connection(5)
    for term in expansion.terms:
        exact = expansion.rescaled_term_value(term).eval_numeric(z, math.sqrt(q))
        oracle = hermite_row_oracle(term.descriptor, 5, q, z)
        assert abs(exact - oracle) <= 1e-9 * abs(oracle)


# ---------------------------------------------------------------------------
# Laguerre connection
# ---------------------------------------------------------------------------

def test_laguerre_connection_33():
    for aux in ({}, {1: 2, 2: 1, 3: 3}, {1: -3, 2: 0, 3: 2}, {1: 1, 2: -1, 3: -2}):
        expansion = laguerre_connection(3, 3, aux)
        assert expansion.rescaled_total() == laguerre33_reference()


def test_laguerre_connection_degree_zero():
    for n in (0, 2, 4):
        expansion = laguerre_connection(n, 0)
        assert len(expansion.terms) == 1
        assert expansion.total == RF.q_power(n * (n + 1) // 2)
        assert expansion.rescaled_total() == q_laguerre(n, 0)


def test_laguerre_gauge_independence():
    rng = random.Random(77)
    for n in range(6):
        for k in range(6):
            target = q_laguerre(n, k)
            auxes = [{}] + [{j: rng.randint(-3, 3) for j in range(1, k + 1)} for _ in range(3)]
            for aux in auxes:
                assert laguerre_connection(n, k, aux).rescaled_total() == target, (n, k, aux)


def test_laguerre_terms_sum_to_total():
    expansion = laguerre_connection(3, 3, {1: 1, 2: 2, 3: -1})
    total = None
    for term in expansion.terms:
        total = term.value if total is None else total + term.value
    assert total == expansion.total


# ---------------------------------------------------------------------------
# Gegenbauer connection
# ---------------------------------------------------------------------------

def beta_mono(*pairs):
    return tuple(pairs)


def test_gegenbauer_connection_n1():
    terms = dict(gegenbauer_connection(1).total.sorted_terms())
    assert terms == {((1, 1),): BetaPolynomial.gen(1)}


def test_gegenbauer_connection_n2():
    terms = dict(gegenbauer_connection(2).total.sorted_terms())
    b1, b2 = BetaPolynomial.gen(1), BetaPolynomial.gen(2)
    half = Fraction(1, 2)
    assert terms == {
        ((2, 1),): b2,
        ((1, 2),): (b1 * b1 - b2) * half,
    }


def test_gegenbauer_connection_n5_key_coefficients():
    terms = dict(gegenbauer_connection(5).total.sorted_terms())
    assert terms[((5, 1),)] == BetaPolynomial.gen(5)
    expected_c15 = BetaPolynomial({
        beta_mono((5, 1)): Fraction(24, 120),
        beta_mono((1, 1), (4, 1)): Fraction(-30, 120),
        beta_mono((2, 1), (3, 1)): Fraction(-20, 120),
        beta_mono((1, 2), (3, 1)): Fraction(20, 120),
        beta_mono((1, 1), (2, 2)): Fraction(15, 120),
        beta_mono((1, 3), (2, 1)): Fraction(-10, 120),
        beta_mono((1, 5)): Fraction(1, 120),
    })
    assert terms[((1, 5),)] == expected_c15


def test_gegenbauer_connection_displayed_forms():
    for n in range(6):
        assert gegenbauer_connection(n).total == gegenbauer_displayed_connection(n)


def test_gegenbauer_connection_reproduces_direct():
    for n in range(9):
        value = gegenbauer_connection_value(gegenbauer_connection(n))
        assert value == q_gegenbauer_direct(n)


def test_gegenbauer_term_order_matches_partition_order():
    expansion = gegenbauer_connection(5)
    descriptors = [term.descriptor for term in expansion.terms]
    expected = [tuple(sorted(sol.parts)) for sol in partitions_of(5)]
    assert descriptors == expected


def test_substitute_beta_examples():
    b1, b2 = BetaPolynomial.gen(1), BetaPolynomial.gen(2)
    assert substitute_beta(b1, "q-lambda") == gegenbauer_weight(1)
    lam_poly = substitute_beta(b2 - b1 * b1, "classical-lambda")
    lam = LambdaPolynomial.gen(1)
    assert lam_poly == lam - lam * lam
    with pytest.raises(ValueError):
        substitute_beta(b1, "bogus")


def test_lambda_one_collapse():
    # at Lambda -> q every weight [lambda]_{q^k} is 1: the n=2 connection has
    # coefficient 1 on C2 and 0 on C1^2
    terms = dict(gegenbauer_connection(2).total.sorted_terms())
    c2_val = substitute_beta(terms[((2, 1),)], "q-lambda").subs_lam_q()
    c11_val = substitute_beta(terms[((1, 2),)], "q-lambda").subs_lam_q()
    assert c2_val == RF.one()
    assert c11_val.is_zero()


def test_gegenbauer_classical_lambda_route():
    for n in range(6):
        via_connection = gegenbauer_connection(n).total.map_coeffs(
            lambda c: substitute_beta(c, "classical-lambda"))
        assert via_connection == gegenbauer_classical_lambda(n)


# ---------------------------------------------------------------------------
# sum rules
# ---------------------------------------------------------------------------

def test_sum_rule_order_one():
    lhs, rhs = gegenbauer_sum_rule(1)
    assert lhs == q_gegenbauer_direct(1)
    assert lhs == rhs


def test_sum_rule_order_two():
    from qpoly.families import CosPolynomial
    lhs, rhs = gegenbauer_sum_rule(2)
    assert lhs == CosPolynomial({2: gegenbauer_weight(2)})
    assert lhs == rhs


@pytest.mark.parametrize("ell", range(1, 9))
def test_sum_rules_exact(ell):
    lhs, rhs = gegenbauer_sum_rule(ell)
    assert lhs == rhs


@pytest.mark.parametrize("ell", range(1, 6))
def test_sum_rules_explicit_combinations(ell):
    lhs, _ = gegenbauer_sum_rule(ell)
    assert lhs == sum_rule_explicit(ell)
