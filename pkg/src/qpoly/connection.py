"""Partition enumeration and the three connection-formula engines.

Every engine expresses a deformed polynomial as a finite sum of products of
classical polynomials, indexed by the solutions of a Diophantine partition
relation:

  * Hermite:  sum_k k*n_k = n.  The per-factor parameters contain radicals,
    but the combinations u_k = 2*zeta_k*tau_k and v_k = tau_k**2 are rational,
    so each partition's grouped value is computed entirely in Q(s) via
    the classical rewrite  H_m(zeta) tau**m / m! =
    sum_l (-1)**l u**(m-2l) v**l / (l! (m-2l)!).
  * Laguerre:  sum_j j*(k_j + l_j) + l = k, with one free auxiliary integer
    n_j per order j; the summed total provably does not depend on them.
  * Gegenbauer: the log of the deformed generating function is the classical
    log rescaled per t-order by beta_k = [lambda]_{q**k}.  Exponentiating
    symbolically over polynomials in abstract generators beta_k and abstract
    classical factors C_m yields the connection for any n, plus the per-order
    sum rules.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from functools import lru_cache

from .field import RationalFunction
from .families import (
    CosPolynomial,
    LaguerreIndex,
    ZPolynomial,
    gegenbauer_classical,
    gegenbauer_weight,
    laguerre_classical,
    q_gegenbauer_direct,
)
from .qkernel import QBase, q_binomial, q_factorial, quesne_c
from .series import Ring, TruncatedSeries

_RF_ONE = RationalFunction.one()


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PartitionSolution:
    """One solution {n_k} of sum_k k*n_k = n, as ((k, n_k), ...) with k
    ascending and every n_k >= 1."""

    parts: tuple

    @property
    def target(self):
        return sum(k * m for k, m in self.parts)

    @property
    def count(self):
        """Total number of parts, sum_k n_k."""
        return sum(m for _, m in self.parts)

    def multiplicity(self, k):
        for kk, m in self.parts:
            if kk == k:
                return m
        return 0

    def label(self):
        if not self.parts:
            return "empty"
        return ", ".join(f"n{k}={m}" for k, m in self.parts)


def _descending_partitions(n, maxpart):
    if n == 0:
        yield ()
        return
    for p in range(min(n, maxpart), 0, -1):
        for rest in _descending_partitions(n - p, p):
            yield (p,) + rest


@lru_cache(maxsize=None)
def partitions_of(n):
    """All integer partitions of n as multiplicity maps, ordered
    lexicographically by parts descending ([n] first, [1,...,1] last)."""
    if n < 0:
        raise ValueError("partition target must be >= 0")
    out = []
    for parts in _descending_partitions(n, n):
        mult = {}
        for p in parts:
            mult[p] = mult.get(p, 0) + 1
        out.append(PartitionSolution(tuple(sorted(mult.items()))))
    return tuple(out)


@dataclass(frozen=True)
class LaguerrePartitionSolution:
    """One solution of sum_j j*(k_j + l_j) + l = k with 0 <= l <= n."""

    ell: int
    kparts: tuple  # ((j, k_j), ...), k_j >= 1, j ascending
    lparts: tuple  # ((j, l_j), ...), l_j >= 1, j ascending

    @property
    def target(self):
        return (self.ell
                + sum(j * v for j, v in self.kparts)
                + sum(j * v for j, v in self.lparts))

    def orders(self):
        """All j with k_j or l_j nonzero."""
        return sorted({j for j, _ in self.kparts} | {j for j, _ in self.lparts})

    def label(self):
        bits = [f"k{j}={v}" for j, v in self.kparts]
        if self.ell:
            bits.append(f"l={self.ell}")
        bits += [f"l{j}={v}" for j, v in self.lparts]
        return ", ".join(bits) if bits else "empty"


def laguerre_partitions(n, k):
    """All solutions of the Laguerre partition relation for target k with
    0 <= l <= n, in a deterministic order."""
    if n < 0 or k < 0:
        raise ValueError("indices must be >= 0")
    out = []
    for ell in range(min(n, k) + 1):
        m = k - ell
        for weighted in partitions_of(m):
            # split each total s_j = k_j + l_j into the two kinds
            splits = [[]]
            for j, s in weighted.parts:
                splits = [acc + [(j, kj, s - kj)] for acc in splits for kj in range(s, -1, -1)]
            for combo in splits:
                kparts = tuple((j, kj) for j, kj, _ in combo if kj)
                lparts = tuple((j, lj) for j, _, lj in combo if lj)
                out.append(LaguerrePartitionSolution(ell, kparts, lparts))
    return tuple(out)


def pochhammer(alpha, ell):
    """Rising factorial (alpha)_ell = alpha(alpha+1)...(alpha+ell-1)."""
    if ell < 0:
        raise ValueError("pochhammer length must be >= 0")
    result = Fraction(1)
    for j in range(ell):
        result *= alpha + j
    return result


# ---------------------------------------------------------------------------
# expansion containers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConnectionTerm:
    """One row of a connection expansion.

    descriptor  — the partition solution (or C-monomial) indexing the row
    coefficient — scalar prefactor; rational function for Laguerre rows,
                  a BetaPolynomial for Gegenbauer rows, None when the value
                  absorbs everything (Hermite rows)
    factors     — human-readable classical-factor descriptions
    value       — the row's polynomial value (None for abstract rows)
    """

    descriptor: object
    coefficient: object
    factors: tuple
    value: object
    meta: dict = dataclass_field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class ConnectionExpansion:
    """Terms plus exact total; `rescale` maps the generating-function
    normalization back to the polynomial itself."""

    family: str
    n: int
    k: object
    terms: tuple
    total: object
    rescale: object

    def rescaled_total(self):
        if self.rescale is None:
            return self.total
        return self.total.scale(self.rescale)

    def rescaled_term_value(self, term):
        if self.rescale is None:
            return term.value
        return term.value.scale(self.rescale)


# ---------------------------------------------------------------------------
# Hermite connection (radical-free grouped rows)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _hermite_u(k):
    """z**k coefficient of u_k = 2 zeta_k tau_k: (-1)**(k+1) 2**k c_k(q^-2)."""
    sign = 1 if (k + 1) % 2 == 0 else -1
    return quesne_c(k, QBase.q_pow(-2)) * (sign * 2**k)


@lru_cache(maxsize=None)
def _hermite_v(k):
    """t**(2k)-stripped value of v_k = tau_k**2:
    (-1)**(k+1) (2q/(1+q**2))**k c_k(q^-4)."""
    sign = 1 if (k + 1) % 2 == 0 else -1
    q = RationalFunction.q()
    ratio = RationalFunction.q() * 2 / (_RF_ONE + q**2)
    return quesne_c(k, QBase.q_pow(-4)) * ratio**k * sign


def _hermite_block(k, m):
    """Grouped factor for one order k with multiplicity m:
    sum_l (-1)**l u_k**(m-2l) v_k**l / (l! (m-2l)!), a polynomial in z."""
    u = _hermite_u(k)
    v = _hermite_v(k)
    block = ZPolynomial.zero()
    for ell in range(m // 2 + 1):
        d = m - 2 * ell
        c = u**d * v**ell * Fraction((-1) ** ell, math.factorial(ell) * math.factorial(d))
        block = block + ZPolynomial({k * d: c})
    return block


@lru_cache(maxsize=None)
def hermite_connection(n):
    """Expansion of the deformed Hermite polynomial over partition solutions.

    Each term is the grouped value of one partition {n_k} (the classical
    product H_{n_1}(zeta_1) H_{n_2}(zeta_2)... with its prefactors, all
    radicals cancelled); the total times `rescale` equals q_hermite(n).
    """
    if n < 0:
        raise ValueError("degree must be >= 0")
    terms = []
    total = ZPolynomial.zero()
    for sol in partitions_of(n):
        value = ZPolynomial.one()
        for k, m in sol.parts:
            value = value * _hermite_block(k, m)
        factors = tuple(f"H{m}(zeta{k})" for k, m in sol.parts)
        terms.append(ConnectionTerm(sol, None, factors, value))
        total = total + value
    rescale = q_factorial(n, QBase.q_pow(-2)) * RationalFunction.s_power(-n)
    return ConnectionExpansion("hermite", n, None, tuple(terms), total, rescale)


# ---------------------------------------------------------------------------
# Laguerre connection (auxiliary integers)
# ---------------------------------------------------------------------------

def laguerre_connection(n, k, aux=None):
    """Expansion of the deformed Laguerre polynomial L_k^{(n-k)}(z; q).

    `aux` assigns an arbitrary integer n_j to each order j (default 0); the
    summed total is independent of that choice.  Each term multiplies

        q**((n-l)(n-l+1)/2) [n over l]_q
        * prod_j (-1)**(l_j) (n_j)_{l_j} / l_j!
        * prod_j L_{k_j}^{(n_j - k_j)}(c_j(q) z**j)

    over one partition solution; total * rescale equals q_laguerre(n, k).
    """
    if n < 0 or k < 0:
        raise ValueError("indices must be >= 0")
    aux = dict(aux) if aux else {}
    base = QBase.q()
    terms = []
    total = ZPolynomial.zero()
    for sol in laguerre_partitions(n, k):
        ell = sol.ell
        pref = (RationalFunction.q_power((n - ell) * (n - ell + 1) // 2)
                * q_binomial(n, ell, base))
        poch_scalar = Fraction(1)
        for j, lj in sol.lparts:
            poch_scalar *= Fraction((-1) ** lj) * pochhammer(aux.get(j, 0), lj) / math.factorial(lj)
        coefficient = pref * poch_scalar
        poly = ZPolynomial.one()
        factor_bits = []
        for j, kj in sol.kparts:
            nj = aux.get(j, 0)
            argument = ZPolynomial({j: quesne_c(j, base)})
            poly = poly * laguerre_classical(LaguerreIndex(kj, nj - kj), argument)
            arg_text = "z" if j == 1 else f"c{j}(q)*z^{j}"
            factor_bits.append(f"L{kj}^({nj - kj})({arg_text})")
        value = poly.scale(coefficient)
        meta = {"q_power": (n - ell) * (n - ell + 1) // 2, "qbinom": (n, ell),
                "poch": tuple((aux.get(j, 0), lj) for j, lj in sol.lparts)}
        terms.append(ConnectionTerm(sol, coefficient, tuple(factor_bits), value, meta))
        total = total + value
    rescale = RationalFunction.q_power(-((n - k) * (n - k + 1) // 2))
    return ConnectionExpansion("laguerre", n, k, tuple(terms), total, rescale)


# ---------------------------------------------------------------------------
# abstract coefficient rings for the Gegenbauer connection
# ---------------------------------------------------------------------------

def _mono_mul(m1, m2):
    out = dict(m1)
    for g, e in m2:
        out[g] = out.get(g, 0) + e
    return tuple(sorted(out.items()))


class _AbstractPoly:
    """Shared sparse monomial -> Fraction polynomial structure; a monomial is
    ((generator, exponent), ...) with generators ascending."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[tuple(mono)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({(): 1})

    @classmethod
    def constant(cls, c):
        return cls({(): Fraction(c)})

    @classmethod
    def gen(cls, g):
        return cls({((g, 1),): 1})

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if type(other) is type(self):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return self._terms == ({(): c} if c else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, tuple(sorted(self._terms.items()))))
        return self._hash

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = type(self).constant(other)
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, Fraction(0)) + c
            if v:
                out[m] = v
            else:
                del out[m]
        return self._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return self._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return type(self)()
            return self._raw({m: v * c for m, v in self._terms.items()})
        if type(other) is not type(self):
            return NotImplemented
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                v = out.get(m, Fraction(0)) + c1 * c2
                if v:
                    out[m] = v
                else:
                    del out[m]
        return self._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of an abstract polynomial")
        result = type(self).one()
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    @classmethod
    def _raw(cls, terms):
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    def substitute(self, value_of, one_value):
        """Map each generator g to value_of(g) and sum; lands in the target
        ring, whose multiplicative unit is one_value."""
        total = None
        for mono, c in self._terms.items():
            term = one_value
            for g, e in mono:
                term = term * value_of(g) ** e
            term = term * c
            total = term if total is None else total + term
        return one_value * 0 if total is None else total

    def sorted_terms(self):
        """Terms ordered by descending reverse-lex on the exponent vector read
        from the highest generator down (matches the displayed forms)."""
        gens = sorted({g for mono in self._terms for g, _ in mono}, reverse=True)

        def key(mono):
            d = dict(mono)
            return tuple(d.get(g, 0) for g in gens)

        return [(m, self._terms[m]) for m in sorted(self._terms, key=key, reverse=True)]


class BetaPolynomial(_AbstractPoly):
    """Polynomial with rational coefficients in the abstract generators
    beta_k standing for [lambda]_{q**k}."""

    def substitute_q_lambda(self):
        """beta_k -> (1 - Lambda**k)/(1 - q**k); lands in Q(s, Lambda)."""
        return self.substitute(gegenbauer_weight, RationalFunction.one())

    def substitute_classical_lambda(self):
        """beta_k -> lambda for every k; lands in Q[lambda]."""
        lam = LambdaPolynomial.gen(1)
        return self.substitute(lambda g: lam, LambdaPolynomial.one())

    def __repr__(self):
        from .render import text_beta
        return f"BetaPolynomial({text_beta(self)})"


class LambdaPolynomial(_AbstractPoly):
    """Univariate polynomial in the classical weight lambda over Q."""

    def __repr__(self):
        from .render import text_lambda_poly
        return f"LambdaPolynomial({text_lambda_poly(self)})"


class CPolynomial:
    """Formal polynomial in abstract classical factors C_1, C_2, ... with
    coefficients in a pluggable commutative ring (Fraction, BetaPolynomial or
    LambdaPolynomial).  Monomials multiply formally; no basis relations are
    applied — this is the displayed shape of the connection formulae."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    clean[tuple(mono)] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def constant(cls, c):
        return cls({(): c})

    @classmethod
    def factor(cls, m, one):
        """The single classical factor C_m (with the given coefficient one)."""
        return cls({((m, 1),): one})

    def is_zero(self):
        return not self._terms

    def coeff(self, mono):
        return self._terms.get(tuple(mono))

    def monomials(self):
        return set(self._terms)

    def __eq__(self, other):
        if not isinstance(other, CPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self._terms.items(), key=lambda kv: kv[0])))
        return self._hash

    def __add__(self, other):
        if not isinstance(other, CPolynomial):
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            if m in out:
                v = out[m] + c
                if v:
                    out[m] = v
                else:
                    del out[m]
            else:
                out[m] = c
        return self._raw(out)

    def __neg__(self):
        return self._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, CPolynomial):
            out = {}
            for m1, c1 in self._terms.items():
                for m2, c2 in other._terms.items():
                    m = _mono_mul(m1, m2)
                    v = c1 * c2
                    if m in out:
                        w = out[m] + v
                        if w:
                            out[m] = w
                        else:
                            del out[m]
                    elif v:
                        out[m] = v
            return self._raw(out)
        # scalar (int / Fraction / coefficient-ring element)
        out = {}
        for m, c in self._terms.items():
            v = c * other
            if v:
                out[m] = v
        return self._raw(out)

    __rmul__ = __mul__

    @classmethod
    def _raw(cls, terms):
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    def map_coeffs(self, fn):
        out = {}
        for m, c in self._terms.items():
            v = fn(c)
            if v:
                out[m] = v
        return self._raw(out)

    def sorted_terms(self):
        """Terms grouped like the partition order: weight descending, then
        parts-descending lexicographic ([5] before [4,1] before [3,2]...)."""

        def key(mono):
            parts = []
            for m, e in sorted(mono, reverse=True):
                parts.extend([m] * e)
            return (sum(parts), tuple(parts))

        return [(m, self._terms[m]) for m in sorted(self._terms, key=key, reverse=True)]

    def __repr__(self):
        from .render import text_cpoly
        return f"CPolynomial({text_cpoly(self)})"


# ---------------------------------------------------------------------------
# Gegenbauer connection and sum rules
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def classical_log_coefficients(order):
    """a_1..a_order with log(1 + C_1 t + C_2 t**2 + ...) = sum a_k t**k:
    each a_k is a CPolynomial over Fraction in the abstract factors C_m."""
    ring = Ring(CPolynomial.zero(), CPolynomial.constant(Fraction(1)))
    coeffs = [ring.one]
    for m in range(1, order + 1):
        coeffs.append(CPolynomial.factor(m, Fraction(1)))
    series = TruncatedSeries(ring, coeffs, order)
    logs = series.log()
    return tuple(logs.coeff(k) for k in range(1, order + 1))


@lru_cache(maxsize=None)
def gegenbauer_connection(n):
    """Connection expansion of the deformed Gegenbauer polynomial of degree n
    in terms of formal products of classical factors C_m, with coefficients
    polynomial in the abstract weights beta_k = [lambda]_{q**k}.

    Mechanization: exponentiate sum_k beta_k a_k t**k where a_k are the
    classical log coefficients; the t**n coefficient is the connection,
    valid for every n (the low orders reproduce the displayed forms)."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    ring = Ring(CPolynomial.zero(), CPolynomial.constant(BetaPolynomial.one()))
    logs = classical_log_coefficients(n) if n else ()
    arg = TruncatedSeries.zero(ring, n)
    for k in range(1, n + 1):
        beta = BetaPolynomial.gen(k)
        lifted = logs[k - 1].map_coeffs(lambda c: BetaPolynomial.constant(c) * beta)
        arg = arg + TruncatedSeries.monomial(ring, lifted, k, n)
    total = arg.exp().coeff(n)
    terms = []
    for mono, coeff in total.sorted_terms():
        factors = tuple(f"C{m}^{e}" if e > 1 else f"C{m}" for m, e in sorted(mono, reverse=True))
        terms.append(ConnectionTerm(mono, coeff, factors, None))
    return ConnectionExpansion("gegenbauer", n, None, tuple(terms), total, None)


def substitute_beta(coeff, mode):
    """Substitute the abstract weights: mode "q-lambda" sends beta_k to
    (1 - Lambda**k)/(1 - q**k), mode "classical-lambda" sends every beta_k
    to the single symbol lambda."""
    if mode == "q-lambda":
        return coeff.substitute_q_lambda()
    if mode == "classical-lambda":
        return coeff.substitute_classical_lambda()
    raise ValueError(f"unknown mode {mode!r}")


def gegenbauer_connection_value(expansion):
    """Evaluate a Gegenbauer connection to a concrete CosPolynomial:
    beta_k -> [lambda]_{q**k} and C_m -> the classical (lambda = 1)
    polynomial.  Must reproduce the explicit deformed polynomial."""
    total = CosPolynomial.zero()
    for term in expansion.terms:
        weight = substitute_beta(term.coefficient, "q-lambda")
        poly = CosPolynomial.one()
        for m, e in term.descriptor:
            poly = poly * gegenbauer_classical(m) ** e
        total = total + poly.scale(weight)
    return total


def gegenbauer_classical_lambda(n):
    """The classical general-lambda connection: t**n coefficient of
    exp(lambda * sum_k a_k t**k) as a CPolynomial over Q[lambda].  Equals the
    beta_k -> lambda image of gegenbauer_connection(n)."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    ring = Ring(CPolynomial.zero(), CPolynomial.constant(LambdaPolynomial.one()))
    logs = classical_log_coefficients(n) if n else ()
    lam = LambdaPolynomial.gen(1)
    arg = TruncatedSeries.zero(ring, n)
    for k in range(1, n + 1):
        lifted = logs[k - 1].map_coeffs(lambda c: LambdaPolynomial.constant(c) * lam)
        arg = arg + TruncatedSeries.monomial(ring, lifted, k, n)
    return arg.exp().coeff(n)


# Explicit low-order log combinations: I_l as [(coefficient, [factor orders])].
# I_3 carries +1/3 C_1^3 (the t**3 log coefficient; the sum rules hold only
# with this sign).
SUM_RULE_COMBINATIONS = {
    1: [(Fraction(1), (1,))],
    2: [(Fraction(1), (2,)), (Fraction(-1, 2), (1, 1))],
    3: [(Fraction(1), (3,)), (Fraction(-1), (1, 2)), (Fraction(1, 3), (1, 1, 1))],
    4: [(Fraction(1), (4,)), (Fraction(-1), (1, 3)), (Fraction(-1, 2), (2, 2)),
        (Fraction(1), (1, 1, 2)), (Fraction(-1, 4), (1, 1, 1, 1))],
    5: [(Fraction(1), (5,)), (Fraction(-1), (1, 4)), (Fraction(-1), (2, 3)),
        (Fraction(1), (1, 1, 3)), (Fraction(1), (1, 2, 2)),
        (Fraction(-1), (1, 1, 1, 2)), (Fraction(1, 5), (1, 1, 1, 1, 1))],
}


def _log_coefficient_of(series_coeffs, ell, ring):
    series = TruncatedSeries(ring, series_coeffs, ell)
    return series.log().coeff(ell)


def gegenbauer_sum_rule(ell):
    """Both sides of the order-ell sum rule.

    lhs: t**ell coefficient of log(sum_n C_n^(lambda)(z; q) t**n), built from
    the explicit deformed polynomials.
    rhs: [lambda]_{q**ell} times the t**ell coefficient of the log of the
    classical (lambda = 1) series.  The two agree identically in Q(s, Lambda).
    """
    if ell < 1:
        raise ValueError("sum-rule order must be >= 1")
    ring = Ring(CosPolynomial.zero(), CosPolynomial.one())
    deformed = [q_gegenbauer_direct(i) for i in range(ell + 1)]
    classical = [gegenbauer_classical(i) for i in range(ell + 1)]
    lhs = _log_coefficient_of(deformed, ell, ring)
    rhs = _log_coefficient_of(classical, ell, ring).scale(gegenbauer_weight(ell))
    return lhs, rhs


def sum_rule_explicit(ell):
    """The explicit low-order combination I_ell evaluated on the deformed
    polynomials (available for ell <= 5)."""
    if ell not in SUM_RULE_COMBINATIONS:
        raise ValueError(f"no explicit combination stored for ell = {ell}")
    total = CosPolynomial.zero()
    for coeff, orders in SUM_RULE_COMBINATIONS[ell]:
        poly = CosPolynomial.one()
        for m in orders:
            poly = poly * q_gegenbauer_direct(m)
        total = total + poly.scale(coeff)
    return total
