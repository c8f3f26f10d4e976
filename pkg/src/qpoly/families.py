"""Classical and q-deformed polynomial families.

Each family exists twice: in explicit closed form and by coefficient
extraction from its generating function, so every constructor carries a
built-in independent cross-check.

Working bases:

  * ZPolynomial  — sparse polynomial in z over Q(s, Lambda); hosts the
    (q-)Hermite and (q-)Laguerre families.
  * CosPolynomial — linear combinations of cos(m*theta) with the product
    folded by cos(a)cos(b) = (cos(a+b) + cos(|a-b|))/2; hosts the
    (q-)Gegenbauer families (lambda enters only through Lambda = q**lambda).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .field import RationalFunction
from .qkernel import QBase, q_binomial, q_factorial, q_pochhammer
from .series import OrderExceeded, Ring, TruncatedSeries

_RF_ZERO = RationalFunction.zero()
_RF_ONE = RationalFunction.one()


def _as_rf(value):
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, (int, Fraction)):
        return RationalFunction.from_fraction(Fraction(value))
    raise TypeError(f"cannot use {type(value).__name__} as a coefficient")


class _SparseRFPoly:
    """Shared sparse int->RationalFunction storage with linear structure."""

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coeffs=None):
        clean = {}
        if coeffs:
            for k, v in coeffs.items():
                v = _as_rf(v)
                if k < 0:
                    raise ValueError("negative index")
                if not v.is_zero():
                    clean[k] = v
        self._coeffs = clean
        self._hash = None

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: _RF_ONE})

    @classmethod
    def constant(cls, value):
        return cls({0: _as_rf(value)})

    def coeff(self, k):
        return self._coeffs.get(k, _RF_ZERO)

    def items(self):
        return sorted(self._coeffs.items())

    def degree(self):
        return max(self._coeffs, default=0)

    def is_zero(self):
        return not self._coeffs

    def support(self):
        return set(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if type(other) is type(self):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction, RationalFunction)):
            other = _as_rf(other)
            if other.is_zero():
                return not self._coeffs
            return self._coeffs == {0: other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, tuple(self.items())))
        return self._hash

    def __add__(self, other):
        if isinstance(other, (int, Fraction, RationalFunction)):
            other = type(self).constant(other)
        if not isinstance(other, type(self)):
            return NotImplemented
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            w = out.get(k, _RF_ZERO) + v
            if w.is_zero():
                out.pop(k, None)
            else:
                out[k] = w
        return self._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return self._raw({k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, scalar):
        scalar = _as_rf(scalar)
        if scalar.is_zero():
            return type(self)()
        return self._raw({k: v * scalar for k, v in self._coeffs.items()})

    def __truediv__(self, scalar):
        if isinstance(scalar, type(self)):
            if scalar.support() <= {0}:
                scalar = scalar.coeff(0)
            else:
                raise ValueError("division only by constants")
        return self.scale(_RF_ONE / _as_rf(scalar))

    def __pow__(self, e):
        if e < 0:
            raise ValueError("negative power of a basis polynomial")
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
    def _raw(cls, coeffs):
        p = cls.__new__(cls)
        p._coeffs = coeffs
        p._hash = None
        return p

    def map_coeffs(self, fn):
        out = {}
        for k, v in self._coeffs.items():
            w = fn(v)
            if not w.is_zero():
                out[k] = w
        return self._raw(out)

    def limit_q_to_1(self):
        """Apply the q -> 1 limit to every coefficient."""
        return self.map_coeffs(lambda v: RationalFunction.from_fraction(v.limit_q_to_1()))


class ZPolynomial(_SparseRFPoly):
    """Sparse polynomial in the variable z over Q(s, Lambda)."""

    @classmethod
    def z(cls, k=1):
        return cls({k: _RF_ONE})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RationalFunction)):
            return self.scale(other)
        if not isinstance(other, ZPolynomial):
            return NotImplemented
        out = {}
        for k1, v1 in self._coeffs.items():
            for k2, v2 in other._coeffs.items():
                k = k1 + k2
                w = out.get(k, _RF_ZERO) + v1 * v2
                if w.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = w
        return self._raw(out)

    __rmul__ = __mul__

    def eval_numeric(self, z_value, s_value, lam_value=None):
        return sum(v.eval_numeric(s_value, lam_value) * complex(z_value) ** k
                   for k, v in self._coeffs.items())

    def __repr__(self):
        from .render import text_zpoly
        return f"ZPolynomial({text_zpoly(self)})"


class CosPolynomial(_SparseRFPoly):
    """Linear combination of cos(m*theta), m >= 0, over Q(s, Lambda)."""

    @classmethod
    def cos(cls, m):
        return cls({m: _RF_ONE})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, RationalFunction)):
            return self.scale(other)
        if not isinstance(other, CosPolynomial):
            return NotImplemented
        half = Fraction(1, 2)
        out = {}
        for m1, v1 in self._coeffs.items():
            for m2, v2 in other._coeffs.items():
                w = v1 * v2 * half
                for m in (m1 + m2, abs(m1 - m2)):
                    acc = out.get(m, _RF_ZERO) + w
                    if acc.is_zero():
                        out.pop(m, None)
                    else:
                        out[m] = acc
        return self._raw(out)

    __rmul__ = __mul__

    def eval_numeric(self, theta, s_value, lam_value=None):
        return sum(v.eval_numeric(s_value, lam_value) * math.cos(m * theta)
                   for m, v in self._coeffs.items())

    def __repr__(self):
        from .render import text_cospoly
        return f"CosPolynomial({text_cospoly(self)})"


ZPOLY_RING = Ring(ZPolynomial.zero(), ZPolynomial.one())
COSPOLY_RING = Ring(CosPolynomial.zero(), CosPolynomial.one())


@dataclass(frozen=True)
class LaguerreIndex:
    """Index pair of a Laguerre polynomial L_k^{(alpha)}; alpha may be any
    integer (the generalized binomial handles negative upper index)."""

    k: int
    alpha: int

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("Laguerre degree k must be >= 0")

    @property
    def n(self):
        return self.k + self.alpha


def falling_binomial(n, m):
    """Generalized binomial n(n-1)...(n-m+1)/m! for any integer n, m >= 0."""
    if m < 0:
        raise ValueError("lower index must be >= 0")
    num = 1
    for j in range(m):
        num *= n - j
    return Fraction(num, math.factorial(m))


# ---------------------------------------------------------------------------
# classical families (explicit closed forms)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def hermite_classical(n):
    """H_n(z) = sum_l (-1)**l n! (2z)**(n-2l) / (l! (n-2l)!)."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    coeffs = {}
    for ell in range(n // 2 + 1):
        d = n - 2 * ell
        c = (-1) ** ell * math.factorial(n) * 2**d // (math.factorial(ell) * math.factorial(d))
        coeffs[d] = c
    return ZPolynomial(coeffs)


def laguerre_classical(idx, argument=None):
    """L_k^{(alpha)} evaluated at a polynomial argument (default z):
    sum_l (-1)**l C(n, k-l) argument**l / l!  with n = k + alpha and the
    generalized falling-factorial binomial (valid for negative n too)."""
    if argument is None:
        argument = ZPolynomial.z()
    n = idx.n
    result = ZPolynomial.zero()
    power = ZPolynomial.one()
    for ell in range(idx.k + 1):
        if ell > 0:
            power = power * argument
        c = falling_binomial(n, idx.k - ell) / math.factorial(ell)
        if ell % 2:
            c = -c
        if c:
            result = result + power.scale(c)
    return result


@lru_cache(maxsize=None)
def gegenbauer_classical(n):
    """The lambda = 1 Gegenbauer (Chebyshev second kind) polynomial as
    sum_l cos((n-2l)theta) in the folded cosine basis."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    coeffs = {}
    for ell in range(n + 1):
        m = abs(n - 2 * ell)
        coeffs[m] = coeffs.get(m, 0) + 1
    return CosPolynomial(coeffs)


# ---------------------------------------------------------------------------
# deformed families
# ---------------------------------------------------------------------------

def _check_order(n, order):
    if order is None:
        order = n
    if n > order:
        raise OrderExceeded(f"degree {n} exceeds truncation order {order}")
    return order


@lru_cache(maxsize=None)
def q_hermite(n, order=None):
    """Deformed Hermite polynomial H_n(z; q).

    Extracted as the t**n coefficient of

        E_{q^-2}(2(1 - q^-2) z t) * e_{q^-4}(-2(1 - q^-4) t**2 / (q(1 + q^-2)))

    scaled by [n]_{q^-2}! * q**(-n/2).  Coefficients live in Q(s).
    """
    from .qkernel import q_exp_sum
    if n < 0:
        raise ValueError("degree must be >= 0")
    order = _check_order(n, order)
    base2 = QBase.q_pow(-2)
    base4 = QBase.q_pow(-4)
    q = RationalFunction.q()
    qm2 = RationalFunction.q_power(-2)
    qm4 = RationalFunction.q_power(-4)
    arg1 = TruncatedSeries.monomial(
        ZPOLY_RING, ZPolynomial({1: (_RF_ONE - qm2) * 2}), 1, order)
    f1 = q_exp_sum("E", arg1, base2)
    c2 = (_RF_ONE - qm4) * (-2) / (q * (_RF_ONE + qm2))
    arg2 = TruncatedSeries.monomial(ZPOLY_RING, ZPolynomial.constant(c2), 2, order)
    f2 = q_exp_sum("e", arg2, base4)
    extracted = (f1 * f2).coeff(n)
    scale = q_factorial(n, base2) * RationalFunction.s_power(-n)
    return extracted.scale(scale)


@lru_cache(maxsize=None)
def q_laguerre(n, k, order=None):
    """Deformed Laguerre polynomial L_k^{(n-k)}(z; q).

    Extracted as the t**k coefficient of E_q(-(1-q) z t) * (-q/t; q)_n t**n,
    the second factor expanded by the q-binomial theorem as
    sum_l q**((n-l)(n-l+1)/2) [n over l]_q t**l, then divided by
    q**((n-k)(n-k+1)/2).
    """
    from .qkernel import q_exp_sum
    if n < 0 or k < 0:
        raise ValueError("indices must be >= 0")
    order = _check_order(k, order)
    base = QBase.q()
    q = RationalFunction.q()
    arg = TruncatedSeries.monomial(
        ZPOLY_RING, ZPolynomial({1: -(_RF_ONE - q)}), 1, order)
    efactor = q_exp_sum("E", arg, base)
    tail = TruncatedSeries.zero(ZPOLY_RING, order)
    for ell in range(min(n, order) + 1):
        c = RationalFunction.q_power((n - ell) * (n - ell + 1) // 2) * q_binomial(n, ell, base)
        tail = tail + TruncatedSeries.monomial(ZPOLY_RING, ZPolynomial.constant(c), ell, order)
    extracted = (efactor * tail).coeff(k)
    return extracted.scale(RationalFunction.q_power(-((n - k) * (n - k + 1) // 2)))


def gegenbauer_weight(k):
    """[lambda]_{q**k} = (1 - Lambda**k)/(1 - q**k) as a rational function."""
    if k < 1:
        raise ValueError("weight index must be >= 1")
    lam = RationalFunction.lam()
    q = RationalFunction.q()
    return (_RF_ONE - lam**k) / (_RF_ONE - q**k)


@lru_cache(maxsize=None)
def q_gegenbauer_direct(n):
    """Deformed Gegenbauer polynomial from its explicit double-Pochhammer
    form: sum_l (L;q)_l (L;q)_{n-l} / ((q;q)_l (q;q)_{n-l}) cos((n-2l)theta)
    with L = Lambda = q**lambda."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    base = QBase.q()
    lam = RationalFunction.lam()
    q = RationalFunction.q()
    result = CosPolynomial.zero()
    for ell in range(n + 1):
        c = (q_pochhammer(lam, base, ell) * q_pochhammer(lam, base, n - ell)
             / (q_pochhammer(q, base, ell) * q_pochhammer(q, base, n - ell)))
        result = result + CosPolynomial({abs(n - 2 * ell): c})
    return result


def q_gegenbauer_genfun(n, order=None):
    """Deformed Gegenbauer polynomial by coefficient extraction from
    exp( 2 sum_k [lambda]_{q**k} cos(k theta) t**k / k )."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    order = _check_order(n, order)
    log_series = TruncatedSeries.zero(COSPOLY_RING, order)
    for k in range(1, order + 1):
        coeff = CosPolynomial({k: gegenbauer_weight(k) * Fraction(2, k)})
        log_series = log_series + TruncatedSeries.monomial(COSPOLY_RING, coeff, k, order)
    return log_series.exp().coeff(n)
