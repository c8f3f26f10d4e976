"""Exact arithmetic in the rational-function field Q(s, Lambda).

The two generators are

    s       with s**2 = q   (so half-integer powers of q are honest monomials),
    Lambda  standing for q**lambda, never expanded.

An IntPoly is a sparse integer polynomial in (s, Lambda):

    terms: dict mapping (exp_s, exp_lam) -> nonzero int

Exponents are nonnegative; negative powers of s or Lambda live in the
denominator of a RationalFunction.  Term order is graded lexicographic on
(exp_s, exp_lam), which fixes leading coefficients, display order and hashes.

A RationalFunction is a reduced fraction of two IntPolys: numerator and
denominator coprime (integer content included), denominator nonzero with
positive leading coefficient, zero stored as 0/1.  All operations return
canonical values, so equality is structural.

gcd strategy: map the polynomial to an integer by evaluating at a large
integer point, take an integer gcd, reconstruct a candidate from balanced
base-xi digits and verify it by exact trial division; fall back to a
primitive pseudo-remainder sequence if the heuristic keeps failing.  The
bivariate case runs a primitive PRS in Lambda whose content computations
reduce to the univariate heuristic.
"""

from __future__ import annotations

import math
from fractions import Fraction


class DivisionByZero(ZeroDivisionError):
    """Division by the zero rational function."""


class PoleAtOne(ArithmeticError):
    """The q -> 1 limit does not exist (denominator vanishes at s = 1)."""


class LambdaPresent(ValueError):
    """Operation requires a Lambda-free element."""


class NumericPole(ArithmeticError):
    """Denominator numerically vanishes at the evaluation point."""


def _grlex(key):
    a, b = key
    return (a + b, a, b)


# ---------------------------------------------------------------------------
# dense univariate helpers (s-only fast path); coefficient lists low -> high
# ---------------------------------------------------------------------------

def _unorm(c):
    n = len(c)
    while n > 1 and c[n - 1] == 0:
        n -= 1
    return c[:n]


def _uis_zero(c):
    return len(c) == 1 and c[0] == 0


def _ucontent(c):
    g = 0
    for x in c:
        g = math.gcd(g, x)
        if g == 1:
            return 1
    return g


def _uprimitive(c):
    """Divide out integer content and make the leading coefficient positive."""
    g = _ucontent(c)
    if g == 0:
        return [0]
    if c[-1] < 0:
        g = -g
    return [x // g for x in c]


def _ueval(c, x):
    acc = 0
    for coeff in reversed(c):
        acc = acc * x + coeff
    return acc


def _udivexact(a, b):
    """Exact quotient a / b over Z[s], or None if b does not divide a."""
    if _uis_zero(b):
        raise ZeroDivisionError("polynomial division by zero")
    if _uis_zero(a):
        return [0]
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return None
    r = list(a)
    lead = b[db]
    q = [0] * (da - db + 1)
    for i in range(da, db - 1, -1):
        ri = r[i]
        if ri == 0:
            continue
        if ri % lead:
            return None
        f = ri // lead
        q[i - db] = f
        for j in range(db + 1):
            r[i - db + j] -= f * b[j]
    if any(r):
        return None
    return _unorm(q)


def _ufrom_balanced(value, xi):
    """Reconstruct a polynomial from the balanced base-xi digits of value."""
    digits = []
    v = abs(value)
    half = xi // 2
    while v:
        r = v % xi
        if r > half:
            r -= xi
        digits.append(r)
        v = (v - r) // xi
    return digits or [0]


def _uprem(a, b):
    """Pseudo-remainder of a by b over Z[s] (content-stripped each step)."""
    db = len(b) - 1
    lead = b[db]
    r = list(a)
    while True:
        r = _unorm(r)
        dr = len(r) - 1
        if _uis_zero(r) or dr < db:
            return r
        top = r[dr]
        g = math.gcd(abs(top), abs(lead))
        fl, ft = lead // g, top // g
        for i in range(dr):
            r[i] *= fl
        for j in range(db):
            r[dr - db + j] -= ft * b[j]
        r[dr] = 0


def _ugcd_prs(a, b):
    a, b = _uprimitive(a), _uprimitive(b)
    if len(a) < len(b):
        a, b = b, a
    while not _uis_zero(b) and len(b) > 1:
        a, b = b, _uprimitive(_uprem(a, b))
    if _uis_zero(b):
        return a
    return [1]


def _ugcd(a, b):
    """gcd over Z[s], integer content included, positive leading coefficient."""
    if _uis_zero(a):
        return [0] if _uis_zero(b) else _pos_lead_list(b)
    if _uis_zero(b):
        return _pos_lead_list(a)
    ca, cb = _ucontent(a), _ucontent(b)
    cg = math.gcd(ca, cb)
    A = [x // ca for x in a]
    B = [x // cb for x in b]
    if len(A) == 1 or len(B) == 1:
        return [cg]
    bound = 2 * min(max(abs(x) for x in A), max(abs(x) for x in B)) + 2
    xi = max(bound, 4)
    for _ in range(8):
        va, vb = _ueval(A, xi), _ueval(B, xi)
        if va and vb:
            g = math.gcd(va, vb)
            cand = _uprimitive(_ufrom_balanced(g, xi))
            if not _uis_zero(cand):
                if _udivexact(A, cand) is not None and _udivexact(B, cand) is not None:
                    return [cg * x for x in cand]
        xi = xi * 73794 // 27011 + 1
    g = _ugcd_prs(A, B)
    return [cg * x for x in g]


def _pos_lead_list(c):
    if c[-1] < 0:
        return [-x for x in c]
    return list(c)


# ---------------------------------------------------------------------------
# IntPoly
# ---------------------------------------------------------------------------

class IntPoly:
    """Sparse integer polynomial in the generators s and Lambda."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, coeff in terms.items():
                if coeff:
                    a, b = key
                    if a < 0 or b < 0:
                        raise ValueError("IntPoly exponents must be nonnegative")
                    clean[(a, b)] = coeff
        self._terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------
    @classmethod
    def zero(cls):
        return _INTPOLY_ZERO

    @classmethod
    def one(cls):
        return _INTPOLY_ONE

    @classmethod
    def const(cls, c):
        return cls({(0, 0): int(c)})

    @classmethod
    def monomial(cls, coeff, exp_s=0, exp_lam=0):
        return cls({(exp_s, exp_lam): coeff})

    @classmethod
    def s_pow(cls, e):
        return cls({(e, 0): 1})

    @classmethod
    def lam_pow(cls, e):
        return cls({(0, e): 1})

    # -- structure ---------------------------------------------------------
    def is_zero(self):
        return not self._terms

    def is_one(self):
        return self._terms == {(0, 0): 1}

    def is_const(self):
        return not self._terms or set(self._terms) == {(0, 0)}

    def has_lam(self):
        return any(b for _, b in self._terms)

    def is_monomial(self):
        return len(self._terms) == 1

    def deg_s(self):
        return max((a for a, _ in self._terms), default=0)

    def deg_lam(self):
        return max((b for _, b in self._terms), default=0)

    def sorted_terms(self):
        """Terms in graded-lex descending order: list of ((exp_s, exp_lam), coeff)."""
        return [(k, self._terms[k]) for k in sorted(self._terms, key=_grlex, reverse=True)]

    def leading_key(self):
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self._terms, key=_grlex)

    def leading_coeff(self):
        return self._terms[self.leading_key()] if self._terms else 0

    def content(self):
        g = 0
        for c in self._terms.values():
            g = math.gcd(g, c)
            if g == 1:
                break
        return g

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, IntPoly):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return _raw_poly(out)

    def __sub__(self, other):
        if not isinstance(other, IntPoly):
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            v = out.get(k, 0) - c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return _raw_poly(out)

    def __neg__(self):
        return _raw_poly({k: -c for k, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return _INTPOLY_ZERO
            return _raw_poly({k: c * other for k, c in self._terms.items()})
        if not isinstance(other, IntPoly):
            return NotImplemented
        if not self._terms or not other._terms:
            return _INTPOLY_ZERO
        out = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                v = out.get(k, 0) + c1 * c2
                if v:
                    out[k] = v
                else:
                    del out[k]
        return _raw_poly(out)

    __rmul__ = __mul__

    def __pow__(self, e):
        if e < 0:
            raise ValueError("IntPoly power must be nonnegative")
        result = _INTPOLY_ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self.sorted_terms()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- evaluation & substitution -----------------------------------------
    def eval_int(self, s_value, lam_value=1):
        acc = 0
        for (a, b), c in self._terms.items():
            acc += c * s_value**a * lam_value**b
        return acc

    def eval_complex(self, s_value, lam_value=1.0):
        acc = 0j
        for (a, b), c in self._terms.items():
            acc += c * s_value**a * lam_value**b
        return acc

    def subs_lam_spow(self, m):
        """Substitute Lambda -> s**m (m >= 0)."""
        out = {}
        for (a, b), c in self._terms.items():
            k = (a + m * b, 0)
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                del out[k]
        return _raw_poly(out)

    # -- division ----------------------------------------------------------
    def divexact(self, d):
        """Exact quotient self / d, or None if d does not divide self."""
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if self.is_zero():
            return _INTPOLY_ZERO
        if d.is_one():
            return self
        if not self.has_lam() and not d.has_lam():
            q = _udivexact(self._dense_s(), d._dense_s())
            return None if q is None else _from_dense_s(q)
        r = dict(self._terms)
        out = {}
        dk = d.leading_key()
        dc = d._terms[dk]
        while r:
            rk = max(r, key=_grlex)
            rc = r[rk]
            ea, eb = rk[0] - dk[0], rk[1] - dk[1]
            if ea < 0 or eb < 0 or rc % dc:
                return None
            f = rc // dc
            out[(ea, eb)] = f
            for (a, b), c in d._terms.items():
                k = (a + ea, b + eb)
                v = r.get(k, 0) - f * c
                if v:
                    r[k] = v
                else:
                    r.pop(k, None)
        return _raw_poly(out)

    # -- dense conversion ----------------------------------------------------
    def _dense_s(self):
        if self.has_lam():
            raise LambdaPresent("element contains the Lambda generator")
        c = [0] * (self.deg_s() + 1)
        for (a, _), v in self._terms.items():
            c[a] = v
        return c

    # -- Lambda-recursive view ----------------------------------------------
    def lam_coeffs(self):
        """Coefficients of Lambda**j as s-only IntPolys: dict j -> IntPoly."""
        out = {}
        for (a, b), c in self._terms.items():
            out.setdefault(b, {})[(a, 0)] = c
        return {b: _raw_poly(t) for b, t in out.items()}

    # -- text ----------------------------------------------------------------
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"IntPoly({format_poly(self)})"


def _raw_poly(terms):
    p = IntPoly.__new__(IntPoly)
    p._terms = terms
    p._hash = None
    return p


def _from_dense_s(c):
    return _raw_poly({(i, 0): v for i, v in enumerate(c) if v})


_INTPOLY_ZERO = IntPoly()
_INTPOLY_ONE = IntPoly({(0, 0): 1})


# ---------------------------------------------------------------------------
# polynomial gcd
# ---------------------------------------------------------------------------

def _lam_content_split(p):
    """Split p into (content, primitive) where content is the gcd of the
    Lambda-coefficients (an s-only poly with positive leading coefficient)."""
    coeffs = p.lam_coeffs()
    cont = None
    for c in coeffs.values():
        cont = _pos_lead(c) if cont is None else poly_gcd(cont, c)
        if cont.is_one():
            break
    prim = p.divexact(cont)
    return cont, prim


def _prem_lam(a, b):
    """Pseudo-remainder of a by b viewed as polynomials in Lambda."""
    db = b.deg_lam()
    lead = b.lam_coeffs()[db]
    r = a
    while not r.is_zero() and r.deg_lam() >= db:
        dr = r.deg_lam()
        top = r.lam_coeffs()[dr]
        shift = dr - db
        shifted = _raw_poly({(es, el + shift): c for (es, el), c in b._terms.items()})
        r = lead * r - top * shifted
    return r


def _gcd_lam_prs(a, b):
    """gcd of Lambda-primitive polynomials with deg_lam >= 1 somewhere."""
    if a.deg_lam() < b.deg_lam():
        a, b = b, a
    while True:
        if b.is_zero():
            g = a
            break
        if b.deg_lam() == 0:
            return _INTPOLY_ONE
        r = _prem_lam(a, b)
        if r.is_zero():
            g = b
            break
        _, r = _lam_content_split(r)
        a, b = b, r
    _, g = _lam_content_split(g)
    return g


def poly_gcd(a, b):
    """gcd in Z[s, Lambda], positive leading coefficient, content included."""
    if a.is_zero():
        return b if b.is_zero() else _pos_lead(b)
    if b.is_zero():
        return _pos_lead(a)
    if not a.has_lam() and not b.has_lam():
        return _from_dense_s(_ugcd(a._dense_s(), b._dense_s()))
    ca, pa = _lam_content_split(a)
    cb, pb = _lam_content_split(b)
    gc = poly_gcd(ca, cb)
    g = _gcd_lam_prs(pa, pb)
    return _pos_lead(gc * g)


def _pos_lead(p):
    if p.leading_coeff() < 0:
        return -p
    return p


# ---------------------------------------------------------------------------
# RationalFunction
# ---------------------------------------------------------------------------

class RationalFunction:
    """Canonical element of Q(s, Lambda): coprime num/den, positive-lead den."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        if isinstance(num, int):
            num = IntPoly.const(num)
        if den is None:
            den = _INTPOLY_ONE
        elif isinstance(den, int):
            den = IntPoly.const(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            self.num, self.den = _INTPOLY_ZERO, _INTPOLY_ONE
        else:
            g = poly_gcd(num, den)
            if not g.is_one():
                num = num.divexact(g)
                den = den.divexact(g)
            if den.leading_coeff() < 0:
                num, den = -num, -den
            self.num, self.den = num, den
        self._hash = None

    # -- constructors --------------------------------------------------------
    @classmethod
    def zero(cls):
        return _RF_ZERO

    @classmethod
    def one(cls):
        return _RF_ONE

    @classmethod
    def from_int(cls, n):
        return _rf_raw(IntPoly.const(n), _INTPOLY_ONE)

    @classmethod
    def from_fraction(cls, fr):
        fr = Fraction(fr)
        return _rf_raw(IntPoly.const(fr.numerator), IntPoly.const(fr.denominator))

    @classmethod
    def s(cls):
        return _rf_raw(IntPoly.s_pow(1), _INTPOLY_ONE)

    @classmethod
    def q(cls):
        return _rf_raw(IntPoly.s_pow(2), _INTPOLY_ONE)

    @classmethod
    def lam(cls):
        return _rf_raw(IntPoly.lam_pow(1), _INTPOLY_ONE)

    @classmethod
    def q_power(cls, e):
        """q**e for any integer e; q**(1/2)-steps via s_power."""
        return cls.s_power(2 * e)

    @classmethod
    def s_power(cls, e):
        """s**e for any integer e (s = q**(1/2))."""
        if e >= 0:
            return _rf_raw(IntPoly.s_pow(e), _INTPOLY_ONE)
        return _rf_raw(_INTPOLY_ONE, IntPoly.s_pow(-e))

    # -- structure -----------------------------------------------------------
    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def has_lam(self):
        return self.num.has_lam() or self.den.has_lam()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- arithmetic ------------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero():
            return other
        if c.is_zero():
            return self
        g = poly_gcd(b, d)
        if g.is_one():
            return _rf_raw(a * d + c * b, b * d)
        b1 = b.divexact(g)
        d1 = d.divexact(g)
        num = a * d1 + c * b1
        if num.is_zero():
            return _RF_ZERO
        h = poly_gcd(num, g)
        if not h.is_one():
            num = num.divexact(h)
            g = g.divexact(h)
        return _rf_raw(num, g * b1 * d1)

    __radd__ = __add__

    def __neg__(self):
        return _rf_raw(-self.num, self.den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.num, self.den, other.num, other.den
        if a.is_zero() or c.is_zero():
            return _RF_ZERO
        g1 = poly_gcd(a, d)
        if not g1.is_one():
            a = a.divexact(g1)
            d = d.divexact(g1)
        g2 = poly_gcd(c, b)
        if not g2.is_one():
            c = c.divexact(g2)
            b = b.divexact(g2)
        return _rf_raw(a * c, b * d)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.num.is_zero():
            raise DivisionByZero("division by the zero element")
        num, den = other.den, other.num
        if den.leading_coeff() < 0:
            num, den = -num, -den
        return self * _rf_raw(num, den)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, e):
        if e == 0:
            return _RF_ONE
        if e < 0:
            if self.num.is_zero():
                raise DivisionByZero("negative power of the zero element")
            return (_RF_ONE / self) ** (-e)
        return _rf_raw(self.num**e, self.den**e)

    def inverse(self):
        return _RF_ONE / self

    # -- limits & evaluation -----------------------------------------------
    def limit_q_to_1(self):
        """Exact value at s = 1 after cancelling any shared (s - 1) factors.

        Requires a Lambda-free element; raises PoleAtOne if the limit is
        infinite.  Returns a Fraction.
        """
        if self.has_lam():
            raise LambdaPresent("element contains q**lambda")
        num = self.num._dense_s()
        den = self.den._dense_s()
        nv, dv = _ueval(num, 1), _ueval(den, 1)
        while dv == 0 and nv == 0:
            num = _syndiv_s_minus_1(num)
            den = _syndiv_s_minus_1(den)
            nv, dv = _ueval(num, 1), _ueval(den, 1)
        if dv == 0:
            raise PoleAtOne("denominator vanishes at q = 1")
        return Fraction(nv, dv)

    def eval_numeric(self, s_value, lam_value=None):
        """Double-precision complex value at the given generator values."""
        if self.has_lam() and lam_value is None:
            raise LambdaPresent("element contains q**lambda; pass lam_value")
        lv = 1.0 if lam_value is None else complex(lam_value)
        dv = self.den.eval_complex(complex(s_value), lv)
        if abs(dv) < 1e-12:
            raise NumericPole(f"denominator magnitude {abs(dv):.3e} below 1e-12")
        return self.num.eval_complex(complex(s_value), lv) / dv

    def subs_lam_q(self):
        """Substitute Lambda -> q, the lambda = 1 specialization."""
        return RationalFunction(self.num.subs_lam_spow(2), self.den.subs_lam_spow(2))

    def as_fraction(self):
        """The element as a Fraction; raises if not constant."""
        if not self.num.is_const() or not self.den.is_const():
            raise ValueError("element is not a rational constant")
        return Fraction(self.num.leading_coeff() if self.num else 0,
                        self.den.leading_coeff())

    # -- text ----------------------------------------------------------------
    def __str__(self):
        return format_rational(self)

    def __repr__(self):
        return f"RationalFunction({format_rational(self)})"


def _rf_raw(num, den):
    r = RationalFunction.__new__(RationalFunction)
    r.num, r.den, r._hash = num, den, None
    return r


def _coerce(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, int):
        return RationalFunction.from_int(x)
    if isinstance(x, Fraction):
        return RationalFunction.from_fraction(x)
    return NotImplemented


def _syndiv_s_minus_1(c):
    """Synthetic division by (s - 1); caller guarantees divisibility."""
    out = [0] * (len(c) - 1) if len(c) > 1 else [0]
    acc = 0
    for i in range(len(c) - 1, 0, -1):
        acc += c[i]
        out[i - 1] = acc
    return _unorm(out)


_RF_ZERO = _rf_raw(_INTPOLY_ZERO, _INTPOLY_ONE)
_RF_ONE = _rf_raw(_INTPOLY_ONE, _INTPOLY_ONE)


# ---------------------------------------------------------------------------
# text rendering and parsing (q / q^{1/2} notation; s never shown)
# ---------------------------------------------------------------------------

def _format_q_exp(exp_s):
    """Render s**exp_s as a power of q (exp_s may be negative)."""
    if exp_s % 2 == 0:
        half = exp_s // 2
        if half == 1:
            return "q"
        return "q^{%d}" % half
    return "q^{%d/2}" % exp_s


def _format_lam_exp(exp_lam):
    if exp_lam == 1:
        return "lam"
    return "lam^{%d}" % exp_lam


def _format_term(coeff, exp_s, exp_lam):
    parts = []
    if exp_s:
        parts.append(_format_q_exp(exp_s))
    if exp_lam:
        parts.append(_format_lam_exp(exp_lam))
    if not parts:
        return str(abs(coeff)), coeff < 0
    if abs(coeff) != 1:
        parts.insert(0, str(abs(coeff)))
    return "*".join(parts), coeff < 0


def _join_terms(rendered):
    out = []
    for i, (text, negative) in enumerate(rendered):
        if i == 0:
            out.append("-" + text if negative else text)
        else:
            out.append((" - " if negative else " + ") + text)
    return "".join(out)


def format_poly(p):
    """Canonical text of an IntPoly in q / q^{1/2} / lam notation."""
    if p.is_zero():
        return "0"
    return _join_terms([_format_term(c, k[0], k[1]) for k, c in p.sorted_terms()])


def format_rational(r):
    """Canonical text of a RationalFunction.

    A denominator that is a single monomial with coefficient 1 is folded into
    negative exponents; anything else renders as (num)/(den).
    """
    if r.den.is_one():
        return format_poly(r.num)
    if r.den.is_monomial() and r.den.leading_coeff() == 1:
        (ds, dl), _ = r.den.sorted_terms()[0]
        rendered = [_format_term(c, k[0] - ds, k[1] - dl) for k, c in r.num.sorted_terms()]
        return _join_terms(rendered)
    return f"({format_poly(r.num)})/({format_poly(r.den)})"


class ParseError(ValueError):
    """Malformed polynomial / rational-function text."""


def _parse_exponent(text):
    text = text.strip()
    if text.startswith("{") and text.endswith("}"):
        text = text[1:-1]
    elif text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    if text.endswith("/2"):
        return int(text[:-2]), True
    return int(text), False


def _parse_laurent_term(term):
    """One product term -> (coeff, exp_s, exp_lam); exponents may be negative."""
    coeff, es, el = 1, 0, 0
    if term.startswith("-"):
        coeff, term = -1, term[1:]
    elif term.startswith("+"):
        term = term[1:]
    for factor in term.split("*"):
        factor = factor.strip()
        if not factor:
            raise ParseError(f"empty factor in {term!r}")
        if factor[0] in "+-" or factor[0].isdigit():
            coeff *= int(factor)
        elif factor.startswith("q"):
            rest = factor[1:]
            if not rest:
                es += 2
            elif rest.startswith("^"):
                val, is_half = _parse_exponent(rest[1:])
                es += val if is_half else 2 * val
            else:
                raise ParseError(f"bad factor {factor!r}")
        elif factor.startswith("lam"):
            rest = factor[3:]
            if not rest:
                el += 1
            elif rest.startswith("^"):
                val, is_half = _parse_exponent(rest[1:])
                if is_half:
                    raise ParseError("half-integer lam exponent")
                el += val
            else:
                raise ParseError(f"bad factor {factor!r}")
        else:
            raise ParseError(f"bad factor {factor!r}")
    return coeff, es, el


def _split_sum(text):
    """Split on top-level +/- signs, keeping signs with the terms.

    A sign right after '*', '^', '{' or '(' belongs to an exponent or a
    signed coefficient, not to a new term.
    """
    terms, current = [], []
    for ch in text:
        if ch in "+-" and current and current[-1] not in "*^{(":
            terms.append("".join(current))
            current = [ch]
        else:
            current.append(ch)
    if current:
        terms.append("".join(current))
    return terms


def parse_laurent(text):
    """Parse a sum of monomial terms into {(exp_s, exp_lam): coeff};
    exponents may be negative."""
    text = text.replace(" ", "")
    if not text:
        raise ParseError("empty polynomial text")
    out = {}
    for term in _split_sum(text):
        coeff, es, el = _parse_laurent_term(term)
        key = (es, el)
        v = out.get(key, 0) + coeff
        if v:
            out[key] = v
        else:
            out.pop(key, None)
    return out


def parse_poly(text):
    """Parse canonical IntPoly text (nonnegative exponents only)."""
    terms = parse_laurent(text)
    for (es, el) in terms:
        if es < 0 or el < 0:
            raise ParseError("negative exponent in plain polynomial text")
    return IntPoly(terms)


def parse_rational(text):
    """Parse RationalFunction text: plain sum, Laurent sum, or (num)/(den)."""
    text = text.strip()
    if ")/(" in text and text.startswith("(") and text.endswith(")"):
        i = text.index(")/(")
        num_text, den_text = text[1:i], text[i + 3:-1]
        return RationalFunction(parse_poly(num_text), parse_poly(den_text))
    terms = parse_laurent(text)
    min_s = min((es for es, _ in terms), default=0)
    min_l = min((el for _, el in terms), default=0)
    shift_s = -min(min_s, 0)
    shift_l = -min(min_l, 0)
    num = IntPoly({(es + shift_s, el + shift_l): c for (es, el), c in terms.items()})
    den = IntPoly({(shift_s, shift_l): 1})
    return RationalFunction(num, den)
