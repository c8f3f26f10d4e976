"""Truncated formal power series in one variable t over a pluggable ring.

A TruncatedSeries keeps the coefficients of t**0 .. t**order as a dense
tuple.  The coefficient ring is described by a Ring witness carrying its
zero and one; coefficient objects themselves supply +, -, * (including
multiplication by int and Fraction scalars, which exp/log/pow need).

Arithmetic between two series requires equal order and ring; nothing is
silently re-truncated.
"""

from __future__ import annotations

from fractions import Fraction


class OrderMismatch(ValueError):
    """Series combined at different truncation orders."""


class OrderExceeded(IndexError):
    """Coefficient index beyond the truncation order."""


class NonzeroConstantTerm(ValueError):
    """exp (or a q-exponential) needs a zero constant term."""


class ConstantTermNotOne(ValueError):
    """log needs constant term one."""


class NonInvertibleConstant(ValueError):
    """Reciprocal needs an invertible constant term."""


class Ring:
    """Zero/one witnesses for the coefficient ring of a series."""

    __slots__ = ("zero", "one")

    def __init__(self, zero, one):
        self.zero = zero
        self.one = one


FRACTION_RING = Ring(Fraction(0), Fraction(1))


class TruncatedSeries:
    __slots__ = ("ring", "order", "coeffs")

    def __init__(self, ring, coeffs, order=None):
        coeffs = tuple(coeffs)
        if order is None:
            if not coeffs:
                raise ValueError("empty coefficient list needs an explicit order")
            order = len(coeffs) - 1
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        elif len(coeffs) < order + 1:
            coeffs = coeffs + (ring.zero,) * (order + 1 - len(coeffs))
        self.ring = ring
        self.order = order
        self.coeffs = coeffs

    # -- constructors --------------------------------------------------------
    @classmethod
    def zero(cls, ring, order):
        return cls(ring, (), order)

    @classmethod
    def one(cls, ring, order):
        return cls(ring, (ring.one,), order)

    @classmethod
    def constant(cls, ring, value, order):
        return cls(ring, (value,), order)

    @classmethod
    def monomial(cls, ring, coeff, k, order):
        """coeff * t**k, truncated at the given order."""
        if k < 0:
            raise ValueError("monomial exponent must be nonnegative")
        if k > order:
            return cls.zero(ring, order)
        return cls(ring, (ring.zero,) * k + (coeff,), order)

    # -- basics ----------------------------------------------------------------
    def coeff(self, n):
        if n < 0 or n > self.order:
            raise OrderExceeded(f"coefficient {n} of a series truncated at {self.order}")
        return self.coeffs[n]

    def is_zero(self):
        z = self.ring.zero
        return all(c == z for c in self.coeffs)

    def _check(self, other):
        if self.order != other.order:
            raise OrderMismatch(f"orders {self.order} and {other.order}")
        if self.ring is not other.ring:
            raise OrderMismatch("series over different coefficient rings")

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    # -- ring operations ---------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return TruncatedSeries(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.order)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return TruncatedSeries(self.ring, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.order)

    def __neg__(self):
        return TruncatedSeries(self.ring, tuple(-a for a in self.coeffs), self.order)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check(other)
            z = self.ring.zero
            n = self.order
            out = [z] * (n + 1)
            for i, a in enumerate(self.coeffs):
                if a == z:
                    continue
                for j in range(n + 1 - i):
                    b = other.coeffs[j]
                    if b == z:
                        continue
                    out[i + j] = out[i + j] + a * b
            return TruncatedSeries(self.ring, out, n)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, scalar):
        """Multiply every coefficient by a ring scalar (int, Fraction, element)."""
        return TruncatedSeries(self.ring, tuple(c * scalar for c in self.coeffs), self.order)

    # -- exp / log / powers ----------------------------------------------------
    def exp(self):
        """exp(a) via n*b_n = sum_{j=1..n} j*a_j*b_{n-j}; needs a_0 = 0."""
        z, one = self.ring.zero, self.ring.one
        a = self.coeffs
        if a[0] != z:
            raise NonzeroConstantTerm("exp needs zero constant term")
        b = [one]
        for n in range(1, self.order + 1):
            acc = z
            for j in range(1, n + 1):
                aj = a[j]
                if aj == z:
                    continue
                bij = b[n - j]
                if bij == z:
                    continue
                acc = acc + (aj * bij) * j
            b.append(acc * Fraction(1, n))
        return TruncatedSeries(self.ring, b, self.order)

    def log(self):
        """log(a) via n*c_n = n*a_n - sum_{j<n} j*c_j*a_{n-j}; needs a_0 = 1."""
        z, one = self.ring.zero, self.ring.one
        a = self.coeffs
        if a[0] != one:
            raise ConstantTermNotOne("log needs constant term one")
        c = [z]
        for n in range(1, self.order + 1):
            acc = a[n] * n
            for j in range(1, n):
                cj = c[j]
                if cj == z:
                    continue
                anj = a[n - j]
                if anj == z:
                    continue
                acc = acc - (cj * anj) * j
            c.append(acc * Fraction(1, n))
        return TruncatedSeries(self.ring, c, self.order)

    def reciprocal(self):
        z = self.ring.zero
        a = self.coeffs
        try:
            r0 = self.ring.one / a[0]
        except Exception as exc:
            raise NonInvertibleConstant("constant term is not invertible") from exc
        r = [r0]
        for n in range(1, self.order + 1):
            acc = z
            for j in range(1, n + 1):
                aj = a[j]
                if aj == z:
                    continue
                rnj = r[n - j]
                if rnj == z:
                    continue
                acc = acc + aj * rnj
            r.append(-(r0 * acc))
        return TruncatedSeries(self.ring, r, self.order)

    def int_pow(self, e):
        """a**e for any integer e (reciprocal first when e < 0)."""
        if e < 0:
            return self.reciprocal().int_pow(-e)
        result = TruncatedSeries.one(self.ring, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def substitute(self, scalar, k):
        """t -> scalar * t**k (k >= 1), same truncation order."""
        if k < 1:
            raise ValueError("substitution exponent must be >= 1")
        z = self.ring.zero
        out = [z] * (self.order + 1)
        power = self.ring.one
        for j, c in enumerate(self.coeffs):
            if j * k > self.order:
                break
            if j > 0:
                power = power * scalar
            if c != z:
                out[j * k] = out[j * k] + c * power
        return TruncatedSeries(self.ring, out, self.order)

    def __repr__(self):
        body = ", ".join(f"t^{i}: {c}" for i, c in enumerate(self.coeffs) if c != self.ring.zero)
        return f"TruncatedSeries(order={self.order}; {body or '0'})"
