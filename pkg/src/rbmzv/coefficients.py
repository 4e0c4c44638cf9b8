"""Exact coefficient tower: rationals, polynomials and rational functions
in a formal parameter q, and truncated power series.

Rationals are ``fractions.Fraction`` (arbitrary precision, always reduced).
Polynomials are dense with Fraction coefficients; rational functions are
kept in canonical form (coprime, monic denominator) so equality is a
tuple comparison.  Truncated series work over any coefficient module whose
elements support ``+``, ``*`` and left-multiplication by a Fraction.
"""

from __future__ import annotations

import operator
from fractions import Fraction
from typing import Iterable


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class PolyQ:
    """Dense polynomial in q over the rationals, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("PolyQ is immutable")

    @classmethod
    def const(cls, c) -> "PolyQ":
        return cls((c,))

    @property
    def degree(self) -> int:
        # -1 is the zero-polynomial sentinel
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def _coerce(self, other):
        if isinstance(other, PolyQ):
            return other
        if isinstance(other, (int, Fraction)):
            return PolyQ((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return PolyQ(
            (self[i] + o[i]) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self):
        return PolyQ(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return PolyQ()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return PolyQ(out)

    __rmul__ = __mul__

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            # constants hash like their rational value
            return hash(self.coeffs[0] if self.coeffs else Fraction(0))
        return hash(self.coeffs)

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def monic(self) -> "PolyQ":
        lc = self.leading()
        return PolyQ(c / lc for c in self.coeffs)

    def divmod(self, d: "PolyQ") -> tuple["PolyQ", "PolyQ"]:
        if not d:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        q = [Fraction(0)] * max(len(r) - len(d.coeffs) + 1, 0)
        dl = d.leading()
        dd = d.degree
        while len(r) - 1 >= dd and any(r):
            while r and r[-1] == 0:
                r.pop()
            if len(r) - 1 < dd:
                break
            k = len(r) - 1 - dd
            c = r[-1] / dl
            q[k] = c
            for i, dc in enumerate(d.coeffs):
                r[k + i] -= c * dc
            r.pop()
        return PolyQ(q), PolyQ(r)

    def __floordiv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.divmod(o)[0]

    def __mod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.divmod(o)[1]

    def evaluate(self, q) -> Fraction:
        v = Fraction(0)
        for c in reversed(self.coeffs):
            v = v * q + c
        return v

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                term = str(mag)
            else:
                var = "q" if i == 1 else f"q^{i}"
                term = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if c > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self):
        return f"PolyQ({list(self.coeffs)!r})"


#: the formal variable q
Q_VAR = PolyQ((0, 1))
#: the weight factor 1 - q of the q-letter product
ONE_MINUS_Q = PolyQ((1, -1))


def poly_gcd(a: PolyQ, b: PolyQ) -> PolyQ:
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0."""
    while b:
        a, b = b, a % b
    return a.monic() if a else a


def ratfunc_normalize(num: PolyQ, den: PolyQ) -> "RatFuncQ":
    return RatFuncQ(num, den)


class RatFuncQ:
    """Rational function in q, canonical form: coprime, monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=PolyQ((1,))):
        if not isinstance(num, PolyQ):
            num = PolyQ((num,))
        if not isinstance(den, PolyQ):
            den = PolyQ((den,))
        if not den:
            raise ZeroDivisionError("zero denominator in rational function")
        if not num:
            den = PolyQ((1,))
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num = num // g
                den = den // g
            lc = den.leading()
            if lc != 1:
                num = num * (1 / lc)
                den = den.monic()
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *a):
        raise AttributeError("RatFuncQ is immutable")

    def _coerce(self, other):
        if isinstance(other, RatFuncQ):
            return other
        if isinstance(other, (int, Fraction, PolyQ)):
            return RatFuncQ(other if isinstance(other, PolyQ) else PolyQ((other,)))
        return None

    def __bool__(self):
        return bool(self.num)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFuncQ(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFuncQ(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFuncQ(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o:
            raise ZeroDivisionError("division by zero rational function")
        return RatFuncQ(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.den == PolyQ((1,)) and self.num.degree <= 0:
            return hash(self.num)
        return hash((self.num.coeffs, self.den.coeffs))

    def evaluate(self, q) -> Fraction:
        d = self.den.evaluate(q)
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at q={q}")
        return self.num.evaluate(q) / d

    def __str__(self):
        if self.den == PolyQ((1,)):
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self):
        return f"RatFuncQ({self.num!r}, {self.den!r})"


class TruncSeries:
    """Power series in t truncated at a fixed order.

    Coefficients live in any module with ``+``, a bilinear ``*`` (or the
    ``mul`` callable supplied here) and scalar multiplication by Fraction
    from the left.  ``one`` is the multiplicative unit of the module.
    """

    __slots__ = ("order", "coeffs", "one", "mul")

    def __init__(self, order: int, coeffs, one=Fraction(1), mul=operator.mul):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        zero = 0 * one
        cs = list(coeffs)[: order + 1]
        cs.extend(zero for _ in range(order + 1 - len(cs)))
        self.order = order
        self.coeffs = cs
        self.one = one
        self.mul = mul

    def _check(self, other: "TruncSeries"):
        if self.order != other.order:
            raise ValueError(
                f"truncation order mismatch: {self.order} vs {other.order}"
            )

    def unit(self) -> "TruncSeries":
        return TruncSeries(self.order, [self.one], self.one, self.mul)

    def zero(self) -> "TruncSeries":
        return TruncSeries(self.order, [], self.one, self.mul)

    def __add__(self, other):
        self._check(other)
        return TruncSeries(
            self.order,
            [a + b for a, b in zip(self.coeffs, other.coeffs)],
            self.one,
            self.mul,
        )

    def __sub__(self, other):
        self._check(other)
        return TruncSeries(
            self.order,
            [a + (-1) * b for a, b in zip(self.coeffs, other.coeffs)],
            self.one,
            self.mul,
        )

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        self._check(other)
        zero = 0 * self.one
        out = [zero] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            for j in range(self.order + 1 - i):
                out[i + j] = out[i + j] + self.mul(a, other.coeffs[j])
        return TruncSeries(self.order, out, self.one, self.mul)

    def scale(self, c) -> "TruncSeries":
        return TruncSeries(
            self.order, [c * a for a in self.coeffs], self.one, self.mul
        )

    def shift(self) -> "TruncSeries":
        """Multiply by t."""
        return TruncSeries(
            self.order, [0 * self.one] + self.coeffs[:-1], self.one, self.mul
        )

    def map(self, f) -> "TruncSeries":
        return TruncSeries(
            self.order, [f(a) for a in self.coeffs], self.one, self.mul
        )

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __str__(self):
        return " + ".join(f"({c})*t^{i}" for i, c in enumerate(self.coeffs))


def _require_zero_constant(a: TruncSeries):
    zero = 0 * a.one
    if a.coeffs[0] != zero:
        raise ValueError("series must have zero constant term")


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    return a * b


def series_exp(a: TruncSeries) -> TruncSeries:
    """exp(a) = sum a^n / n!, for a with zero constant term."""
    _require_zero_constant(a)
    result = a.unit()
    term = a.unit()
    for n in range(1, a.order + 1):
        term = (term * a).scale(Fraction(1, n))
        result = result + term
    return result


def series_log1p(a: TruncSeries) -> TruncSeries:
    """log(1 + a) = sum (-1)^(n-1) a^n / n, for a with zero constant term."""
    _require_zero_constant(a)
    result = a.zero()
    power = a.unit()
    for n in range(1, a.order + 1):
        power = power * a
        result = result + power.scale(Fraction((-1) ** (n - 1), n))
    return result
