"""Concrete Rota-Baxter operators with exact axiom verification: the
partial-sum operator Z on finite windows, polynomial integration I, and
the Jackson-integral operators P_q, P_q-hat and J on polynomials with
rational-function coefficients.
"""

from __future__ import annotations

from fractions import Fraction

from .coefficients import PolyQ, RatFuncQ, ONE_MINUS_Q


# --- partial sums on finite windows -----------------------------------------

def z_apply(f: list) -> list:
    """Z[f](k) = sum_{i<k} f(i); Z[f](1) = 0.  Sequences are 1-indexed lists."""
    out = []
    acc = Fraction(0)
    for v in f:
        out.append(acc)
        acc += v
    return out


def seq_mul(f: list, g: list) -> list:
    if len(f) != len(g):
        raise ValueError("window size mismatch")
    return [a * b for a, b in zip(f, g)]


def z_rb_defect(f: list, g: list) -> list:
    """Pointwise Z[f]Z[g] - Z[fZ[g]] - Z[Z[f]g] - Z[fg]; all zeros iff the
    weight-1 Rota-Baxter identity holds on the window."""
    zf, zg = z_apply(f), z_apply(g)
    lhs = seq_mul(zf, zg)
    rhs1 = z_apply(seq_mul(f, zg))
    rhs2 = z_apply(seq_mul(zf, g))
    rhs3 = z_apply(seq_mul(f, g))
    return [a - b - c - d for a, b, c, d in zip(lhs, rhs1, rhs2, rhs3)]


def z_nested(fs: list[list]) -> list:
    """Z[f1 Z[f2 ... Z[fn]...]] on a common window."""
    acc = z_apply(fs[-1])
    for f in reversed(fs[:-1]):
        acc = z_apply(seq_mul(f, acc))
    return acc


# --- polynomial integration --------------------------------------------------

def poly_mul(f: list, g: list) -> list:
    if not f or not g:
        return []
    out = [Fraction(0)] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] += a * b
    return out


def poly_add(f: list, g: list) -> list:
    n = max(len(f), len(g))
    out = [Fraction(0)] * n
    for i, a in enumerate(f):
        out[i] += a
    for i, b in enumerate(g):
        out[i] += b
    while out and out[-1] == 0:
        out.pop()
    return out


def integrate(f: list) -> list:
    """I(x^m) = x^(m+1)/(m+1), extended linearly; f is a dense Q-coefficient
    list, constant term first."""
    return [Fraction(0)] + [Fraction(c, 1) / (m + 1) for m, c in enumerate(f)]


def integration_rb_defect(f: list, g: list) -> list:
    """I(f)I(g) - I(f I(g)) - I(I(f) g); zero iff the weight-0 identity holds."""
    i_f, i_g = integrate(f), integrate(g)
    lhs = poly_mul(i_f, i_g)
    rhs = poly_add(integrate(poly_mul(f, i_g)), integrate(poly_mul(i_f, g)))
    return poly_add(lhs, [-c for c in rhs])


# --- Jackson operators -------------------------------------------------------

class XPoly:
    """Polynomial in x with rational-function-in-q coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, RatFuncQ) else RatFuncQ(PolyQ((c,)))
              for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly(self[i] + other[i] for i in range(n))

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return XPoly(self[i] - other[i] for i in range(n))

    def __mul__(self, other):
        if not isinstance(other, XPoly):
            return XPoly(other * c for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return XPoly()
        out = [RatFuncQ(PolyQ())] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return XPoly(out)

    __rmul__ = __mul__

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return RatFuncQ(PolyQ())

    def __eq__(self, other):
        if not isinstance(other, XPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def shift_x(self) -> "XPoly":
        """Multiply by x."""
        return XPoly((RatFuncQ(PolyQ()),) + self.coeffs)

    def evaluate(self, xval: Fraction, qval: Fraction) -> Fraction:
        v = Fraction(0)
        for c in reversed(self.coeffs):
            v = v * xval + c.evaluate(qval)
        return v

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for m, c in enumerate(self.coeffs):
            if not c:
                continue
            xs = "" if m == 0 else ("x" if m == 1 else f"x^{m}")
            cs = str(c)
            if "/" in cs or " " in cs:
                cs = f"({cs})"
            parts.append(f"{cs}*{xs}" if xs else cs)
        return " + ".join(parts)


def _q_power(m: int) -> PolyQ:
    return PolyQ([0] * m + [1])


def p_q(f: XPoly) -> XPoly:
    """P_q[f](x) = sum_{n>0} f(x q^n): x^m -> x^m q^m/(1 - q^m), m >= 1."""
    if f.coeffs and f.coeffs[0]:
        raise ValueError("P_q requires a zero constant term")
    out = [RatFuncQ(PolyQ())]
    for m in range(1, len(f.coeffs)):
        factor = RatFuncQ(_q_power(m), PolyQ((1,)) - _q_power(m))
        out.append(f.coeffs[m] * factor)
    return XPoly(out)


def p_hat_q(f: XPoly) -> XPoly:
    """P_q-hat = id + P_q, a Rota-Baxter operator of weight -1."""
    return f + p_q(f)


def jackson_j(f: XPoly) -> XPoly:
    """Jackson integral J[f](x) = (1-q) sum_{n>=0} f(x q^n) x q^n:
    x^m -> (1-q)/(1 - q^(m+1)) x^(m+1)."""
    out = [RatFuncQ(PolyQ())]
    for m, c in enumerate(f.coeffs):
        factor = RatFuncQ(ONE_MINUS_Q, PolyQ((1,)) - _q_power(m + 1))
        out.append(c * factor)
    return XPoly(out)


def rb_defect(op, f: XPoly, g: XPoly, weight: int) -> XPoly:
    """op(f)op(g) - op(f op(g)) - op(op(f) g) - weight*op(fg)."""
    pf, pg = op(f), op(g)
    d = pf * pg - op(f * pg) - op(pf * g)
    if weight:
        d = d - op(f * g) * RatFuncQ(PolyQ((weight,)))
    return d


def jackson_defect(f: XPoly, g: XPoly) -> XPoly:
    """J[f]J[g] + (1-q) J[f g id] - J[J[f] g + f J[g]]; zero identically."""
    jf, jg = jackson_j(f), jackson_j(g)
    lam = RatFuncQ(ONE_MINUS_Q)
    fg_id = (f * g).shift_x()
    return jf * jg + jackson_j(fg_id) * lam - jackson_j(jf * g + f * jg)
