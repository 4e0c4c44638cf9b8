"""Compositions, the stuffle and shuffle products on zeta symbols, the
binary-word encoding of the integral representation, and the relation
generators (double shuffle, Hoffman partition, Spitzer, congruence).

A composition is a tuple of positive integers; it is admissible when its
first part is >= 2.  A ZetaCombo is a dict composition -> coefficient.
A Relation is a sum-to-zero combination of monomials, each monomial a
sorted tuple of compositions standing for a product of zeta symbols.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .coefficients import TruncSeries, series_exp
from .identity_engine import set_partitions
from .letters import COMPOSITION, QLETTERS, WORD, X0, X1
from .tensor_algebra import _add_term, mixable_shuffle

Composition = tuple
ZetaCombo = dict  # Composition -> coefficient
Monomial = tuple  # sorted tuple of Compositions


class InadmissibleError(ValueError):
    """Raised when a divergent (s1 = 1) composition is used numerically."""


def check_composition(s: Composition):
    if not s or any(not isinstance(p, int) or p < 1 for p in s):
        raise ValueError(f"not a composition: {s!r}")


def is_admissible(s: Composition) -> bool:
    return s[0] >= 2


def require_admissible(s: Composition):
    check_composition(s)
    if not is_admissible(s):
        raise InadmissibleError(f"composition {s} is divergent (first part < 2)")


def weight(s: Composition) -> int:
    return sum(s)


def depth(s: Composition) -> int:
    return len(s)


def parse_composition(text: str) -> Composition:
    try:
        s = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"malformed composition {text!r}") from None
    check_composition(s)
    return s


def composition_str(s: Composition) -> str:
    return ",".join(str(p) for p in s)


def stuffle(a: Composition, b: Composition) -> ZetaCombo:
    """Quasi-shuffle (weight-1 mixable shuffle) of compositions."""
    check_composition(a)
    check_composition(b)
    return mixable_shuffle(COMPOSITION, a, b, 1)


def q_stuffle(a: Composition, b: Composition) -> ZetaCombo:
    """Stuffle over q-letters; coefficients are polynomials in q."""
    check_composition(a)
    check_composition(b)
    return mixable_shuffle(QLETTERS, a, b, 1)


def comp_to_word(c: Composition) -> tuple:
    """s_j -> x0^(s_j - 1) x1, concatenated over the parts."""
    require_admissible(c)
    out = []
    for s in c:
        out.extend([X0] * (s - 1))
        out.append(X1)
    return tuple(out)


def word_to_comp(w: tuple) -> Composition:
    if not w or w[0] != X0 or w[-1] != X1:
        raise ValueError(f"word {w!r} is not admissible (x0...x1)")
    parts = []
    run = 0
    for x in w:
        if x == X0:
            run += 1
        else:
            parts.append(run + 1)
            run = 0
    return tuple(parts)


def shuffle_zeta(a: Composition, b: Composition) -> ZetaCombo:
    """Shuffle product of the word encodings, decoded to compositions."""
    wa, wb = comp_to_word(a), comp_to_word(b)
    out: ZetaCombo = {}
    for w, c in mixable_shuffle(WORD, wa, wb, 0).items():
        _add_term(out, word_to_comp(w), c)
    return out


def combo_mul(x: ZetaCombo, y: ZetaCombo) -> ZetaCombo:
    """Product of zeta combinations expanded through the stuffle."""
    out: ZetaCombo = {}
    for a, ca in x.items():
        for b, cb in y.items():
            for c, cc in stuffle(a, b).items():
                _add_term(out, c, ca * cb * cc)
    return out


@dataclass(frozen=True)
class Relation:
    """A combination of zeta monomials asserted to sum to zero."""

    terms: tuple  # ((Monomial, Fraction), ...) in canonical order
    source: str

    @classmethod
    def from_dict(cls, terms: dict, source: str) -> "Relation":
        items = tuple(
            (m, Fraction(c)) for m, c in sorted(terms.items()) if c
        )
        return cls(items, source)

    def as_dict(self) -> dict:
        return dict(self.terms)

    def max_weight(self) -> int:
        return max(
            (sum(weight(c) for c in m) for m, _ in self.terms), default=0
        )

    def compositions(self):
        seen = []
        for m, _ in self.terms:
            for c in m:
                if c not in seen:
                    seen.append(c)
        return seen

    def to_json(self) -> dict:
        return {
            "source": self.source,
            "terms": [
                {"coef": str(c), "monomial": [list(comp) for comp in m]}
                for m, c in self.terms
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Relation":
        terms = {
            tuple(tuple(c) for c in t["monomial"]): Fraction(t["coef"])
            for t in data["terms"]
        }
        return cls.from_dict(terms, data["source"])


def _mono(*comps) -> Monomial:
    return tuple(sorted(comps))


def double_shuffle_relation(a: Composition, b: Composition) -> Relation:
    """stuffle(a, b) - shuffle(a, b) = 0, in single zeta symbols."""
    require_admissible(a)
    require_admissible(b)
    terms: dict = {}
    for c, coef in stuffle(a, b).items():
        _add_term(terms, _mono(c), Fraction(coef))
    for c, coef in shuffle_zeta(a, b).items():
        _add_term(terms, _mono(c), -Fraction(coef))
    return Relation.from_dict(
        terms, f"double_shuffle({composition_str(a)}|{composition_str(b)})"
    )


def hoffman_partition_relation(s: tuple) -> Relation:
    """Permutation sum of zeta(s_sigma) vs the signed partition sum."""
    n = len(s)
    if not 2 <= n <= 5:
        raise ValueError("need 2..5 exponents")
    if any(p < 2 for p in s):
        raise InadmissibleError("all exponents must be >= 2")
    import itertools

    terms: dict = {}
    for perm in itertools.permutations(range(n)):
        _add_term(terms, _mono(tuple(s[i] for i in perm)), Fraction(1))
    for blocks in set_partitions(n):
        coef = Fraction((-1) ** (n - len(blocks)))
        comps = []
        for block in blocks:
            coef *= math.factorial(len(block) - 1)
            comps.append((sum(s[i - 1] for i in block),))
        _add_term(terms, _mono(*comps), -coef)
    return Relation.from_dict(
        terms, f"hoffman({','.join(str(p) for p in s)})"
    )


class _ZetaPoly:
    """Polynomial in formal zeta symbols: dict monomial -> Fraction."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            _add_term(out, m, c)
        return _ZetaPoly(out)

    def __mul__(self, other):
        if not isinstance(other, _ZetaPoly):
            return self.__rmul__(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                _add_term(out, _mono(*(m1 + m2)), c1 * c2)
        return _ZetaPoly(out)

    def __rmul__(self, scalar):
        return _ZetaPoly({m: scalar * c for m, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, _ZetaPoly):
            return self.terms == other.terms
        if not other:
            return not self.terms
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)


def spitzer_zeta_relation(k: int, order: int) -> Relation:
    """zeta(k,...,k) (order copies) as a polynomial in zeta(k)..zeta(order*k).

    Degree-``order`` coefficient of exp(sum_i (-1)^(i-1) zeta(ik) t^i / i).
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    if not 1 <= order <= 6:
        raise ValueError("order must be in 1..6")
    one = _ZetaPoly({(): Fraction(1)})
    coeffs = [_ZetaPoly()]
    for i in range(1, order + 1):
        coeffs.append(
            _ZetaPoly({_mono((i * k,)): Fraction((-1) ** (i - 1), i)})
        )
    expanded = series_exp(TruncSeries(order, coeffs, one))
    terms: dict = {_mono((k,) * order): Fraction(1)}
    for m, c in expanded.coeffs[order].terms.items():
        _add_term(terms, m, -c)
    return Relation.from_dict(terms, f"spitzer(k={k},order={order})")


@dataclass(frozen=True)
class CongruenceRelation:
    """zeta(s)^p = zeta(p*s1,...,p*sn) mod p, expanded through the stuffle."""

    base: Composition
    p: int
    power: tuple  # ((Composition, int), ...), the stuffle expansion of zeta(s)^p
    target: Composition

    @property
    def holds(self) -> bool:
        terms = dict(self.power)
        if terms.get(self.target, 0) % self.p != 1 % self.p:
            return False
        return all(
            c % self.p == 0 for m, c in terms.items() if m != self.target
        )

    def to_json(self) -> dict:
        return {
            "source": f"congruence({composition_str(self.base)},p={self.p})",
            "modulus": self.p,
            "target": list(self.target),
            "power": [
                {"coef": str(c), "comp": list(m)} for m, c in self.power
            ],
            "holds": self.holds,
        }


def congruence_zeta_relation(s: Composition, p: int) -> CongruenceRelation:
    require_admissible(s)
    if p not in (2, 3, 5, 7):
        raise ValueError("p must be a prime in {2, 3, 5, 7}")
    power: ZetaCombo = {s: 1}
    for _ in range(p - 1):
        power = combo_mul(power, {s: 1})
    target = tuple(p * part for part in s)
    return CongruenceRelation(
        base=s,
        p=p,
        power=tuple(sorted((m, int(c)) for m, c in power.items())),
        target=target,
    )
