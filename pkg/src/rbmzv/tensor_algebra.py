"""Tensor words, mixable shuffle, quasi-shuffle and the free commutative
Rota-Baxter algebra Sha(A) with its shift operator.

Words are tuples of letter payloads (see ``letters``).  Linear
combinations of words are plain dicts word -> coefficient with zero
coefficients dropped; the empty word () stands for the ring unit of the
unitarized word algebra.  Elements of Sha(A) are handled by ``ShaAlgebra``
/ ``ShaElement``; there the distinguished payload ``None`` is the unit
letter of the unitarization of A.
"""

from __future__ import annotations

from fractions import Fraction

from .letters import LetterSystem

Word = tuple
LinComb = dict  # Word -> coefficient


def _add_term(out: dict, w, c):
    v = out.get(w)
    if v is None:
        out[w] = c
    else:
        v = v + c
        if v:
            out[w] = v
        else:
            del out[w]


def add_into(out: dict, other: dict, scale=1):
    for w, c in other.items():
        _add_term(out, w, scale * c if scale != 1 else c)
    return out


def _unit_product(system: LetterSystem, x, y):
    """Letter product in the unitarization k + A (None is the unit)."""
    if x is None:
        return [(1, y)]
    if y is None:
        return [(1, x)]
    return system.product(x, y)


# Subproblem cache for the shuffle recursions.  Results for long word
# pairs are large and rarely shared, so only short pairs are kept.
_MEMO: dict = {}
_MEMO_MAX_LEN = 6


def _check_weight(system: LetterSystem, weight):
    if system.zero_product and weight != 0:
        raise ValueError(
            f"letter system '{system.name}' has the zero product; "
            "only weight 0 is allowed"
        )


def mixable_shuffle(system: LetterSystem, a: Word, b: Word, weight=1) -> LinComb:
    """Mixable shuffle of weight ``weight`` via the four-case recursion."""
    _check_weight(system, weight)
    return dict(_msh(system, tuple(a), tuple(b), weight))


def _msh(system, a, b, lam):
    if not a:
        return {b: 1}
    if not b:
        return {a: 1}
    small = len(a) + len(b) <= _MEMO_MAX_LEN
    if small:
        key = (system.name, lam, a, b)
        hit = _MEMO.get(key)
        if hit is not None:
            return hit
    out: dict = {}
    get = out.get
    a0, arest = a[0], a[1:]
    b0, brest = b[0], b[1:]
    for w, c in _msh(system, arest, b, lam).items():
        nw = (a0,) + w
        v = get(nw)
        out[nw] = c if v is None else v + c
    for w, c in _msh(system, a, brest, lam).items():
        nw = (b0,) + w
        v = get(nw)
        out[nw] = c if v is None else v + c
    if lam:
        merged = _unit_product(system, a0, b0)
        if merged:
            tail = _msh(system, arest, brest, lam)
            for pc, p in merged:
                coef = lam * pc
                for w, c in tail.items():
                    nw = (p,) + w
                    v = get(nw)
                    out[nw] = coef * c if v is None else v + coef * c
    for nw in [w for w, v in out.items() if not v]:
        del out[nw]
    if small:
        _MEMO[key] = out
    return out


def _multiset_perms(counts):
    """All distinct sequences over the keys of ``counts`` with those counts."""
    if all(v == 0 for v in counts.values()):
        yield ()
        return
    for k, v in counts.items():
        if v:
            counts[k] -= 1
            for rest in _multiset_perms(counts):
                yield (k,) + rest
            counts[k] += 1


def mixable_shuffle_direct(system: LetterSystem, a: Word, b: Word, weight=1) -> LinComb:
    """Mixable shuffle by direct enumeration of all mixable shuffles.

    A mixable shuffle is encoded as a pattern over {A, B, M}: take the
    next letter of a, of b, or merge the next letters of both.  This is
    independent of the recursion in ``mixable_shuffle`` and serves as its
    cross-validation oracle.
    """
    _check_weight(system, weight)
    a, b = tuple(a), tuple(b)
    m, n = len(a), len(b)
    out: dict = {}
    for k in range(0, min(m, n) + 1):
        if k > 0 and not weight:
            break
        for pattern in _multiset_perms({"A": m - k, "B": n - k, "M": k}):
            terms = [(1, ())]
            i = j = 0
            for step in pattern:
                if step == "A":
                    terms = [(c, w + (a[i],)) for c, w in terms]
                    i += 1
                elif step == "B":
                    terms = [(c, w + (b[j],)) for c, w in terms]
                    j += 1
                else:
                    prod = _unit_product(system, a[i], b[j])
                    terms = [
                        (c * weight * pc, w + (p,))
                        for c, w in terms
                        for pc, p in prod
                    ]
                    i += 1
                    j += 1
            for c, w in terms:
                _add_term(out, w, c)
    return out


def quasi_shuffle(system: LetterSystem, a: Word, b: Word) -> LinComb:
    """Hoffman's quasi-shuffle with bracket given by the letter product."""
    return dict(_qsh(system, tuple(a), tuple(b)))


def _qsh(system, a, b):
    if not a:
        return {b: 1}
    if not b:
        return {a: 1}
    small = len(a) + len(b) <= _MEMO_MAX_LEN
    if small:
        key = ("qsh", system.name, a, b)
        hit = _MEMO.get(key)
        if hit is not None:
            return hit
    out: dict = {}
    get = out.get
    a0, w1 = a[0], a[1:]
    b0, w2 = b[0], b[1:]
    for w, c in _qsh(system, w1, b).items():
        nw = (a0,) + w
        v = get(nw)
        out[nw] = c if v is None else v + c
    for w, c in _qsh(system, a, w2).items():
        nw = (b0,) + w
        v = get(nw)
        out[nw] = c if v is None else v + c
    bracket = _unit_product(system, a0, b0)
    if bracket:
        tail = _qsh(system, w1, w2)
        for pc, p in bracket:
            for w, c in tail.items():
                nw = (p,) + w
                v = get(nw)
                out[nw] = pc * c if v is None else v + pc * c
    for nw in [w for w, v in out.items() if not v]:
        del out[nw]
    if small:
        _MEMO[key] = out
    return out


def shuffle_term_count(m: int, n: int) -> int:
    """Number of plain shuffles of words of lengths m and n: C(m+n, m)."""
    import math

    return math.comb(m + n, m)


def word_first_degree(system: LetterSystem, w: Word) -> int:
    return system.degree(w[0])


def render_word(system: LetterSystem, w: Word, sep: str = "⊗") -> str:
    if not w:
        return "1"
    return sep.join(
        "1" if x is None else system.letter_str(x) for x in w
    )


def render_lincomb(system: LetterSystem, lc: LinComb, sep: str = "⊗") -> str:
    if not lc:
        return "0"
    parts = []
    for w in sorted(lc, key=lambda w: (len(w), w)):
        c = lc[w]
        parts.append(f"{c}*{render_word(system, w, sep)}")
    return " + ".join(parts)


class ShaAlgebra:
    """Sha(A) = A x (k + Sha+(A)) with the shift operator P(x) = 1 (x) x.

    Elements are stored as maps (head, tail) -> coefficient where head is
    a letter payload or None (the unit of the unitarized letter algebra)
    and tail is a possibly empty word whose letters may include None.
    """

    def __init__(self, system: LetterSystem, weight=1):
        _check_weight(system, weight)
        self.system = system
        self.weight = weight

    def element(self, terms: dict) -> "ShaElement":
        out: dict = {}
        for k, c in terms.items():
            if c:
                _add_term(out, k, c)
        return ShaElement(self, out)

    def zero(self) -> "ShaElement":
        return ShaElement(self, {})

    def one(self) -> "ShaElement":
        return ShaElement(self, {(None, ()): 1})

    def j(self, payload) -> "ShaElement":
        """The embedding A -> Sha(A), a -> a (x) 1."""
        return ShaElement(self, {(payload, ()): 1})

    def pure(self, head, tail) -> "ShaElement":
        return ShaElement(self, {(head, tuple(tail)): 1})

    def p(self, x: "ShaElement") -> "ShaElement":
        """Shift operator P(head (x) tail) = 1 (x) head (x) tail."""
        if x.alg is not self:
            raise ValueError("element from a different algebra")
        out: dict = {}
        for (h, t), c in x.terms.items():
            _add_term(out, (None, (h,) + t), c)
        return ShaElement(self, out)

    def star(self, u: "ShaElement", v: "ShaElement") -> "ShaElement":
        """u * P(v) + P(u) * v + lambda u * v; satisfies P(u)P(v) = P(u * v)."""
        w = u * self.p(v) + self.p(u) * v
        if self.weight:
            prod = u * v
            if self.weight != 1:
                prod = self.weight * prod
            w = w + prod
        return w

    def nested_p(self, payloads) -> "ShaElement":
        """P(a1 P(a2 ... P(an))) for a sequence of letter payloads."""
        payloads = list(payloads)
        if not payloads:
            raise ValueError("need at least one letter")
        acc = self.p(self.j(payloads[-1]))
        for x in reversed(payloads[:-1]):
            acc = self.p(self.j(x) * acc)
        return acc


class ShaElement:
    __slots__ = ("alg", "terms")

    def __init__(self, alg: ShaAlgebra, terms: dict):
        self.alg = alg
        self.terms = terms

    def _check(self, other):
        if not isinstance(other, ShaElement) or other.alg is not self.alg:
            raise ValueError("elements from different algebras")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add_term(out, k, c)
        return ShaElement(self.alg, out)

    def __sub__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add_term(out, k, -c)
        return ShaElement(self.alg, out)

    def __neg__(self):
        return ShaElement(self.alg, {k: -c for k, c in self.terms.items()})

    def __rmul__(self, scalar):
        if isinstance(scalar, ShaElement):
            return NotImplemented
        if not scalar:
            return ShaElement(self.alg, {})
        return ShaElement(
            self.alg, {k: scalar * c for k, c in self.terms.items()}
        )

    def __mul__(self, other):
        if not isinstance(other, ShaElement):
            return self.__rmul__(other)
        self._check(other)
        alg = self.alg
        system, lam = alg.system, alg.weight
        out: dict = {}
        for (h1, t1), c1 in self.terms.items():
            for (h2, t2), c2 in other.terms.items():
                c = c1 * c2
                heads = _unit_product(system, h1, h2)
                if not heads:
                    continue
                if not t1:
                    tails = {t2: 1}
                elif not t2:
                    tails = {t1: 1}
                else:
                    tails = _msh(system, t1, t2, lam)
                for hc, h in heads:
                    chc = c * hc
                    for t, tc in tails.items():
                        _add_term(out, (h, t), chc * tc)
        return ShaElement(alg, out)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, ShaElement):
            return self.alg is other.alg and self.terms == other.terms
        if not other:
            return not self.terms
        return NotImplemented

    def sort_key(self, key):
        h, t = key
        sk = self.alg.system.sort_key

        def lk(x):
            return (0,) if x is None else (1, sk(x))

        return (lk(h), len(t), tuple(lk(x) for x in t))

    def __str__(self):
        if not self.terms:
            return "0"
        system = self.alg.system
        parts = []
        for key in sorted(self.terms, key=self.sort_key):
            h, t = key
            c = self.terms[key]
            word = render_word(system, (h,) + t)
            parts.append(f"{c}*{word}")
        return " + ".join(parts)

    def __repr__(self):
        return f"ShaElement({self})"
