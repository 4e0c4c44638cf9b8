"""Concrete letter algebras: composition letters, q-letters, binary word
letters, polylogarithm letters and monomial letters.

A letter is a hashable payload; a system supplies the (commutative,
associative) letter product, the filtration degree and text rendering.
The product returns a list of (coefficient, payload) pairs, empty for the
zero product.
"""

from __future__ import annotations

from .coefficients import ONE_MINUS_Q


class LetterSystem:
    name: str = "abstract"
    zero_product: bool = False

    def product(self, x, y):
        raise NotImplementedError

    def degree(self, payload) -> int:
        raise NotImplementedError

    def letter_str(self, payload) -> str:
        raise NotImplementedError

    def sort_key(self, payload):
        return payload

    def __repr__(self):
        return f"<letter system {self.name}>"


class CompositionLetters(LetterSystem):
    """Exponents s >= 1 of the power functions 1/x^s; product adds exponents."""

    name = "composition"

    def product(self, x, y):
        return [(1, x + y)]

    def degree(self, payload):
        return payload

    def letter_str(self, payload):
        return str(payload)


class MonomialLetters(LetterSystem):
    """Monomials a^i of a polynomial ring in one variable."""

    name = "monomial"

    def product(self, x, y):
        return [(1, x + y)]

    def degree(self, payload):
        return payload

    def letter_str(self, payload):
        return f"a^{payload}"


class QLetters(LetterSystem):
    """q-analog letters with product q_s * q_t = q_{s+t} + (1-q) q_{s+t-1}."""

    name = "q"

    def product(self, x, y):
        return [(1, x + y), (ONE_MINUS_Q, x + y - 1)]

    def degree(self, payload):
        # recorded grading; the (1-q) term lands one degree below it
        return payload

    def letter_str(self, payload):
        return f"q[{payload}]"


# word-letter payloads
X0 = 0  # dt/t
X1 = 1  # dt/(1-t)


class WordLetters(LetterSystem):
    """Two-letter alphabet of the iterated-integral encoding, zero product.

    Degrees are chosen so that "starts with a degree-2 letter" is exactly
    the admissibility condition s1 >= 2 of the decoded composition.
    """

    name = "word"
    zero_product = True

    def product(self, x, y):
        return []

    def degree(self, payload):
        return 2 if payload == X0 else 1

    def letter_str(self, payload):
        return "x0" if payload == X0 else "x1"


class PolylogLetters(LetterSystem):
    """Letters (s, z-exponent vector) for multiple polylogarithms.

    The z part is a formal multiplicative symbol: an exponent vector over a
    fixed finite alphabet z1..zm, multiplied by componentwise addition.
    """

    name = "polylog"

    def __init__(self, nsymbols: int):
        if nsymbols < 1:
            raise ValueError("need at least one z symbol")
        self.nsymbols = nsymbols

    def product(self, x, y):
        (s, ze), (t, we) = x, y
        if len(ze) != self.nsymbols or len(we) != self.nsymbols:
            raise ValueError("exponent vector length mismatch")
        return [(1, (s + t, tuple(a + b for a, b in zip(ze, we))))]

    def degree(self, payload):
        return payload[0]

    def letter_str(self, payload):
        s, exps = payload
        zs = " ".join(
            f"z{i + 1}^{e}" for i, e in enumerate(exps) if e != 0
        )
        return f"({s}; {zs})" if zs else f"({s};)"


COMPOSITION = CompositionLetters()
MONOMIAL = MonomialLetters()
QLETTERS = QLetters()
WORD = WordLetters()
