"""Symbolic verification inside Sha(A): Spitzer's identity, the
exp-star/log identity, the Bohnenblust-Spitzer formula and the mod-p
power congruence, all in exact arithmetic.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .coefficients import TruncSeries, series_exp, series_log1p
from .letters import COMPOSITION, MONOMIAL
from .tensor_algebra import ShaAlgebra, ShaElement, _add_term

_PRIMES = (2, 3, 5, 7, 11)


@dataclass
class IdentityReport:
    name: str
    params: dict
    verdict: str
    lhs: str
    rhs: str
    first_diff: str | None = None

    @property
    def equal(self) -> bool:
        return self.verdict == "equal"

    def to_json(self) -> dict:
        out = {
            "name": self.name,
            "params": self.params,
            "verdict": self.verdict,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }
        if self.first_diff is not None:
            out["first_diff"] = self.first_diff
        return out

    def __str__(self):
        return json.dumps(self.to_json(), sort_keys=True)


def set_partitions(n: int) -> list[list[list[int]]]:
    """All set partitions of {1..n}, in restricted-growth-string order.

    Blocks are listed by minimum element; block contents are increasing.
    """
    if not 1 <= n <= 8:
        raise ValueError("n must be in 1..8")
    results = []

    def extend(i, blocks):
        if i > n:
            results.append([list(b) for b in blocks])
            return
        for b in blocks:
            b.append(i)
            extend(i + 1, blocks)
            b.pop()
        blocks.append([i])
        extend(i + 1, blocks)
        blocks.pop()

    extend(1, [])
    return results


def _series_compare(name, params, lhs: TruncSeries, rhs: TruncSeries) -> IdentityReport:
    first_diff = None
    for i, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
        if a != b:
            first_diff = f"t^{i}: lhs={a} rhs={b}"
            break
    return IdentityReport(
        name=name,
        params=params,
        verdict="equal" if first_diff is None else "unequal",
        lhs=" ; ".join(f"t^{i}: {c}" for i, c in enumerate(lhs.coeffs)),
        rhs=" ; ".join(f"t^{i}: {c}" for i, c in enumerate(rhs.coeffs)),
        first_diff=first_diff,
    )


def _element_compare(name, params, lhs: ShaElement, rhs: ShaElement) -> IdentityReport:
    diff = lhs - rhs
    first_diff = None
    if diff:
        key = min(diff.terms, key=diff.sort_key)
        h, t = key
        first_diff = f"coefficient {diff.terms[key]} at {(h, t)}"
    return IdentityReport(
        name=name,
        params=params,
        verdict="equal" if first_diff is None else "unequal",
        lhs=str(lhs),
        rhs=str(rhs),
        first_diff=first_diff,
    )


def spitzer_check(order: int, weight=1) -> IdentityReport:
    """exp(P(log(1 + a t))) = sum_i t^i 1 (x) a (x) ... (x) a in Sha(Q[a]).

    The series log(1 + a t) has t^i coefficient (-1)^(i-1)/i * a^i; P is
    applied to the series coefficientwise.
    """
    if not 1 <= order <= 8:
        raise ValueError("order must be in 1..8")
    alg = ShaAlgebra(MONOMIAL, weight)
    one = alg.one()
    log_coeffs = [alg.zero()]
    for i in range(1, order + 1):
        log_coeffs.append(Fraction((-1) ** (i - 1), i) * alg.j(i))
    inner = TruncSeries(order, log_coeffs, one)
    lhs = series_exp(inner.map(alg.p))
    rhs_coeffs = [one] + [alg.pure(None, (1,) * i) for i in range(1, order + 1)]
    rhs = TruncSeries(order, rhs_coeffs, one)
    return _series_compare("spitzer", {"order": order}, lhs, rhs)


def exp_star_log_check(order: int) -> IdentityReport:
    """exp_star(log(1 + x t)) = 1 + x t + (x t)^(x)2 + ... at weight 1.

    log uses the ordinary Sha product, exp the star product.
    """
    if not 1 <= order <= 8:
        raise ValueError("order must be in 1..8")
    alg = ShaAlgebra(MONOMIAL, 1)
    one = alg.one()
    xt = TruncSeries(order, [alg.zero(), alg.j(1)], one)
    w = series_log1p(xt)
    w_star = TruncSeries(order, w.coeffs, one, mul=alg.star)
    # the star product is not unital, so exp_star is built from star powers
    # w^(star n) directly instead of via the generic series_exp
    lhs = w_star.unit() + w_star
    power = w_star
    fact = 1
    for n in range(2, order + 1):
        power = power * w_star
        fact *= n
        lhs = lhs + power.scale(Fraction(1, fact))
    rhs_coeffs = [one] + [alg.pure(1, (1,) * (i - 1)) for i in range(1, order + 1)]
    rhs = TruncSeries(order, rhs_coeffs, one)
    return _series_compare("expstar", {"order": order}, lhs, rhs)


def bohnenblust_spitzer_check(n: int) -> IdentityReport:
    """Permutation sum of nested P-words vs the signed set-partition sum."""
    if not 2 <= n <= 5:
        raise ValueError("n must be in 2..5")
    alg = ShaAlgebra(COMPOSITION, 1)
    letters = _PRIMES[:n]
    lhs = alg.zero()
    for perm in _permutations(letters):
        lhs = lhs + alg.nested_p(perm)
    rhs = alg.zero()
    for blocks in set_partitions(n):
        coef = Fraction((-1) ** (n - len(blocks)))
        term = alg.one()
        for block in blocks:
            coef *= math.factorial(len(block) - 1)
            payload = sum(letters[i - 1] for i in block)
            term = term * alg.p(alg.j(payload))
        rhs = rhs + coef * term
    return _element_compare("bohnenblust_spitzer", {"n": n}, lhs, rhs)


def _permutations(seq):
    import itertools

    return itertools.permutations(seq)


def _check_prime(p: int):
    if p not in (2, 3, 5, 7):
        raise ValueError("p must be a prime in {2, 3, 5, 7}")


def freshman_power(w: tuple, p: int, system=COMPOSITION) -> dict:
    """p-th power of the pure tensor 1 (x) w under the Sha product.

    Returns the tail combination {word: integer coefficient}.
    """
    _check_prime(p)
    w = tuple(w)
    if not w:
        raise ValueError("word must be nonempty")
    alg = ShaAlgebra(system, 1)
    x = alg.pure(None, w)
    power = x
    for _ in range(p - 1):
        power = power * x
    out: dict = {}
    for (h, t), c in power.terms.items():
        if h is not None:
            raise AssertionError("unit-head power produced a letter head")
        _add_term(out, t, c)
    return out


def congruence_check(w: tuple, p: int, system=COMPOSITION) -> IdentityReport:
    """Check (a1 (x) ... (x) an)^p = a1^p (x) ... (x) an^p mod p."""
    _check_prime(p)
    w = tuple(w)
    power = freshman_power(w, p, system)
    # letter p-th power: p-fold letter product; additive systems give p*a
    target = tuple(p * a for a in w)
    bad = None
    tc = power.get(target, 0)
    if tc % p != 1 % p:
        bad = f"coefficient of target {target} is {tc}, not 1 mod {p}"
    else:
        for word in sorted(power):
            if word == target:
                continue
            if power[word] % p != 0:
                bad = (
                    f"coefficient of {word} is {power[word]}, "
                    f"not 0 mod {p}"
                )
                break
    return IdentityReport(
        name="congruence",
        params={"word": list(w), "p": p},
        verdict="equal" if bad is None else "unequal",
        lhs=f"(1(x){w})^{p} mod {p}",
        rhs=f"1(x){target} mod {p}",
        first_diff=bad,
    )
