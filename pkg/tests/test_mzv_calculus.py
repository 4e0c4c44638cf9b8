import itertools
from fractions import Fraction

import pytest

from rbmzv.coefficients import ONE_MINUS_Q
from rbmzv.letters import X0, X1
from rbmzv.mzv_calculus import (
    CongruenceRelation,
    InadmissibleError,
    Relation,
    combo_mul,
    comp_to_word,
    composition_str,
    congruence_zeta_relation,
    depth,
    double_shuffle_relation,
    hoffman_partition_relation,
    is_admissible,
    parse_composition,
    q_stuffle,
    require_admissible,
    shuffle_zeta,
    spitzer_zeta_relation,
    stuffle,
    weight,
    word_to_comp,
)


class TestCompositions:
    def test_parse_and_str(self):
        assert parse_composition("2,1,3") == (2, 1, 3)
        assert composition_str((2, 1, 3)) == "2,1,3"

    def test_parse_rejects_garbage(self):
        for bad in ["", "2,", "a", "0,2", "-1"]:
            with pytest.raises(ValueError):
                parse_composition(bad)

    def test_weight_depth(self):
        assert weight((2, 1, 3)) == 6
        assert depth((2, 1, 3)) == 3

    def test_admissibility(self):
        assert is_admissible((2, 1))
        assert not is_admissible((1, 2))
        require_admissible((2,))
        with pytest.raises(InadmissibleError):
            require_admissible((1, 2))


class TestStuffle:
    def test_two_times_two(self):
        assert stuffle((2,), (2,)) == {(2, 2): 2, (4,): 1}

    def test_two_times_three(self):
        assert stuffle((2,), (3,)) == {(2, 3): 1, (3, 2): 1, (5,): 1}

    def test_depth_one_times_depth_two(self):
        assert stuffle((2,), (3, 1)) == {
            (2, 3, 1): 1,
            (3, 2, 1): 1,
            (3, 1, 2): 1,
            (5, 1): 1,
            (3, 3): 1,
        }

    def test_weight_graded(self):
        for a, b in [((2,), (3, 1)), ((2, 2), (4,)), ((3, 1, 2), (2,))]:
            for c in stuffle(a, b):
                assert weight(c) == weight(a) + weight(b)

    def test_depth_bounds(self):
        for c in stuffle((2, 1), (3, 4)):
            assert max(2, 2) <= depth(c) <= 4

    def test_admissible_closed(self):
        for c in stuffle((2, 1), (3, 1, 1)):
            assert is_admissible(c)

    def test_commutative(self):
        assert stuffle((2, 1), (3, 4)) == stuffle((3, 4), (2, 1))


class TestQStuffle:
    def test_two_times_three_has_correction(self):
        got = q_stuffle((2,), (3,))
        assert got[(2, 3)] == 1 and got[(3, 2)] == 1
        assert got[(5,)] == 1
        assert got[(4,)] == ONE_MINUS_Q

    def test_specializes_to_stuffle_at_q_one(self):
        classical = stuffle((2, 1), (3,))
        got = {}
        for c, coef in q_stuffle((2, 1), (3,)).items():
            val = coef if isinstance(coef, int) else coef.evaluate(1)
            if val:
                got[c] = got.get(c, 0) + val
        assert got == classical


class TestWordEncoding:
    def test_examples(self):
        assert comp_to_word((2,)) == (X0, X1)
        assert comp_to_word((3, 1)) == (X0, X0, X1, X1)
        assert comp_to_word((2, 2)) == (X0, X1, X0, X1)

    def test_round_trip_all_admissible(self):
        for L in range(2, 9):
            for w in itertools.product((X0, X1), repeat=L):
                if w[0] != X0 or w[-1] != X1:
                    continue
                assert comp_to_word(word_to_comp(w)) == w

    def test_rejects_divergent(self):
        with pytest.raises(InadmissibleError):
            comp_to_word((1, 2))
        with pytest.raises(ValueError):
            word_to_comp((X1, X0))


class TestShuffleZeta:
    def test_two_times_two(self):
        assert shuffle_zeta((2,), (2,)) == {(3, 1): 4, (2, 2): 2}

    def test_two_times_three(self):
        assert shuffle_zeta((2,), (3,)) == {
            (4, 1): 6,
            (3, 2): 3,
            (2, 3): 1,
        }

    def test_term_count_binomial(self):
        got = shuffle_zeta((2, 2), (3,))
        total = sum(got.values())
        # C(7, 3) interleavings of the letter strings
        assert total == 35

    def test_weight_graded(self):
        for c in shuffle_zeta((2, 1), (2,)):
            assert weight(c) == 5

    def test_divergent_refused(self):
        with pytest.raises(InadmissibleError):
            shuffle_zeta((1, 2), (2,))


class TestComboMul:
    def test_matches_stuffle_on_singletons(self):
        assert combo_mul({(2,): 1}, {(3,): 1}) == stuffle((2,), (3,))

    def test_bilinear(self):
        got = combo_mul({(2,): 2}, {(3,): Fraction(1, 2)})
        assert got == stuffle((2,), (3,))


class TestRelation:
    def test_canonical_order_and_zero_dropped(self):
        r = Relation.from_dict(
            {((3, 1),): Fraction(-4), ((4,),): Fraction(1), ((2, 2),): 0},
            "test",
        )
        assert r.terms == ((((3, 1),), Fraction(-4)), (((4,),), Fraction(1)))

    def test_json_round_trip(self):
        r = double_shuffle_relation((2,), (3,))
        assert Relation.from_json(r.to_json()) == r

    def test_max_weight(self):
        r = double_shuffle_relation((2,), (2,))
        assert r.max_weight() == 4


class TestDoubleShuffle:
    def test_famous_weight_four(self):
        # stuffle minus shuffle of (2)x(2): zeta(4) = 4 zeta(3,1)
        r = double_shuffle_relation((2,), (2,))
        assert r.as_dict() == {
            ((4,),): Fraction(1),
            (((3, 1)),): Fraction(-4),
        }

    def test_weight_five(self):
        r = double_shuffle_relation((2,), (3,))
        d = r.as_dict()
        assert d[((5,),)] == 1
        assert d[((4, 1),)] == -6
        assert d[((3, 2),)] == -2

    def test_stuffle_terms_cancel(self):
        # compositions appearing in both expansions partially cancel
        r = double_shuffle_relation((2,), (2,))
        assert (((2, 2),)) not in dict(r.terms)


def expand_monomial(mono):
    """Stuffle-expand a product of zeta symbols into single symbols."""
    combo = {mono[0]: 1}
    for comp in mono[1:]:
        combo = combo_mul(combo, {comp: 1})
    return combo


def stuffle_residue(relation):
    total = {}
    for mono, coef in relation.terms:
        for c, v in expand_monomial(mono).items():
            total[c] = total.get(c, 0) + coef * v
    return {c: v for c, v in total.items() if v}


class TestHoffman:
    def test_n2_verbatim(self):
        # zeta(a,b) + zeta(b,a) = zeta(a) zeta(b) - zeta(a+b)
        r = hoffman_partition_relation((2, 3))
        assert r.as_dict() == {
            ((2, 3),): Fraction(1),
            ((3, 2),): Fraction(1),
            ((2,), (3,)): Fraction(-1),
            ((5,),): Fraction(1),
        }

    def test_equal_exponents_collapse(self):
        r = hoffman_partition_relation((2, 2))
        assert r.as_dict() == {
            ((2, 2),): Fraction(2),
            ((2,), (2,)): Fraction(-1),
            ((4,),): Fraction(1),
        }

    @pytest.mark.parametrize("s", [(2, 3), (2, 2, 2), (2, 3, 4), (2, 2, 3, 3)])
    def test_vanishes_under_stuffle_expansion(self, s):
        assert stuffle_residue(hoffman_partition_relation(s)) == {}

    def test_refuses_divergent_exponents(self):
        with pytest.raises(InadmissibleError):
            hoffman_partition_relation((1, 2))


class TestSpitzerZeta:
    def test_order_two(self):
        # zeta(k,k) = 1/2 zeta(k)^2 - 1/2 zeta(2k)
        r = spitzer_zeta_relation(2, 2)
        assert r.as_dict() == {
            ((2, 2),): Fraction(1),
            ((2,), (2,)): Fraction(-1, 2),
            ((4,),): Fraction(1, 2),
        }

    def test_order_three(self):
        r = spitzer_zeta_relation(3, 3)
        assert r.as_dict() == {
            ((3, 3, 3),): Fraction(1),
            ((3,), (3,), (3,)): Fraction(-1, 6),
            ((3,), (6,)): Fraction(1, 2),
            ((9,),): Fraction(-1, 3),
        }

    @pytest.mark.parametrize("k,order", [(2, 2), (2, 3), (3, 2), (2, 4), (2, 5)])
    def test_vanishes_under_stuffle_expansion(self, k, order):
        assert stuffle_residue(spitzer_zeta_relation(k, order)) == {}

    def test_rejects_bad_params(self):
        with pytest.raises(ValueError):
            spitzer_zeta_relation(1, 2)
        with pytest.raises(ValueError):
            spitzer_zeta_relation(2, 7)


class TestCongruenceZeta:
    def test_zeta2_cubed_mod_three(self):
        rel = congruence_zeta_relation((2,), 3)
        power = dict(rel.power)
        assert power == {(2, 2, 2): 6, (4, 2): 3, (2, 4): 3, (6,): 1}
        assert rel.target == (6,)
        assert rel.holds

    def test_zeta2_squared_mod_two(self):
        rel = congruence_zeta_relation((2,), 2)
        assert dict(rel.power) == {(2, 2): 2, (4,): 1}
        assert rel.holds

    @pytest.mark.parametrize("s,p", [((2,), 5), ((3,), 3), ((2, 3), 2), ((2, 1), 3)])
    def test_holds_broadly(self, s, p):
        if not is_admissible(s):
            with pytest.raises(InadmissibleError):
                congruence_zeta_relation(s, p)
            return
        assert congruence_zeta_relation(s, p).holds

    def test_json_has_verdict(self):
        data = congruence_zeta_relation((2,), 2).to_json()
        assert data["holds"] is True
        assert data["modulus"] == 2

    def test_rejects_composite_modulus(self):
        with pytest.raises(ValueError):
            congruence_zeta_relation((2,), 4)

    def test_tampered_power_fails(self):
        rel = congruence_zeta_relation((2,), 2)
        bad = CongruenceRelation(
            base=rel.base,
            p=rel.p,
            power=(((2, 2), 3), ((4,), 1)),
            target=rel.target,
        )
        assert not bad.holds
