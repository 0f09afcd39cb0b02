"""Line dynamics: realizations, crossings, souls, scale comparisons."""

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leftorder.dynamics import (
    Crossing,
    ball_enumeration,
    build_verbal_counterexample,
    cofinal_ball,
    conradian_soul_ball,
    evaluate_word,
    find_crossing,
    find_crossings,
    group_power,
    holder_estimate,
    is_conradian_ball,
    realization_svg,
    realization_to_json,
    realize,
    shuffled_enumeration,
    verify_crossing,
)
from leftorder.errors import BudgetExceededError
from leftorder.groups import group_from_string
from leftorder.groups.wreath import PlanteAction, plante_g0
from leftorder.orders import OrderOracle, oracle_from_string
from leftorder.plhomeo import PLHomeo

B3 = group_from_string("braid:3")
F2 = group_from_string("free:2")
ZN2 = group_from_string("zn:2")
TAR2 = group_from_string("tararin:2")

DEH = oracle_from_string("dehornoy", B3)
MAGNUS = oracle_from_string("magnus", F2)


def b3(text):
    return B3.alphabet.parse(text)


class ZOrder(OrderOracle):
    """The usual order of the integers, for rank-1 fixtures."""

    name = "z-natural"

    def sign(self, x):
        return (x[0] > 0) - (x[0] < 0)


class TestCrossingSearch:
    def test_dehornoy_first_crossing(self):
        c = find_crossing(DEH, 4, 10)
        assert c == Crossing(
            f=b3("s1 s2^-1"), g=b3("s1 s2^-1 s1^2"), u=(),
            v=b3("s1^2"), w=b3("s1 s2^-1 s1^2"), M=2, N=2)
        assert verify_crossing(DEH, c, 10)

    def test_crossing_g_is_the_product_fg(self):
        c = find_crossing(DEH, 4, 10)
        lhs = B3.eval_word(c.g)
        rhs = B3.mul(B3.eval_word(c.f), B3.eval_word(c.v))
        assert B3.key(lhs) == B3.key(rhs)

    def test_magnus_has_no_crossing(self):
        assert find_crossing(MAGNUS, 4, 10) is None

    def test_smirnov_crossing(self):
        bs2 = group_from_string("bs:2")
        orc = oracle_from_string("smirnov:eps=1*sqrt2", bs2)
        c = find_crossing(orc, 4, 10)
        parse = bs2.alphabet.parse
        assert (c.f, c.v, c.w) == (parse("g h^-1"), parse("g^2 h^-1"),
                                   parse("g"))
        assert (c.M, c.N) == (2, 1)

    def test_tampered_crossing_fails_verification(self):
        c = find_crossing(DEH, 4, 10)
        fake = Crossing(f=c.f, g=c.g, u=c.u, v=c.v, w=b3("s2"), M=c.M, N=c.N)
        assert not verify_crossing(DEH, fake, 10)

    def test_all_small_crossings_verify(self):
        found = find_crossings(DEH, 3, 6)
        assert len(found) == 18
        assert all(verify_crossing(DEH, c, 6) for c in found)

    def test_crossing_description_reads_back(self):
        c = find_crossings(DEH, 3, 6)[0]
        text = c.describe(B3.alphabet)
        assert text == ("(s1 s2^-1, s1 s2^-1 s1^-1 s2 s1; id, "
                        "s1^-1 s2 s1, s1^2) with M=2, N=1")


class TestConradianDetector:
    def test_dehornoy_fails_with_witness(self):
        verdict, witness = is_conradian_ball(DEH, 4)
        assert not verdict
        assert witness == (b3("s1 s2^-1"), b3("s1^2"))

    def test_witness_actually_violates(self):
        _, (fw, gw) = is_conradian_ball(DEH, 4)
        f, g = B3.eval_word(fw), B3.eval_word(gw)
        assert DEH.sign(f) > 0 and DEH.sign(g) > 0
        fg2 = B3.mul(f, B3.mul(g, g))
        assert DEH.compare(fg2, g) < 0

    def test_magnus_is_conradian_on_the_ball(self):
        assert is_conradian_ball(MAGNUS, 4) == (True, None)

    @pytest.mark.parametrize("signs", ["++", "+-", "-+", "--"])
    def test_all_rank_two_tararin_orders_are_conradian(self, signs):
        orc = oracle_from_string(f"tararin:{signs}", TAR2)
        assert is_conradian_ball(orc, 5) == (True, None)

    def test_sunic_order_is_not_conradian(self):
        orc = oracle_from_string("sunic", F2)
        verdict, witness = is_conradian_ball(orc, 4)
        assert not verdict
        assert witness == (F2.alphabet.parse("a"), F2.alphabet.parse("b"))


class TestConradianSoul:
    def test_dehornoy_soul_radius_three(self):
        soul = conradian_soul_ball(DEH, 3, 6)
        names = sorted(B3.alphabet.format(w) or "id" for w in soul)
        assert names == [
            "id", "s2", "s2 s1^-1 s2", "s2^-1", "s2^-1 s1 s2^-1",
            "s2^-2", "s2^-2 s1", "s2^-3", "s2^2", "s2^2 s1^-1", "s2^3"]

    def test_dehornoy_soul_contains_the_center_generator_powers(self):
        # the convex core keeps every s2 power of the ball, and the
        # finite-ball approximation overshoots by a few nearby elements
        soul = set(conradian_soul_ball(DEH, 4, 8))
        for k in range(-4, 5):
            assert b3(f"s2^{k}" if k else "") in soul
        assert len(soul) == 13

    def test_conradian_order_keeps_the_whole_ball(self):
        soul = conradian_soul_ball(MAGNUS, 3, 6)
        assert len(soul) == len(F2.ball(3))

    def test_smirnov_soul_shrinks_toward_the_identity(self):
        bs2 = group_from_string("bs:2")
        orc = oracle_from_string("smirnov:eps=1*sqrt2", bs2)
        soul = conradian_soul_ball(orc, 4, 8)
        names = sorted(bs2.alphabet.format(w) or "id" for w in soul)
        assert names == ["g h^-1", "g h^-2", "g h^-2 g", "h^-1 g",
                         "h^2 g^-1", "id"]

    def test_larger_exponent_budget_only_shrinks_the_soul(self):
        # a bigger bound verifies more crossings, so the cut can only move
        wide = set(conradian_soul_ball(DEH, 3, 4))
        narrow = set(conradian_soul_ball(DEH, 3, 8))
        assert narrow <= wide


class TestHolderEstimate:
    def setup_method(self):
        self.orc = oracle_from_string("z2:lambda=1*sqrt2", ZN2)
        self.e1 = (1, 0)
        self.e2 = (0, 1)

    def test_sqrt2_to_two_digits(self):
        assert holder_estimate(self.orc, self.e2, self.e1, 100) == \
            Fraction(141, 100)

    def test_sqrt2_to_three_digits(self):
        assert holder_estimate(self.orc, self.e2, self.e1, 1000) == \
            Fraction(1414, 1000)

    def test_reciprocal_direction(self):
        assert holder_estimate(self.orc, self.e1, self.e2, 100) == \
            Fraction(70, 100)

    def test_equal_elements_give_one(self):
        assert holder_estimate(self.orc, self.e1, self.e1, 57) == 1

    def test_sandwich_property(self):
        q = holder_estimate(self.orc, self.e2, self.e1, 100)
        numerator = q.numerator * (100 // q.denominator)
        low = group_power(ZN2, self.e2, numerator)
        high = group_power(ZN2, self.e2, numerator + 1)
        big = group_power(ZN2, self.e1, 100)
        assert self.orc.compare(low, big) <= 0 < self.orc.compare(high, big)

    def test_negative_measuring_element_rejected(self):
        with pytest.raises(ValueError):
            holder_estimate(self.orc, (-1, 0), self.e1, 10)

    def test_bad_p_rejected(self):
        with pytest.raises(ValueError):
            holder_estimate(self.orc, self.e1, self.e2, 0)

    def test_incomparable_scales_exceed_budget(self):
        orc = oracle_from_string("tararin:++", TAR2)
        a1 = TAR2.eval_word(TAR2.alphabet.parse("a1"))
        a2 = TAR2.eval_word(TAR2.alphabet.parse("a2"))
        with pytest.raises(BudgetExceededError):
            holder_estimate(orc, a1, a2, 10, max_exponent=1 << 14)


class TestCofinality:
    def test_lattice_generator_is_cofinal(self):
        orc = oracle_from_string("z2:lambda=1*sqrt2", ZN2)
        assert cofinal_ball(orc, (1, 0), 3) == (True, None)

    def test_small_jump_generator_is_not_cofinal(self):
        orc = oracle_from_string("tararin:++", TAR2)
        a1 = TAR2.eval_word(TAR2.alphabet.parse("a1"))
        verdict, witness = cofinal_ball(orc, a1, 3)
        assert not verdict
        assert TAR2.alphabet.format(witness) == "a2"

    def test_top_level_generator_is_cofinal(self):
        orc = oracle_from_string("tararin:++", TAR2)
        a2 = TAR2.eval_word(TAR2.alphabet.parse("a2"))
        assert cofinal_ball(orc, a2, 3) == (True, None)

    def test_identity_rejected(self):
        orc = oracle_from_string("z2:lambda=1*sqrt2", ZN2)
        with pytest.raises(ValueError):
            cofinal_ball(orc, (0, 0), 3)


class TestRealization:
    def test_integers_realize_as_integer_translations(self):
        zn1 = group_from_string("zn:1")
        r = realize(ZOrder(zn1), ball_enumeration(zn1, 3))
        assert r.values == [Fraction(k) for k in (0, 1, -1, 2, -2, 3, -3)]
        r.check()
        # the generator map is forced onto the realized orbit: x + 1
        assert r.generators[0](Fraction(5)) == 6
        assert r.generators[0](Fraction(-7, 2)) == Fraction(-5, 2)

    def test_klein_bottle_small_generator_has_a_fixed_point(self):
        orc = oracle_from_string("tararin:++", TAR2)
        r = realize(orc, ball_enumeration(TAR2, 4))
        r.check()
        a1_map, a2_map = r.generators
        top = a2_map(Fraction(0))
        assert top == r.value_of("a2") == 2
        assert a1_map.fixed_points_in(Fraction(0), top) == [Fraction(5, 3)]

    def test_shuffled_enumerations_still_realize(self):
        for seed in (1, 2, 3):
            enum = shuffled_enumeration(B3, 2, seed)
            r = realize(DEH, enum)
            r.check()
            assert r.values[0] == 0

    def test_same_signs_from_different_enumerations(self):
        canonical = realize(DEH, ball_enumeration(B3, 2))
        shuffled = realize(DEH, shuffled_enumeration(B3, 2, 11))
        by_word = dict(zip(shuffled.words, shuffled.values))
        for w, v in zip(canonical.words, canonical.values):
            other = by_word[w]
            assert (v > 0) == (other > 0) and (v < 0) == (other < 0)

    def test_enumeration_must_start_at_identity(self):
        with pytest.raises(ValueError):
            realize(DEH, [b3("s1"), ()])

    def test_repeated_elements_rejected(self):
        with pytest.raises(ValueError):
            realize(DEH, [(), b3("s1"), b3("s1")])

    def test_json_export_is_stable_and_complete(self):
        zn1 = group_from_string("zn:1")
        r = realize(ZOrder(zn1), ball_enumeration(zn1, 2))
        text = realization_to_json(r)
        assert text == realization_to_json(r)
        doc = json.loads(text)
        assert doc["group"] == "zn:1" and doc["order"] == "z-natural"
        assert doc["points"][0] == ["", "0"]
        assert ["e1", "1"] in doc["points"]
        assert doc["generators"][0]["name"] == "e1"

    def test_svg_export_draws_every_generator(self):
        r = realize(DEH, ball_enumeration(B3, 2))
        svg = realization_svg(r)
        assert svg.startswith("<svg ") and svg.endswith("</svg>")
        assert svg.count("<polyline") == len(B3.alphabet.names)


class TestVerbalCounterexamples:
    @pytest.mark.parametrize("text,final", [
        ("b^-1 a b", Fraction(-11, 16)),
        ("b^-1 a b^2", Fraction(-13, 20)),
        ("a^-1 b a b^-1 a", Fraction(-17, 4)),
    ])
    def test_counterexample_certificates(self, text, final):
        fa, fb, cert = build_verbal_counterexample(text)
        assert cert.a_at_zero > 0 and cert.b_at_zero > 0
        assert cert.final == final < 0
        word = group_from_string("free:2").alphabet.parse(text)
        assert evaluate_word(word, fa, fb, 0) == final

    def test_maps_move_origin_right_but_word_moves_it_left(self):
        fa, fb, cert = build_verbal_counterexample("b^-1 a b")
        assert fa(0) > 0 and fb(0) > 0
        assert cert.swapped and cert.stages == ()

    def test_stage_anchors_descend(self):
        _, _, cert = build_verbal_counterexample("a^-1 b a b^-1 a")
        anchors = [s.anchor for s in cert.stages]
        assert anchors == sorted(anchors, reverse=True)
        assert [s.letter for s in cert.stages] == ["a", "b", "a"]

    @pytest.mark.parametrize("text", ["a b", "", "a^-1 b^-1", "a",
                                      "b a b^-1 b a^-1 a"])
    def test_unmixed_words_rejected(self, text):
        with pytest.raises(ValueError):
            build_verbal_counterexample(text)

    @given(st.lists(st.tuples(st.sampled_from("ab"),
                              st.integers(-3, 3).filter(bool)),
                    min_size=2, max_size=6))
    @settings(max_examples=60, deadline=None)
    def test_every_mixed_word_gets_a_counterexample(self, runs):
        from hypothesis import assume
        from leftorder.dynamics.verbal import ALPHABET
        text = " ".join(f"{letter}^{exp}" for letter, exp in runs)
        word = ALPHABET.parse(text)
        assume({s for _, s in word} == {1, -1})
        fa, fb, cert = build_verbal_counterexample(text)
        assert cert.final < 0
        assert evaluate_word(word, fa, fb, 0) == cert.final
        assert fa(0) > 0 and fb(0) > 0

    def test_evaluate_word_identity(self):
        f = PLHomeo.translation(1)
        assert evaluate_word((), f, f, Fraction(7, 3)) == Fraction(7, 3)


class TestPlanteAction:
    def test_doubling_conjugates_lamps_one_level_up(self):
        act = PlanteAction()
        samples = [Fraction(k, 7) - 5 for k in range(100)]
        for i in range(4):
            for x in samples:
                assert act.lamp(i + 1, x) == 2 * act.lamp(i, x / 2)

    def test_distant_lamps_commute(self):
        act = PlanteAction()
        for k in range(-10, 11):
            x = Fraction(3 * k, 7)
            lhs = act.lamp(0, act.lamp(2, x))
            rhs = act.lamp(2, act.lamp(0, x))
            assert lhs == rhs

    def test_action_is_a_homomorphism(self):
        wreath = group_from_string("wreath")
        act = PlanteAction()
        parse = wreath.alphabet.parse
        pairs = [("t a", "a^-1 t"), ("a t^-1", "t a"), ("t^2 a", "a t^-2")]
        for left, right in pairs:
            u = wreath.eval_word(parse(left))
            v = wreath.eval_word(parse(right))
            uv = wreath.mul(u, v)
            for x in (Fraction(0), Fraction(1, 3), Fraction(-5, 2)):
                assert act.apply(uv, x) == act.apply(u, act.apply(v, x))

    def test_lamp_map_fixes_binary_powers(self):
        for j in range(4):
            assert plante_g0(Fraction(2 ** j)) == 2 ** j
            assert plante_g0(Fraction(-(2 ** j))) == -(2 ** j)
        assert plante_g0(Fraction(0)) > 0


class TestAlmostPeriodicMonotone:
    def test_interval_arithmetic_certifies_increase(self):
        # t + (sin t + sin(sqrt2 t))/3 has derivative
        # 1 + (cos t + sqrt2 cos(sqrt2 t))/3 >= 1 - (1 + sqrt2)/3 > 0;
        # certify it piecewise on [-20, 20] without trusting floats
        from mpmath import iv
        iv.prec = 80
        sqrt2 = iv.sqrt(2)
        step = Fraction(1, 4)
        lo = Fraction(-20)
        while lo < 20:
            hi = lo + step
            t = iv.mpf([str(lo), str(hi)])
            derivative = 1 + (iv.cos(t) + sqrt2 * iv.cos(sqrt2 * t)) / 3
            assert derivative.a > 0
            lo = hi
