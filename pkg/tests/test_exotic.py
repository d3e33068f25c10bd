"""The commutator-subgroup embedding, its inverse, and the restricted orders."""

from __future__ import annotations

import random

import pytest

from braidlab import (
    EQUAL,
    GREATER,
    LESS,
    BraidWord,
    ExoticContext,
    FreeWord,
    braid_equal,
    commutator_rewrite,
    conj_by_sigma2,
    dehornoy_sign,
    embed,
    exotic_compare,
    exponent_sum,
    half_twist,
    parse_braid,
    parse_free,
    random_braid_word,
    random_free_word,
)

X = parse_free("x")
Y = parse_free("y")


def random_zero_sum_braid(rng, max_length):
    word = random_braid_word(rng, max_length)
    total = exponent_sum(word)
    if total:
        word = word * BraidWord(3, ((1, -total),))
    return word


class TestEmbed:
    def test_generators(self):
        assert embed(X) == parse_braid("aB")
        assert embed(Y) == parse_braid("aaBB")
        assert embed(X.inverse()) == parse_braid("bA")

    def test_zero_exponent_sum(self):
        rng = random.Random(41)
        for _ in range(100):
            assert exponent_sum(embed(random_free_word(rng, 30))) == 0

    def test_homomorphism(self):
        rng = random.Random(42)
        for _ in range(50):
            u = random_free_word(rng, 15)
            v = random_free_word(rng, 15)
            assert embed(u * v) == embed(u) * embed(v)

    def test_rank_guard(self):
        with pytest.raises(ValueError):
            embed(FreeWord(3, ((3, 1),)))


class TestCommutatorRewrite:
    def test_generators(self):
        assert commutator_rewrite(parse_braid("aB")) == X
        assert commutator_rewrite(parse_braid("aaBB")) == Y

    def test_full_twist_case(self):
        braid = half_twist(2) * BraidWord(3, ((2, -6),))
        word = commutator_rewrite(braid)
        assert braid_equal(embed(word), braid)

    def test_rejects_nonzero_sum(self):
        with pytest.raises(ValueError):
            commutator_rewrite(parse_braid("s1"))

    def test_rejects_wrong_strands(self):
        with pytest.raises(ValueError):
            commutator_rewrite(BraidWord(4))

    def test_round_trip_from_free_words(self):
        # Rewriting an embedded word recovers it verbatim (free equality).
        rng = random.Random(43)
        for _ in range(500):
            word = random_free_word(rng, 40)
            assert commutator_rewrite(embed(word)) == word

    def test_round_trip_from_braids(self):
        rng = random.Random(44)
        for _ in range(500):
            braid = random_zero_sum_braid(rng, 60)
            assert braid_equal(embed(commutator_rewrite(braid)), braid)

    def test_no_one_neutral_elements(self):
        # Nontrivial commutator-subgroup elements always involve σ1 after
        # reduction (zero total exponent rules out pure σ2 powers).
        rng = random.Random(45)
        checked = 0
        while checked < 100:
            word = random_free_word(rng, 20)
            if word.is_identity():
                continue
            verdict = dehornoy_sign(embed(word))
            assert verdict.main_index == 1
            checked += 1


class TestExoticContext:
    def test_f2(self):
        ctx = ExoticContext.f2()
        assert ctx.rank == 2 and ctx.basis() is None and str(ctx) == "f2"

    def test_kn(self):
        ctx = ExoticContext.kn(3)
        assert ctx.rank == 3 and str(ctx) == "kn:3"
        assert [w.to_text() for w in ctx.basis()] == ["y", "x^2", "x y x"]

    def test_rank_validation(self):
        with pytest.raises(ValueError):
            ExoticContext.kn(3).to_f2(X)
        with pytest.raises(ValueError):
            ExoticContext.kn(1)


class TestExoticCompare:
    def test_identity_below_x(self):
        assert exotic_compare(FreeWord(2), X) == LESS

    def test_reflexive(self):
        word = parse_free("x y^-2 x")
        assert exotic_compare(word, word) == EQUAL

    def test_x_below_y(self):
        # Oracle: x^-1 y embeds to σ2 σ1 σ2^-2, already handle-free and
        # 1-positive.
        difference = embed(X.inverse() * Y)
        assert difference == BraidWord(3, ((2, 1), (1, 1), (2, -2)))
        verdict = dehornoy_sign(difference)
        assert verdict.is_positive and verdict.main_index == 1
        assert exotic_compare(X, Y) == LESS

    def test_kn_generators_positive(self):
        for n in (3, 4, 5):
            ctx = ExoticContext.kn(n)
            one = FreeWord(n)
            for i in range(1, n + 1):
                assert exotic_compare(one, FreeWord(n, ((i, 1),)), ctx) == LESS

    def test_trichotomy_and_antisymmetry(self):
        rng = random.Random(46)
        opposite = {LESS: GREATER, GREATER: LESS, EQUAL: EQUAL}
        for _ in range(100):
            u = random_free_word(rng, 15)
            v = random_free_word(rng, 15)
            forward = exotic_compare(u, v)
            assert exotic_compare(v, u) == opposite[forward]
            assert (forward == EQUAL) == (u == v)

    def test_left_invariance(self):
        rng = random.Random(47)
        for _ in range(100):
            f = random_free_word(rng, 15)
            u = random_free_word(rng, 15)
            v = random_free_word(rng, 15)
            assert exotic_compare(u, v) == exotic_compare(f * u, f * v)

    def test_conjugation_conformity(self):
        # Comparing in F_2 agrees with conjugating embedded words by σ2.
        phi = conj_by_sigma2()
        s2 = parse_braid("s2")
        rng = random.Random(48)
        for _ in range(200):
            word = random_free_word(rng, 15)
            assert braid_equal(embed(phi(word)), s2.inverse() * embed(word) * s2)
