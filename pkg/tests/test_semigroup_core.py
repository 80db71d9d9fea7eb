"""Tests for words, rewriting, and theta'."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twograph.fixtures import (
    FLIP_22,
    FORWARD_3CYCLE,
    IDENTITY_22,
    all_fixtures,
)
from twograph.semigroup_core import (
    BLUE,
    RED,
    Theta,
    ThetaError,
    ThetaPrime,
    Word,
    WordError,
    commutes,
    e_first_pattern,
    multiply,
    normal_form,
    refactor,
    theta_prime_apply,
    theta_prime_cycle,
    validate_theta,
)

from oracles import oracle_refactor, oracle_theta_prime, oracle_theta_prime_table


class TestValidateTheta:
    def test_forward_3cycle_valid(self):
        th = FORWARD_3CYCLE
        assert th.forward[(1, 1)] == (1, 2)
        assert th.inverse[(1, 2)] == (1, 1)

    def test_identity_valid(self):
        assert IDENTITY_22.forward[(2, 1)] == (2, 1)

    def test_duplicate_target_rejected(self):
        with pytest.raises(ThetaError, match="duplicate target"):
            validate_theta([[1, 1, 1, 2], [1, 2, 1, 2], [2, 1, 1, 1], [2, 2, 2, 2]], 2, 2)

    def test_duplicate_source_rejected(self):
        with pytest.raises(ThetaError, match="duplicate source"):
            validate_theta([[1, 1, 1, 2], [1, 1, 2, 1], [2, 1, 1, 1], [2, 2, 2, 2]], 2, 2)

    def test_missing_pair_rejected(self):
        with pytest.raises(ThetaError, match="missing"):
            validate_theta([[1, 1, 1, 1]], 2, 2)

    def test_out_of_range_rejected(self):
        with pytest.raises(ThetaError, match="out of range"):
            validate_theta([[1, 1, 1, 3], [1, 2, 1, 2], [2, 1, 2, 1], [2, 2, 2, 2]], 2, 2)


class TestWordBasics:
    def test_parse_roundtrip(self):
        w = Word.parse("e1.f2.e2")
        assert str(w) == "e1.f2.e2"
        assert w.degree == (2, 1)

    def test_empty_word(self):
        assert len(Word.parse("")) == 0
        assert Word().degree == (0, 0)

    def test_digit_constructors(self):
        assert Word.blue("112").indices == (1, 1, 2)
        assert Word.red("21").colors == (RED, RED)

    def test_slicing(self):
        w = Word.blue("1121212")
        assert w.take(3) == Word.blue("112")
        assert w.drop(5) == Word.blue("12")
        assert w[1:3] == Word.blue("12")


class TestRefactor:
    def test_example_21_all_four_identities(self):
        # e1 f1 = f2 e1, e1 f2 = f1 e2, e2 f1 = f1 e1, e2 f2 = f2 e2
        th = FORWARD_3CYCLE
        cases = [
            ("e1.f1", "f2.e1"),
            ("e1.f2", "f1.e2"),
            ("e2.f1", "f1.e1"),
            ("e2.f2", "f2.e2"),
        ]
        for ef, fe in cases:
            assert refactor(th, Word.parse(ef), (RED, BLUE)) == Word.parse(fe)
            assert refactor(th, Word.parse(fe), (BLUE, RED)) == Word.parse(ef)

    def test_identity_theta_commutes_letterwise(self):
        w = refactor(IDENTITY_22, Word.parse("e1.f2"), (RED, BLUE))
        assert w == Word.parse("f2.e1")

    def test_three_letter_derived_value(self):
        # pinned by the exhaustive rewriting oracle
        got = refactor(FORWARD_3CYCLE, Word.parse("e2.e1.f1"), (RED, BLUE, BLUE))
        assert got == Word.parse("f2.e2.e1")
        assert got == oracle_refactor(
            FORWARD_3CYCLE, Word.parse("e2.e1.f1"), (RED, BLUE, BLUE)
        )

    def test_pattern_mismatch_rejected(self):
        with pytest.raises(WordError, match="pattern"):
            refactor(FORWARD_3CYCLE, Word.parse("e1.f1"), (BLUE, BLUE))


class TestMultiply:
    def test_identity_element(self):
        w = Word.parse("f2.e1")
        assert multiply(FORWARD_3CYCLE, Word(), w) == Word.parse("e1.f1")

    def test_example_21_product(self):
        assert multiply(FORWARD_3CYCLE, Word.parse("f2"), Word.parse("e1")) == Word.parse(
            "e1.f1"
        )

    def test_degree_homomorphism_random(self):
        rng = random.Random(7)
        for th in all_fixtures().values():
            for _ in range(50):
                w1 = _random_word(rng, th, 6)
                w2 = _random_word(rng, th, 6)
                k1, l1 = w1.degree
                k2, l2 = w2.degree
                assert multiply(th, w1, w2).degree == (k1 + k2, l1 + l2)


def _random_word(rng: random.Random, th: Theta, max_len: int) -> Word:
    out = []
    for _ in range(rng.randrange(max_len + 1)):
        if rng.random() < 0.5:
            out.append(Word.blue([rng.randint(1, th.m)])[0])
        else:
            out.append(Word.red([rng.randint(1, th.n)])[0])
    return Word(out)


def _random_pattern(rng: random.Random, degree):
    k, l = degree
    pat = [BLUE] * k + [RED] * l
    rng.shuffle(pat)
    return tuple(pat)


class TestUniqueFactorization:
    def test_round_trip_and_degree_random(self):
        rng = random.Random(12345)
        for name, th in all_fixtures().items():
            for _ in range(200):
                w = _random_word(rng, th, 8)
                pat = _random_pattern(rng, w.degree)
                mid = refactor(th, w, pat)
                assert mid.colors == pat
                assert mid.degree == w.degree
                assert normal_form(th, mid) == normal_form(th, w)

    def test_against_exhaustive_oracle(self):
        rng = random.Random(99)
        for name, th in all_fixtures().items():
            for _ in range(20):
                w = _random_word(rng, th, 5)
                pat = _random_pattern(rng, w.degree)
                assert refactor(th, w, pat) == oracle_refactor(th, w, pat)

    def test_associativity_random_triples(self):
        rng = random.Random(4242)
        for th in all_fixtures().values():
            for _ in range(30):
                a, b, c = (_random_word(rng, th, 4) for _ in range(3))
                left = multiply(th, multiply(th, a, b), c)
                right = multiply(th, a, multiply(th, b, c))
                assert left == right


@st.composite
def _word_and_pattern(draw):
    th = draw(st.sampled_from(list(all_fixtures().values())))
    length = draw(st.integers(0, 7))
    letters = []
    for _ in range(length):
        if draw(st.booleans()):
            letters.append(Word.blue([draw(st.integers(1, th.m))])[0])
        else:
            letters.append(Word.red([draw(st.integers(1, th.n))])[0])
    w = Word(letters)
    pat = list(w.colors)
    pat = draw(st.permutations(pat))
    return th, w, tuple(pat)


class TestHypothesisProperties:
    @settings(max_examples=150, deadline=None)
    @given(_word_and_pattern())
    def test_refactor_reaches_pattern_and_preserves_class(self, twp):
        th, w, pat = twp
        out = refactor(th, w, pat)
        assert out.colors == pat
        assert normal_form(th, out) == normal_form(th, w)

    @settings(max_examples=150, deadline=None)
    @given(_word_and_pattern())
    def test_double_refactor_idempotent(self, twp):
        th, w, pat = twp
        once = refactor(th, w, pat)
        assert refactor(th, once, pat) == once


class TestThetaPrime:
    def test_degree_11_is_theta(self):
        for th in all_fixtures().values():
            for (i, j), (i2, j2) in th.forward.items():
                u2, v2 = theta_prime_apply(th, Word.blue([i]), Word.red([j]))
                assert (u2.indices, v2.indices) == ((i2,), (j2,))

    def test_flip_semigroup_swaps(self):
        u2, v2 = theta_prime_apply(FLIP_22, Word.blue("1"), Word.red("2"))
        assert (u2.digits(), v2.digits()) == ("2", "1")

    def test_degree_22_derived_value(self):
        # pinned by the exhaustive rewriting oracle
        u2, v2 = theta_prime_apply(FORWARD_3CYCLE, Word.blue("11"), Word.red("11"))
        assert (u2.digits(), v2.digits()) == ("21", "12")
        assert (u2, v2) == oracle_theta_prime(
            FORWARD_3CYCLE, Word.blue("11"), Word.red("11")
        )

    def test_bijectivity_small_tables(self):
        for th in all_fixtures().values():
            for k, l in [(1, 1), (1, 2), (2, 1), (2, 2)]:
                tp = ThetaPrime(th, k, l)
                table = tp.tabulate()
                assert len(table) == tp.pair_count
                assert len(set(table.values())) == tp.pair_count

    def test_table_matches_oracle(self):
        table = ThetaPrime(FORWARD_3CYCLE, 2, 1).tabulate()
        assert table == oracle_theta_prime_table(FORWARD_3CYCLE, 2, 1)

    def test_tabulation_cap(self):
        with pytest.raises(WordError, match="cap"):
            ThetaPrime(FORWARD_3CYCLE, 2, 2).tabulate(cap=3)


class TestCycleAndCommute:
    def test_identity_theta_all_fixed_points(self):
        for u, v in ThetaPrime(IDENTITY_22, 2, 2).domain():
            assert theta_prime_cycle(IDENTITY_22, u, v) == [(u, v)]
            assert commutes(IDENTITY_22, u, v)

    def test_example_66_verbatim(self):
        u, v = Word.blue("1121212"), Word.red("1222212")
        assert commutes(FORWARD_3CYCLE, u, v)
        assert len(theta_prime_cycle(FORWARD_3CYCLE, u, v)) == 1
        # commuting means literal word equality e_u f_v = f_v e_u
        assert normal_form(FORWARD_3CYCLE, u + v) == normal_form(FORWARD_3CYCLE, v + u)

    def test_single_letters_do_not_commute(self):
        assert not commutes(FORWARD_3CYCLE, Word.blue("1"), Word.red("1"))

    def test_cycle_through_11_has_length_3(self):
        cyc = theta_prime_cycle(FORWARD_3CYCLE, Word.blue("1"), Word.red("1"))
        assert len(cyc) == 3
        # cross-check against the full tabulation at (1,1)
        table = ThetaPrime(FORWARD_3CYCLE, 1, 1).tabulate()
        u, v = Word.blue("1"), Word.red("1")
        seen = [(u, v)]
        cur = table[(u, v)]
        while cur != (u, v):
            seen.append(cur)
            cur = table[cur]
        assert seen == cyc

    def test_commutes_matches_direct_equality(self):
        rng = random.Random(5)
        for th in all_fixtures().values():
            for _ in range(25):
                u = Word.blue([rng.randint(1, th.m) for _ in range(rng.randint(1, 4))])
                v = Word.red([rng.randint(1, th.n) for _ in range(rng.randint(1, 4))])
                direct = normal_form(th, u + v) == normal_form(th, v + u)
                assert commutes(th, u, v) == direct


class TestBinomialFamily:
    def test_length7_even_sum_words_have_unique_partner(self):
        """Forward 3-cycle at k=l=7: a blue word commutes with exactly one
        red word iff its index sum is even; 64 fixed points in total."""
        from itertools import product

        th = FORWARD_3CYCLE
        fixed_by_u: dict[tuple, list] = {}
        for ui in product((1, 2), repeat=7):
            u = Word.blue(ui)
            for vj in product((1, 2), repeat=7):
                v = Word.red(vj)
                if theta_prime_apply(th, u, v) == (u, v):
                    fixed_by_u.setdefault(ui, []).append(vj)
        even = [ui for ui in product((1, 2), repeat=7) if sum(ui) % 2 == 0]
        assert sorted(fixed_by_u) == sorted(even)
        assert all(len(vs) == 1 for vs in fixed_by_u.values())
        assert fixed_by_u[(1, 1, 2, 1, 2, 1, 2)] == [(1, 2, 2, 2, 2, 1, 2)]
