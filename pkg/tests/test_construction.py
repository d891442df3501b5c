"""Generator construction, recognition, and the structural invariants."""

from __future__ import annotations

import random

import pytest
from hypothesis import given

import deltafree as df
from conftest import fam, generator_strategy, naive_generate

N4_CATALOG = fam(
    4, (1,), (2,), (1, 3), (1, 4), (2, 3), (2, 4), (1, 3, 4), (2, 3, 4)
)


def all_generators(n):
    return [df.Generator(n, sc) for sc in range((1 << n) - 1)]


class TestGenerator:
    def test_full_ground_set_rejected(self):
        with pytest.raises(ValueError, match="not maximal"):
            df.Generator(4, df.full_word(4))

    def test_s_is_complement(self):
        g = df.Generator(5, df.word_of([3, 4, 5], 5))
        assert g.s == df.word_of([1, 2], 5)

    def test_word_must_fit_ground(self):
        with pytest.raises(ValueError):
            df.Generator(3, 1 << 3)


class TestGenerateFamily:
    def test_worked_example_n5(self):
        g = df.Generator(5, df.word_of([3, 4, 5], 5))
        expected = fam(
            5,
            (1,), (2,),
            (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5),
            (1, 3, 4), (1, 3, 5), (1, 4, 5), (2, 3, 4), (2, 4, 5), (2, 3, 5),
            (1, 3, 4, 5), (2, 3, 4, 5),
        )
        assert df.generate_family(g) == expected

    def test_empty_sc_gives_all_odd(self):
        for n in range(1, 10):
            assert df.generate_family(df.Generator(n, 0)) == df.all_odd_family(n)

    def test_singleton_s_gives_point_filter(self):
        g = df.Generator(4, df.word_of([2, 3, 4], 4))
        f = df.generate_family(g)
        assert f.members == tuple(w for w in range(16) if w & 1)

    @given(generator_strategy(max_n=7))
    def test_matches_naive_transcription(self, g):
        assert set(df.generate_family(g).members) == naive_generate(g.n, g.sc)

    def test_size_exhaustive_through_n10_sampled_to_n16(self):
        for n in range(1, 11):
            for g in all_generators(n):
                assert len(df.generate_family(g)) == 1 << (n - 1)
        rng = random.Random(1016)
        for n in range(11, 17):
            for sc in rng.sample(range((1 << n) - 1), 200):
                assert len(df.generate_family(df.Generator(n, sc))) == 1 << (n - 1)

    def test_delta_free_exhaustive_through_n12(self):
        for n in range(1, 13):
            for g in all_generators(n):
                assert df.is_delta_free(df.generate_family(g))

    def test_parity_split(self):
        for n in range(2, 9):
            for g in all_generators(n):
                even, odd = df.parity_census(df.generate_family(g))
                if g.sc == 0:
                    assert (even, odd) == (0, 1 << (n - 1))
                else:
                    assert even == odd == 1 << (n - 2)

    def test_families_pairwise_distinct_n8(self):
        for n in range(1, 9):
            seen = {df.generate_family(g).members for g in all_generators(n)}
            assert len(seen) == (1 << n) - 1

    def test_complement_is_delta_closed_n8(self):
        for n in range(1, 9):
            for g in all_generators(n):
                comp = df.complement_family(df.generate_family(g))
                assert df.is_delta_closed(comp)

    def test_every_generated_family_contains_its_singletons(self):
        for n in range(1, 9):
            for g in all_generators(n):
                f = df.generate_family(g)
                for j in range(n):
                    if g.s >> j & 1:
                        assert (1 << j) in f


class TestLinearFormFamily:
    def test_two_elements(self):
        f = df.linear_form_family(2, df.word_of([1, 2], 2))
        assert f == fam(2, (1,), (2,))

    def test_point_filter(self):
        f = df.linear_form_family(4, df.word_of([1], 4))
        assert f.members == tuple(w for w in range(16) if w & 1)

    def test_empty_s_rejected(self):
        with pytest.raises(ValueError):
            df.linear_form_family(3, 0)

    def test_equals_generated_route_exhaustive_through_n12(self):
        for n in range(1, 13):
            full = df.full_word(n)
            for g in all_generators(n):
                assert df.linear_form_family(n, full ^ g.sc) == df.generate_family(g)


class TestRecoverAndRecognize:
    def test_all_odd_recovers_empty_sc(self):
        for n in range(1, 9):
            assert df.recover_generator(df.all_odd_family(n)) == 0

    def test_catalog_family_recovers_3_4(self):
        # the singleton members are {1} and {2}, so sc = {3,4}; the family
        # defined by {3} alone would contain {4}, which is absent here
        sc = df.recover_generator(N4_CATALOG)
        assert sc == df.word_of([3, 4], 4)
        assert df.generate_family(df.Generator(4, sc)) == N4_CATALOG

    def test_no_singletons_recovers_full_word(self):
        f = fam(3, (1, 2), (1, 3))
        assert df.recover_generator(f) == df.full_word(3)

    def test_recognize_round_trip_exhaustive_through_n12(self):
        for n in range(1, 13):
            for g in all_generators(n):
                assert df.recognize_generator(df.generate_family(g)) == g

    def test_recognize_small_example(self):
        assert df.recognize_generator(fam(2, (1,), (1, 2))) == df.Generator(
            2, df.word_of([2], 2)
        )

    def test_recognize_rejects_non_maximum(self):
        assert df.recognize_generator(fam(3, (1, 2), (1, 3))) is None

    def test_recognize_rejects_wrong_family_with_singletons(self):
        # delta-free, has a singleton, but is not the family its sc defines
        f = fam(3, (1,), (1, 2))
        assert df.recognize_generator(f) is None


class TestIsMaximumFamily:
    def test_all_odd_is_maximum(self):
        for n in range(1, 10):
            assert df.is_maximum_family(df.all_odd_family(n))

    def test_small_family_is_not(self):
        assert not df.is_maximum_family(fam(3, (1,), (1, 2)))

    def test_every_generated_family_is_maximum_n8(self):
        for n in range(1, 9):
            for g in all_generators(n):
                assert df.is_maximum_family(df.generate_family(g))

    def test_right_size_but_not_free(self):
        f = fam(2, (1,), (1, 2), (2,), (1, 2))  # dedupes to 3 members
        assert not df.is_maximum_family(f)
        bad = df.Family(2, [0, 1])
        assert not df.is_maximum_family(bad)
