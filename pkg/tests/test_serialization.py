"""Round-trips and rejection behavior for the lines and json formats."""

from __future__ import annotations

import json
import random

import pytest

import deltafree as df
from conftest import fam


def every_family(n):
    for bits in range(1 << (1 << n)):
        yield [w for w in range(1 << n) if bits >> w & 1]


class TestLinesFormat:
    def test_basic_rendering(self):
        f = fam(3, (1,), (1, 3))
        assert df.family_to_lines(f) == "1\n1 3\n"

    def test_empty_set_token(self):
        assert df.family_to_lines(df.Family(3, [0])) == "-\n"
        assert df.family_from_lines("-\n", 3) == df.Family(3, [0])

    def test_empty_family(self):
        assert df.family_to_lines(df.Family(3)) == ""
        assert df.family_from_lines("", 3) == df.Family(3)

    def test_ground_inferred_from_largest_element(self):
        f = df.family_from_lines("1 3\n2\n")
        assert f.n == 3

    def test_explicit_ground_overrides(self):
        f = df.family_from_lines("1\n", 5)
        assert f.n == 5

    def test_round_trip_exhaustive_small(self):
        for n in (1, 2, 3):
            for members in every_family(n):
                f = df.Family(n, members)
                assert df.family_from_lines(df.family_to_lines(f), n) == f

    def test_round_trip_random_to_n12(self):
        rng = random.Random(9012)
        for _ in range(500):
            n = rng.randint(1, 12)
            members = rng.sample(range(1 << n), rng.randint(0, min(64, 1 << n)))
            f = df.Family(n, members)
            assert df.family_from_lines(df.family_to_lines(f), n) == f

    def test_rejects_garbage_tokens(self):
        with pytest.raises(ValueError, match="cannot parse"):
            df.family_from_lines("1 two\n", 3)

    def test_rejects_unsorted_elements(self):
        with pytest.raises(ValueError, match="strictly increasing"):
            df.family_from_lines("3 1\n", 3)

    def test_rejects_duplicate_elements(self):
        with pytest.raises(ValueError, match="strictly increasing"):
            df.family_from_lines("1 1\n", 3)

    def test_rejects_out_of_ground_elements(self):
        with pytest.raises(ValueError):
            df.family_from_lines("4\n", 3)


class TestJsonFormat:
    def test_document_shape(self):
        payload = json.loads(df.family_to_json(fam(3, (1,), (1, 3))))
        assert payload == {"format": df.FORMAT_TAG, "n": 3, "sets": [[1], [1, 3]]}

    def test_round_trip_exhaustive_small(self):
        for n in (1, 2, 3):
            for members in every_family(n):
                f = df.Family(n, members)
                assert df.family_from_json(df.family_to_json(f)) == f

    def test_round_trip_preserves_ground_without_witnessing_element(self):
        f = df.Family(5, [1])  # no member contains element 5
        assert df.family_from_json(df.family_to_json(f)).n == 5

    def test_round_trip_random_to_n12(self):
        rng = random.Random(3456)
        for _ in range(500):
            n = rng.randint(1, 12)
            members = rng.sample(range(1 << n), rng.randint(0, min(64, 1 << n)))
            f = df.Family(n, members)
            assert df.family_from_json(df.family_to_json(f)) == f

    def test_rejects_bad_json(self):
        with pytest.raises(ValueError, match="invalid JSON"):
            df.family_from_json("{nope")

    def test_rejects_missing_keys(self):
        with pytest.raises(ValueError):
            df.family_from_json('{"n": 3}')

    def test_rejects_wrong_tag(self):
        with pytest.raises(ValueError, match="format tag"):
            df.family_from_json('{"format": "other/9", "n": 2, "sets": []}')

    def test_rejects_non_integer_elements(self):
        with pytest.raises(ValueError):
            df.family_from_json('{"n": 3, "sets": [["a"]]}')

    def test_rejects_bad_ground(self):
        with pytest.raises(ValueError):
            df.family_from_json('{"n": 0, "sets": []}')
        with pytest.raises(ValueError):
            df.family_from_json('{"n": 99, "sets": []}')


class TestFamilyDocument:
    def test_from_family_canonical_order(self):
        doc = df.FamilyDocument.from_family(fam(4, (2, 3), (1,)))
        assert doc.sets == ((1,), (2, 3))
        assert doc.format_tag == df.FORMAT_TAG

    def test_to_family_validates(self):
        with pytest.raises(ValueError):
            df.FamilyDocument(n=3, sets=((2, 1),)).to_family()


class TestElementSetSpecs:
    def test_comma_and_space_forms(self):
        assert df.parse_element_set("3,4,5", 5) == df.word_of([3, 4, 5], 5)
        assert df.parse_element_set("3 4 5", 5) == df.word_of([3, 4, 5], 5)

    def test_empty_means_empty_set(self):
        assert df.parse_element_set("", 4) == 0
        assert df.parse_element_set("-", 4) == 0

    def test_rejects_garbage(self):
        with pytest.raises(ValueError):
            df.parse_element_set("1,x", 4)
        with pytest.raises(ValueError):
            df.parse_element_set("9", 4)

    def test_brace_rendering(self):
        assert df.format_element_set(df.word_of([3, 4], 4)) == "{3,4}"
        assert df.format_element_set(0) == "{}"
