"""Shared helpers: naive re-implementations used as independent oracles,
family builders, and hypothesis strategies.

The naive checkers deliberately avoid Family's membership table and the
transform-based fast paths; they are the second route every fast result
is compared against.
"""

from __future__ import annotations

import itertools

import hypothesis.strategies as st

import deltafree as df


def fam(n: int, *sets: tuple[int, ...]) -> df.Family:
    """Build a Family from 1-based element tuples."""
    return df.Family(n, [df.word_of(s, n) for s in sets])


def naive_delta_free(members) -> bool:
    pool = set(members)
    for a in members:
        for b in members:
            if a ^ b in pool:
                return False
    return True


def naive_delta_closed(members) -> bool:
    pool = set(members)
    for a in members:
        for b in members:
            if a ^ b not in pool:
                return False
    return True


def _pair_images(members, combine):
    for a, b in itertools.combinations(sorted(members), 2):
        yield combine(a, b)


def naive_quadruple_free(members) -> bool:
    images = list(_pair_images(members, lambda a, b: a ^ b))
    return len(images) == len(set(images))


def naive_union_free(members) -> bool:
    images = list(_pair_images(members, lambda a, b: a | b))
    return len(images) == len(set(images))


def naive_generate(n: int, sc: int) -> set[int]:
    """Direct transcription of the construction rule, one word at a time."""
    out = set()
    for w in range(1 << n):
        odd = bin(w).count("1") % 2 == 1
        trace_odd = bin(w & sc).count("1") % 2 == 1
        if odd != trace_odd:
            out.add(w)
    return out


@st.composite
def family_strategy(draw, max_n: int = 6, max_size: int | None = None):
    n = draw(st.integers(min_value=1, max_value=max_n))
    words = draw(
        st.frozensets(st.integers(min_value=0, max_value=(1 << n) - 1), max_size=max_size)
    )
    return df.Family(n, words)


@st.composite
def generator_strategy(draw, min_n: int = 1, max_n: int = 10):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    sc = draw(st.integers(min_value=0, max_value=(1 << n) - 2))
    return df.Generator(n, sc)
