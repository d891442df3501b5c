#!/usr/bin/env python3
"""Probe whether inclusion-maximal delta-free families can be smaller than
the maximum size 2^(n-1).

"Cannot add any set" is weaker than "has the largest possible size"; the
structure theory only pins down the latter.  Exhaustive search below
answers the question at desk scale and a random greedy probe extends it:
strictly smaller inclusion-maximal families do exist, first at n=4.
"""

import itertools
import random

import deltafree as df


def naive_free(members):
    pool = set(members)
    return not any((a ^ b) in pool for a, b in itertools.product(members, repeat=2))


print("=== exhaustive census of inclusion-maximal families, n <= 4 ===")
for n in (2, 3, 4):
    top = 1 << n
    sizes: dict[int, int] = {}
    witness = None
    for bits in range(1 << (top - 1)):
        members = [w + 1 for w in range(top - 1) if bits >> w & 1]
        if not naive_free(members):
            continue
        family = df.Family(n, members)
        if df.find_extension(family) is None:
            sizes[len(members)] = sizes.get(len(members), 0) + 1
            if len(members) < (1 << (n - 1)) and witness is None:
                witness = family
    print(f"  n={n}: sizes -> count {sorted(sizes.items())}, maximum is {1 << (n - 1)}")
    if witness is not None:
        sets = [df.elements_of(w) for w in witness.members]
        print(f"        smallest witness: {sets}")
        assert df.find_extension(witness) is None

print()
print("=== random greedy probe, n = 5 and 6 ===")
rng = random.Random(55)
for n in (5, 6):
    smallest = None
    smallest_family = None
    for _ in range(400):
        order = list(range(1, 1 << n))
        rng.shuffle(order)
        members: list[int] = []
        pool: set[int] = set()
        for w in order:
            if w in pool or any((w ^ y) in pool for y in members):
                continue
            members.append(w)
            pool.add(w)
        if smallest is None or len(members) < smallest:
            smallest = len(members)
            smallest_family = df.Family(n, members)
    assert smallest_family is not None
    assert df.find_extension(smallest_family) is None
    print(
        f"  n={n}: smallest inclusion-maximal family found has {smallest} members "
        f"(maximum is {1 << (n - 1)})"
    )

print()
print("conclusion: inclusion-maximality does not force maximum size; the")
print("defect first appears at n=4 (size 5 versus 8) and grows from there.")
