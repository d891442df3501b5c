"""Brute-force enumeration of all maximum delta-free families for small n.

This is the independent oracle: it knows nothing about the generator
construction and finds every family of size exactly 2^(n-1) by pruned
depth-first search over candidate words in ascending order.  The empty
set is excluded up front (it always violates via A xor A); adding a word
X to a partial family P forbids every X xor Y with Y in P; a branch is
abandoned as soon as the remaining candidates cannot reach the target
size.  Canonical forms under ground-set relabeling give the isomorphism
class census.

The search state fits in two machine-word bitmasks over the 2^n possible
words, so the whole thing is plain int arithmetic.  Subtrees rooted at
depth-2 prefixes can be farmed out to worker processes; results are
merged and sorted, so output is identical for any worker count.
"""

from __future__ import annotations

import itertools
import multiprocessing
import time
from dataclasses import dataclass

import numpy as np

from .construction import recognize_generator
from .core import Family, _gather_has, is_delta_free, validate_ground

_ENUM_MAX_GROUND = 5
_CANONICAL_MAX_GROUND = 8
_EXTENSION_MAX_GROUND = 12
_TIME_CHECK_STRIDE = 256


class EnumerationBudgetError(RuntimeError):
    """Raised when the time budget runs out; carries the partial results."""

    def __init__(self, message: str, partial: tuple[tuple[int, ...], ...] = ()):
        super().__init__(message)
        self.partial = partial


@dataclass(frozen=True, slots=True)
class EnumerationReport:
    """Everything the exhaustive search found for one ground size."""

    n: int
    families: tuple[Family, ...]
    total: int
    all_generated: bool
    class_sizes: tuple[int, ...]
    elapsed: float
    complete: bool = True


def _dfs(
    n: int,
    prefix: list[int],
    cand: int,
    need: int,
    out: list[tuple[int, ...]],
    deadline: float | None,
    counter: list[int],
) -> None:
    """Collect every completion of ``prefix`` using candidate words ``cand``.

    ``cand`` is a 2^n-bit mask of the words still allowed: greater than
    the last chosen word and not forbidden by any pair chosen so far.
    """
    if need == 0:
        out.append(tuple(prefix))
        return
    while cand:
        if cand.bit_count() < need:
            return
        counter[0] += 1
        if deadline is not None and counter[0] % _TIME_CHECK_STRIDE == 0:
            if time.monotonic() > deadline:
                raise EnumerationBudgetError(
                    f"enumeration budget exhausted with {len(out)} families found",
                    tuple(out),
                )
        low = cand & -cand
        cand ^= low
        x = low.bit_length() - 1
        newly = 0
        for y in prefix:
            newly |= 1 << (x ^ y)
        prefix.append(x)
        _dfs(n, prefix, cand & ~newly, need - 1, out, deadline, counter)
        prefix.pop()


def _search_from(
    n: int, prefix: tuple[int, ...], cand: int, deadline: float | None
) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    need = (1 << (n - 1)) - len(prefix)
    _dfs(n, list(prefix), cand, need, out, deadline, [0])
    return out


def _worker(task: tuple[int, tuple[int, ...], int, float | None]) -> list[tuple[int, ...]]:
    return _search_from(*task)


def _split_tasks(
    n: int, depth: int, deadline: float | None
) -> list[tuple[int, tuple[int, ...], int, float | None]]:
    """All live (prefix, candidates) states at the given search depth."""
    tasks: list[tuple[int, tuple[int, ...], int, float | None]] = []
    full = (1 << (1 << n)) - 2  # every word except the empty set

    def grow(prefix: list[int], cand: int) -> None:
        if len(prefix) == depth:
            tasks.append((n, tuple(prefix), cand, deadline))
            return
        while cand:
            low = cand & -cand
            cand ^= low
            x = low.bit_length() - 1
            newly = 0
            for y in prefix:
                newly |= 1 << (x ^ y)
            prefix.append(x)
            grow(prefix, cand & ~newly)
            prefix.pop()

    grow([], full)
    return tasks


def enumerate_maximum_families(
    n: int, budget: float | None = None, jobs: int = 1
) -> EnumerationReport:
    """Every delta-free family of size exactly 2^(n-1), 2 <= n <= 5.

    Deterministic: families are sorted lexicographically by member words
    regardless of ``jobs``.  A ``budget`` in seconds aborts the search
    with :class:`EnumerationBudgetError` rather than returning a
    truncated report.
    """
    validate_ground(n)
    if not 2 <= n <= _ENUM_MAX_GROUND:
        raise ValueError(f"enumeration supports 2 <= n <= {_ENUM_MAX_GROUND}")
    if budget is not None and budget <= 0:
        raise EnumerationBudgetError("enumeration budget exhausted before start")
    deadline = None if budget is None else time.monotonic() + budget
    start = time.monotonic()
    target = 1 << (n - 1)
    if jobs <= 1 or target <= 2:
        raw = _search_from(n, (), (1 << (1 << n)) - 2, deadline)
    else:
        tasks = _split_tasks(n, 2, deadline)
        raw = []
        ctx = multiprocessing.get_context("fork")
        with ctx.Pool(processes=jobs) as pool:
            try:
                for chunk in pool.imap(_worker, tasks, chunksize=8):
                    raw.extend(chunk)
            except EnumerationBudgetError as exc:
                raise EnumerationBudgetError(str(exc), tuple(raw)) from None
    raw.sort()
    families = tuple(Family(n, words) for words in raw)
    elapsed = time.monotonic() - start
    all_generated = all(recognize_generator(f) is not None for f in families)
    class_sizes = _class_size_census(families)
    return EnumerationReport(
        n=n,
        families=families,
        total=len(families),
        all_generated=all_generated,
        class_sizes=class_sizes,
        elapsed=elapsed,
    )


def verify_completeness(report: EnumerationReport) -> bool:
    """True iff the report holds all 2^n - 1 families and each one is
    recognized by its recovered generator."""
    if not report.complete:
        raise ValueError("cannot verify a budget-truncated report")
    if report.total != (1 << report.n) - 1:
        return False
    return all(recognize_generator(f) is not None for f in report.families)


def canonical_form(family: Family) -> Family:
    """Lexicographically least relabeling of the family over all
    permutations of the ground set; equal canonical forms mean isomorphic."""
    n = family.n
    if n > _CANONICAL_MAX_GROUND:
        raise ValueError(f"canonical form supports n <= {_CANONICAL_MAX_GROUND}")
    m = family._arr
    if m.size == 0:
        return family
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.uint32)
    relabeled = np.zeros((perms.shape[0], m.size), dtype=np.uint32)
    for i in range(n):
        bit = ((m >> i) & 1).astype(np.uint32)
        relabeled |= bit[None, :] << perms[:, i][:, None]
    relabeled.sort(axis=1)
    best = relabeled[np.lexsort(relabeled.T[::-1])[0]]
    return Family(n, best)


def _class_size_census(families: tuple[Family, ...]) -> tuple[int, ...]:
    groups: dict[tuple[int, ...], int] = {}
    for f in families:
        key = canonical_form(f).members
        groups[key] = groups.get(key, 0) + 1
    return tuple(sorted(groups.values()))


def isomorphism_class_sizes(report: EnumerationReport) -> tuple[int, ...]:
    """Sizes of the relabeling-equivalence classes, ascending."""
    if not report.complete:
        raise ValueError("cannot classify a budget-truncated report")
    if report.n > _CANONICAL_MAX_GROUND:
        raise ValueError(f"classification supports n <= {_CANONICAL_MAX_GROUND}")
    return _class_size_census(report.families)


def find_extension(family: Family) -> int | None:
    """The least nonempty word whose addition keeps the family delta-free,
    or None when the family is inclusion-maximal.

    Requires a delta-free input; probing whether inclusion-maximality can
    occur below the maximum size is exactly what this exists for.
    """
    if family.n > _EXTENSION_MAX_GROUND:
        raise ValueError(f"extension scan supports n <= {_EXTENSION_MAX_GROUND}")
    if not is_delta_free(family):
        raise ValueError("find_extension requires a delta-free family")
    m = family._arr
    for x in range(1, 1 << family.n):
        if family._has(x):
            continue
        if m.size and _gather_has(family, x ^ m).any():
            continue
        return x
    return None
