"""Predicates and enumerators for families of index sets.

A family is any collection of non-empty index-set bitmasks.  Enumerators yield
tuples of index sets in canonical order.
"""

from __future__ import annotations

from collections import deque
from typing import Collection, Iterable, Iterator, Sequence

from .model import CapExceededError
from .partition import IndexSet, canonical_order, popcount

DEFAULT_MAX_FAMILY_M = 7

Family = frozenset


def _members(f: Iterable[IndexSet]) -> list[IndexSet]:
    members = list(dict.fromkeys(f))
    if any(J <= 0 for J in members):
        raise ValueError("family members must be non-empty index sets")
    return members


def is_intersecting(f: Iterable[IndexSet]) -> bool:
    members = _members(f)
    return all(a & b for i, a in enumerate(members) for b in members[i + 1 :])


def is_path_intersecting(f: Iterable[IndexSet]) -> bool:
    members = _members(f)
    if len(members) <= 1:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        a = members[queue.popleft()]
        for k, b in enumerate(members):
            if k not in seen and a & b:
                seen.add(k)
                queue.append(k)
    return len(seen) == len(members)


def is_maximal_intersecting(f: Collection[IndexSet], m: int) -> bool:
    """An intersecting family on the non-empty subsets of [m] is maximal iff it has 2^(m-1) members."""
    members = _members(f)
    if any(J >> m for J in members):
        raise ValueError(f"family has members outside 1..{m}")
    if not is_intersecting(members):
        raise ValueError("family is not intersecting")
    return len(members) == 1 << (m - 1)


def enumerate_maximal_intersecting(m: int, max_m: int | None = None) -> list[Family]:
    """All maximal intersecting families on the power set of [m].

    A maximal family holds exactly one set of every complementary pair
    ``{J, [m] \\ J}``, so the search only decides which side of each pair to
    keep, rejecting a side that misses some set already kept.
    """
    cap = DEFAULT_MAX_FAMILY_M if max_m is None else max_m
    if m < 1:
        raise ValueError("m must be positive")
    if m > cap:
        raise CapExceededError(
            f"m={m} exceeds the cap {cap}: the number of maximal intersecting families "
            "grows doubly exponentially (1, 2, 4, 12, 81, 2646, 1422564, ...)"
        )
    full = (1 << m) - 1
    # smaller side first: small sets constrain the choice most
    pairs = sorted(
        ((J, full ^ J) for J in range(1, full) if popcount(J) < popcount(full ^ J)
         or (popcount(J) == popcount(full ^ J) and J < full ^ J)),
        key=lambda pair: (popcount(pair[0]), pair[0]),
    )
    results: list[Family] = []
    chosen = [full]

    def extend(k: int) -> None:
        if k == len(pairs):
            results.append(Family(chosen))
            return
        for J in pairs[k]:
            if all(J & other for other in chosen):
                chosen.append(J)
                extend(k + 1)
                chosen.pop()

    extend(0)
    return results


def enumerate_intersecting_over(cells: Sequence[IndexSet]) -> Iterator[tuple[IndexSet, ...]]:
    """Every non-empty pairwise-intersecting subfamily of ``cells``, each exactly once."""
    ordered = canonical_order(_members(cells))
    k = len(ordered)
    # compatible[i]: positions after i whose cells meet cell i
    compatible = [
        sum(1 << j for j in range(i + 1, k) if ordered[i] & ordered[j]) for i in range(k)
    ]

    def extend(prefix: tuple[IndexSet, ...], allowed: int) -> Iterator[tuple[IndexSet, ...]]:
        while allowed:
            low = allowed & -allowed
            i = low.bit_length() - 1
            allowed ^= low
            family = prefix + (ordered[i],)
            yield family
            yield from extend(family, allowed & compatible[i])

    for i in range(k):
        yield (ordered[i],)
        yield from extend((ordered[i],), compatible[i])


def enumerate_path_intersecting_over(cells: Sequence[IndexSet]) -> Iterator[tuple[IndexSet, ...]]:
    """Every non-empty path-intersecting subfamily of ``cells``, each exactly once.

    Connected vertex sets of the cell-intersection graph, grown from their
    lowest-position vertex by exclusive-neighbourhood extension.
    """
    ordered = canonical_order(_members(cells))
    k = len(ordered)
    nbrs = [
        sum(1 << j for j in range(k) if j != i and ordered[i] & ordered[j]) for i in range(k)
    ]

    def as_family(sub: int) -> tuple[IndexSet, ...]:
        return tuple(ordered[j] for j in range(k) if sub >> j & 1)

    def extend(sub: int, ext: int, closed: int, root: int) -> Iterator[tuple[IndexSet, ...]]:
        yield as_family(sub)
        while ext:
            low = ext & -ext
            w = low.bit_length() - 1
            ext ^= low
            fresh = nbrs[w] & ~closed & ~((1 << (root + 1)) - 1)
            yield from extend(sub | low, ext | fresh, closed | fresh, root)

    for v in range(k):
        above = nbrs[v] & ~((1 << (v + 1)) - 1)
        yield from extend(1 << v, above, (1 << v) | nbrs[v], v)
