"""Small exact-arithmetic combinatorics helpers used by the reconstruction pipelines."""

from __future__ import annotations

from functools import cache, lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb, factorial

from .errors import InvalidMatrixError

__all__ = [
    "stirling2",
    "exact_div",
    "partitions_min2",
    "is_refinement",
    "strict_refinements",
    "multiset_partitions",
    "labeled_partition_count",
    "grouped_cover_partitions",
    "edge_profiles",
]


@cache
def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind."""
    if n == k:
        return 1
    if k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def exact_div(a: int, b: int, what: str = "value") -> int:
    q, r = divmod(a, b)
    if r:
        raise InvalidMatrixError(f"{what}: {a} is not divisible by {b}")
    return q


@lru_cache(maxsize=None)
def partitions_min2(n: int, largest: int | None = None) -> tuple:
    """Partitions of n into non-increasing parts >= 2, as tuples."""
    if largest is None:
        largest = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, largest), 1, -1):
        if n - first == 1:
            continue
        for rest in partitions_min2(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def _can_group(values: tuple, targets: tuple) -> bool:
    if not targets:
        return not values
    t = targets[0]
    idxs = range(len(values))
    seen = set()
    for r in range(1, len(values) + 1):
        for pick in combinations(idxs, r):
            chosen = tuple(values[i] for i in pick)
            if sum(chosen) != t or chosen in seen:
                continue
            seen.add(chosen)
            rest = tuple(v for i, v in enumerate(values) if i not in set(pick))
            if _can_group(rest, targets[1:]):
                return True
    return False


def is_refinement(fine: tuple, coarse: tuple) -> bool:
    """Whether `fine` refines `coarse`: parts of fine group into sums giving coarse."""
    if sum(fine) != sum(coarse) or len(fine) < len(coarse):
        return False
    return _can_group(tuple(sorted(fine, reverse=True)),
                      tuple(sorted(coarse, reverse=True)))


@lru_cache(maxsize=None)
def strict_refinements(parts: tuple) -> tuple:
    """All partitions strictly below `parts` in the refinement order (parts >= 2)."""
    parts = tuple(sorted(parts, reverse=True))
    return tuple(mu for mu in partitions_min2(sum(parts))
                 if mu != parts and is_refinement(mu, parts))


def _sub_multisets(ms: tuple):
    """All distinct sub-multisets of a sorted multiset."""
    if not ms:
        yield ()
        return
    val = ms[0]
    mult = sum(1 for x in ms if x == val)
    rest = ms[mult:]
    for tail in _sub_multisets(rest):
        for take in range(mult + 1):
            yield (val,) * take + tail


def _multiset_minus(ms: tuple, sub: tuple) -> tuple:
    out = list(ms)
    for x in sub:
        out.remove(x)
    return tuple(out)


def multiset_partitions(ms: tuple, bound: tuple | None = None):
    """All partitions of a sorted (descending) multiset into unordered parts.

    Parts are produced in non-increasing tuple order, which makes each
    partition appear exactly once even when the multiset has repeats.
    """
    if not ms:
        yield ()
        return
    first, rest = ms[0], ms[1:]
    for sub in _sub_multisets(rest):
        part = tuple(sorted((first,) + sub, reverse=True))
        if bound is not None and part > bound:
            continue
        remaining = _multiset_minus(rest, sub)
        for tail in multiset_partitions(remaining, part):
            yield (part,) + tail


def labeled_partition_count(values: tuple, listing: tuple) -> int:
    """Number of (set partition, size label) pairs realising a given signature.

    `values` is the multiset being partitioned; `listing` is a tuple of
    (part multiset, label) pairs.  Counts partitions of the *index set* of
    `values` whose parts, read as value multisets with their labels, form
    exactly this multiset of pairs.
    """
    mult = {}
    for w in values:
        mult[w] = mult.get(w, 0) + 1
    num = 1
    for w, m in mult.items():
        num *= factorial(m)
    den = 1
    for part, _b in listing:
        cw = {}
        for w in part:
            cw[w] = cw.get(w, 0) + 1
        for m in cw.values():
            den *= factorial(m)
    dup = {}
    for pair in listing:
        dup[pair] = dup.get(pair, 0) + 1
    for m in dup.values():
        den *= factorial(m)
    q, r = divmod(num, den)
    assert r == 0
    return q


def grouped_cover_partitions(values: tuple, v: int):
    """Signatures (listing, count) of labelled partitions with >= 2 parts.

    Enumerates multisets of (sub-multiset of `values`, size b) pairs where the
    sub-multisets partition `values`, every b >= max(2, max of its part), and
    the b values sum to `v`.  `count` is the number of labelled set partitions
    realising the signature.
    """
    values = tuple(sorted(values, reverse=True))
    for parts in multiset_partitions(values):
        q = len(parts)
        if q < 2:
            continue
        lows = [max(2, p[0]) for p in parts]
        if sum(lows) > v:
            continue
        # assign b per part; identical parts get non-increasing b to avoid duplicates
        groups = []
        i = 0
        while i < len(parts):
            j = i
            while j < len(parts) and parts[j] == parts[i]:
                j += 1
            groups.append((parts[i], j - i, lows[i]))
            i = j

        def assign(gi, budget, acc):
            if gi == len(groups):
                if budget == 0:
                    yield tuple(acc)
                return
            part, cnt, low = groups[gi]
            remaining_low = sum(g[1] * g[2] for g in groups[gi + 1:])
            hi = budget - remaining_low
            for bs in combinations_with_replacement(range(low, hi + 1), cnt):
                s = sum(bs)
                if s <= budget and budget - s >= remaining_low:
                    yield from assign(gi + 1, budget - s,
                                      acc + [(part, b) for b in sorted(bs, reverse=True)])

        for listing in assign(0, v, []):
            yield listing, labeled_partition_count(values, listing)


def edge_profiles(n_parts: tuple, max_total: int):
    """Multisets of (n_i, m_i) specs: m_i in [n_i - 1, C(n_i, 2)], sum m <= max_total.

    `n_parts` is a non-increasing tuple of component orders.  Equal orders get
    non-increasing edge counts so each multiset appears once.
    """
    groups = []
    i = 0
    while i < len(n_parts):
        j = i
        while j < len(n_parts) and n_parts[j] == n_parts[i]:
            j += 1
        groups.append((n_parts[i], j - i))
        i = j

    def assign(gi, budget, acc):
        if gi == len(groups):
            yield tuple(acc)
            return
        nn, cnt = groups[gi]
        lo, hi = nn - 1, comb(nn, 2)
        for ms in combinations_with_replacement(range(lo, hi + 1), cnt):
            s = sum(ms)
            if s > budget:
                continue
            yield from assign(gi + 1, budget - s,
                              acc + [(nn, m) for m in sorted(ms, reverse=True)])

    yield from assign(0, max_total, [])
