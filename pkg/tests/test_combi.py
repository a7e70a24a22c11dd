from itertools import product

from reconkit.combi import (edge_profiles, grouped_cover_partitions,
                            is_refinement, labeled_partition_count,
                            multiset_partitions, partitions_min2,
                            stirling2, strict_refinements)


def test_stirling2_table():
    assert stirling2(0, 0) == 1
    assert stirling2(4, 2) == 7
    assert stirling2(5, 3) == 25
    assert stirling2(6, 1) == 1
    assert stirling2(3, 5) == 0


def test_partitions_min2():
    assert partitions_min2(2) == ((2,),)
    assert partitions_min2(3) == ((3,),)
    assert set(partitions_min2(6)) == {(6,), (4, 2), (3, 3), (2, 2, 2)}
    assert set(partitions_min2(7)) == {(7,), (5, 2), (4, 3), (3, 2, 2)}


def test_refinement_order():
    assert is_refinement((2, 2), (4,))
    assert is_refinement((2, 2, 2), (4, 2))
    assert not is_refinement((3, 3), (4, 2))
    assert is_refinement((4, 2), (4, 2))
    assert set(strict_refinements((6,))) == {(4, 2), (3, 3), (2, 2, 2)}
    assert set(strict_refinements((4, 2))) == {(2, 2, 2)}
    assert strict_refinements((3, 3)) == ()


def test_multiset_partitions_are_distinct():
    for ms in [(2, 2, 2, 2), (3, 2, 2), (4, 3, 2), (2, 2)]:
        seen = list(multiset_partitions(ms))
        canon = [tuple(sorted(p, reverse=True)) for p in seen]
        assert len(canon) == len(set(canon))
        # every partition must be generated: compare against brute force
        assert set(canon) == _brute_multiset_partitions(ms)


def _brute_multiset_partitions(ms):
    """Partitions of an index set, projected to value multisets."""
    n = len(ms)
    out = set()
    for assignment in product(range(n), repeat=n):
        parts = {}
        for idx, part in enumerate(assignment):
            parts.setdefault(part, []).append(ms[idx])
        canon = tuple(sorted((tuple(sorted(p, reverse=True)) for p in parts.values()),
                             reverse=True))
        out.add(canon)
    return out


def test_grouped_cover_partitions_counts_match_brute_force():
    """Signature counts must equal direct enumeration of labelled set partitions."""
    for values, v in [((2, 2, 2), 6), ((2, 2, 2, 2), 4), ((3, 2, 2), 7), ((2, 2), 4)]:
        got = {}
        for listing, cnt in grouped_cover_partitions(values, v):
            key = tuple(sorted(listing))
            assert key not in got, "duplicate signature"
            got[key] = cnt
        want = _brute_labeled_partitions(values, v)
        assert got == want, (values, v, got, want)


def _brute_labeled_partitions(values, v):
    """Enumerate set partitions of indices (restricted growth strings) with a
    size label per part; count signatures of (part value multiset, label)."""
    n = len(values)
    out = {}
    for assignment in product(range(n), repeat=n):
        # restricted growth: each partition of the index set appears once
        top = -1
        ok = True
        for a in assignment:
            if a > top + 1:
                ok = False
                break
            top = max(top, a)
        if not ok:
            continue
        blocks = {}
        for idx, part in enumerate(assignment):
            blocks.setdefault(part, []).append(idx)
        parts = list(blocks.values())
        if len(parts) < 2:
            continue
        lows = [max(2, max(values[i] for i in p)) for p in parts]
        for bs in product(*[range(lo, v + 1) for lo in lows]):
            if sum(bs) != v:
                continue
            key = tuple(sorted(((tuple(sorted((values[i] for i in p), reverse=True)), b)
                                for p, b in zip(parts, bs))))
            out[key] = out.get(key, 0) + 1
    return out


def test_labeled_partition_count_basics():
    assert labeled_partition_count((2, 2), (((2,), 2), ((2,), 2))) == 1
    assert labeled_partition_count((2, 2, 2), (((2, 2), 4), ((2,), 2))) == 3
    assert labeled_partition_count((2, 2, 2, 2), (((2, 2), 2), ((2, 2), 2))) == 3


def test_edge_profiles():
    profs = set(edge_profiles((2, 2), 2))
    assert profs == {((2, 1), (2, 1))}
    profs = set(edge_profiles((3, 2), 10))
    assert profs == {((3, 2), (2, 1)), ((3, 3), (2, 1))}
    profs = set(edge_profiles((4,), 4))
    assert profs == {((4, 3),), ((4, 4),)}
