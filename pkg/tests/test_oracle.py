import random
from itertools import combinations_with_replacement

import pytest

from reconkit.combi import partitions_min2, strict_refinements
from reconkit.errors import DomainError
from reconkit.graphcore import (all_graphs, complete, cycle, disjoint_union,
                                elementary_graph, empty_graph, is_connected,
                                path, vertex_deck)
from reconkit.isotype import count_subgraphs
from reconkit.oracle import (Polynomial, c_oracle, charpoly_oracle, con_oracle,
                             cover_count_oracle, elementary_count_oracle,
                             ham_oracle, kedge_connected_oracle,
                             laplacian_tree_count, lcompo_oracle, p_oracle,
                             psi_oracle, rankpoly_oracle, signed_c_oracle,
                             signed_exact_cover_oracle, tr_oracle, uni_oracle)


def test_psi_examples(prism):
    assert psi_oracle(prism, 3) == 2
    assert psi_oracle(prism, 4) == 3
    assert psi_oracle(complete(4), 3) == 4
    assert psi_oracle(cycle(5), 5) == 1
    assert psi_oracle(path(4), 2) == 3  # psi_2 counts edges
    assert psi_oracle(complete(3), 7) == 0


def test_tr_ham_uni_examples():
    assert tr_oracle(cycle(5)) == 5
    assert ham_oracle(complete(4)) == 3
    assert uni_oracle(cycle(4), 4) == 1
    assert uni_oracle(cycle(4), 3) == 0
    assert ham_oracle(path(2)) == 1  # C2 = K2 convention
    assert tr_oracle(disjoint_union(path(2), path(2))) == 0


def test_tr_matches_integer_laplacian(corpus6):
    for g in corpus6:
        if g.e >= 1 and is_connected(g):
            assert tr_oracle(g) == laplacian_tree_count(g)


def test_tr_matches_laplacian_sample_n7():
    rng = random.Random(3)
    pool = [g for g in all_graphs(7, min_edges=6) if g.n == 7 and is_connected(g)]
    for g in rng.sample(pool, 40):
        assert tr_oracle(g) == laplacian_tree_count(g)


def test_charpoly_examples():
    assert charpoly_oracle(path(2)).coeffs == (1, 0, -1)
    assert charpoly_oracle(path(3)).coeffs == (1, 0, -2, 0)
    assert charpoly_oracle(complete(3)).coeffs == (1, 0, -3, -2)
    assert charpoly_oracle(complete(4)).coeffs == (1, 0, -6, -8, -3)
    assert charpoly_oracle(cycle(5)).coeffs == (1, 0, -5, 0, 5, -2)
    assert charpoly_oracle(empty_graph(3)).coeffs == (1, 0, 0, 0)


def test_charpoly_c0_c1_c2(corpus6):
    for g in corpus6:
        if g.n < 2:
            continue
        p = charpoly_oracle(g)
        assert p[0] == 1 and p[1] == 0
        assert p[2] == -g.e


def test_derivative_identity(corpus6):
    for g in corpus6:
        if g.n < 2:
            continue
        lhs = charpoly_oracle(g).derivative()
        total = None
        for card in vertex_deck(g):
            p = charpoly_oracle(card)
            total = p if total is None else total.add(p)
        assert lhs.coeffs == total.coeffs


def test_polynomial_str():
    assert str(Polynomial((1, 0, -2, 0))) == "+1x^3 -2x"
    assert str(Polynomial((1,))) == "+1"


def test_rankpoly_examples():
    assert rankpoly_oracle(path(2)) == {(0, 0): 1, (1, 0): 1}
    assert rankpoly_oracle(complete(3)) == {(0, 0): 1, (1, 0): 3, (2, 0): 3, (2, 1): 1}
    assert rankpoly_oracle(disjoint_union(path(2), path(2))) == \
        {(0, 0): 1, (1, 0): 2, (2, 0): 1}


def test_rankpoly_guard():
    with pytest.raises(DomainError):
        rankpoly_oracle(complete(7))  # 21 edges


def test_elementary_count_examples(prism):
    assert elementary_count_oracle(complete(4), (2, 2)) == 3
    assert elementary_count_oracle(cycle(4), (4,)) == 1
    # the prism's two triangles are disjoint but form a single subgraph
    assert elementary_count_oracle(prism, (3, 3)) == 1
    assert elementary_count_oracle(prism, (2, 2, 2)) == 4


def test_elementary_count_matches_subgraph_count(corpus5):
    for g in corpus5:
        for parts in partitions_min2(min(g.n, 5)):
            if sum(parts) <= g.n:
                want = count_subgraphs(g, elementary_graph(parts))
                assert elementary_count_oracle(g, parts) == want


def test_cover_count_examples():
    k2 = path(2)
    assert cover_count_oracle([k2, k2], path(3)) == 2
    assert cover_count_oracle([k2], k2) == 1
    assert cover_count_oracle([k2, k2], k2) == 1
    assert cover_count_oracle([k2, k2, k2], complete(3)) == 6
    with pytest.raises(DomainError):
        cover_count_oracle([disjoint_union(k2, empty_graph(1))], k2)


def test_kocay_identity_small(corpus5):
    """prod <g, F_i> equals the cover-weighted sum over subgraph types."""
    from reconkit.isotype import canonical_code, subgraph_type_table
    pool = [path(2), path(3), complete(3), cycle(4)]
    cover_memo = {}
    reps = {}
    for h in all_graphs(5):
        reps.setdefault(canonical_code(h), h)
    for g in corpus5:
        if g.e == 0:
            continue
        counts = {}
        for m in range(1, g.e + 1):
            for code, cnt in subgraph_type_table(g, m).items():
                counts[code] = counts.get(code, 0) + cnt
        for r in (2, 3):
            for fams in combinations_with_replacement(pool, r):
                lhs = 1
                for f in fams:
                    lhs *= count_subgraphs(g, f)
                rhs = 0
                for code, cnt in counts.items():
                    mkey = (fams, code)
                    if mkey not in cover_memo:
                        cover_memo[mkey] = cover_count_oracle(list(fams), reps[code])
                    rhs += cover_memo[mkey] * cnt
                assert lhs == rhs, (g, fams)


def test_cycle_cover_examples(prism):
    assert c_oracle(cycle(4), (2, 2)) == 4
    assert con_oracle(complete(3), (2, 2)) == 6
    assert con_oracle(complete(3), (2, 2, 2)) == 24
    assert c_oracle(prism, (3,)) == 0
    assert con_oracle(cycle(4), (2, 2)) == 0
    assert p_oracle(prism, (3,)) == 2


def test_p_is_product_of_psi(corpus5):
    for g in corpus5:
        for seq in [(2,), (2, 2), (3, 2), (4, 3, 2)]:
            want = 1
            for a in seq:
                want *= psi_oracle(g, a)
            assert p_oracle(g, seq) == want


def test_signed_c_examples():
    assert signed_c_oracle(cycle(4), (2, 2)) == 4
    assert signed_c_oracle(path(2), (2,)) == -1
    # on C4 the 4-cycle term (-2) cancels the two opposite-edge pairs (+1 each)
    assert signed_c_oracle(cycle(4), (4,)) == 0
    assert signed_c_oracle(complete(3), (3,)) == 2
    assert signed_exact_cover_oracle(elementary_graph((2, 2)), (2, 2)) == 2
    assert signed_exact_cover_oracle(elementary_graph((4, 2)), (4, 2)) == 2


def test_signed_refinement_identity(corpus5):
    """Grouping spanning tuples by their union graph, type by type."""
    for g in corpus5:
        if g.n < 2:
            continue
        for parts in partitions_min2(g.n):
            lhs = signed_c_oracle(g, parts)
            rhs = 0
            for lam in (parts,) + strict_refinements(parts):
                rhs += signed_exact_cover_oracle(elementary_graph(lam), parts) * \
                    elementary_count_oracle(g, lam)
            assert lhs == rhs, (g, parts)


def test_kedge_and_lcompo_examples():
    assert kedge_connected_oracle(cycle(4), 4) == 1
    assert kedge_connected_oracle(cycle(4), 3) == 4
    assert kedge_connected_oracle(complete(3), 2) == 3
    assert kedge_connected_oracle(complete(4), 6) == 1
    assert lcompo_oracle(cycle(4), ((2, 1), (2, 1))) == 2
    assert lcompo_oracle(complete(4), ((2, 1), (2, 1))) == 3
    with pytest.raises(DomainError):
        lcompo_oracle(cycle(4), ((2, 1),))
