import pytest

from reconkit.deck import NMatrix, canonical_nmatrix, nmatrix, strip
from reconkit.errors import InvalidMatrixError
from reconkit.graphcore import complete, cycle, path
from reconkit.nrecon import reconstruct
from reconkit.oracle import (c_oracle, charpoly_oracle, con_oracle,
                             elementary_count_oracle, ham_oracle,
                             kedge_connected_oracle, lcompo_oracle,
                             psi_oracle, rankpoly_oracle, tr_oracle,
                             uni_oracle)


def _seqs_upto(v):
    out = []

    def rec(prefix, largest, budget):
        for a in range(2, min(largest, budget) + 1):
            out.append(tuple(prefix + [a]))
            rec(prefix + [a], a, budget - a)

    rec([], v, v)
    return out


def test_reconstruct_examples(prism):
    rec = reconstruct(strip(nmatrix(prism)))
    assert rec.top.charpoly.coeffs == charpoly_oracle(prism).coeffs
    assert reconstruct(strip(nmatrix(complete(3)))).top.ham == 1
    assert reconstruct(strip(nmatrix(cycle(4)))).top.tr == 4


def test_psi_step_values(prism):
    rec = reconstruct(strip(nmatrix(prism)))
    assert rec.top.psi[3] == 2
    assert rec.top.psi[4] == 3
    assert rec.top.psi[2] == 9
    rec = reconstruct(strip(nmatrix(cycle(4))))
    assert rec.top.psi[3] == 0


def test_k2_node_conventions():
    rec = reconstruct(strip(nmatrix(path(2))))
    assert rec.top.v == 2 and rec.top.e == 1
    assert rec.top.ham == 1 and rec.top.tr == 1
    assert rec.top.charpoly.coeffs == (1, 0, -1)


def test_p_c_step_examples():
    rec = reconstruct(strip(nmatrix(cycle(4))))
    t = rec.top_index
    assert rec.p(t, (2, 2)) == 16
    assert rec.c(t, (2, 2)) == 4
    assert rec.con(t, (2, 2)) == 0
    rec3 = reconstruct(strip(nmatrix(complete(3))))
    assert rec3.con(rec3.top_index, (2, 2)) == 6
    assert rec3.con(rec3.top_index, (2, 2, 2)) == 24
    assert rec3.con(rec3.top_index, (3,)) == 1


def test_qm_tm_examples():
    rec = reconstruct(strip(nmatrix(path(2))))
    t = rec.top_index
    listing = (((2,), 2),)
    assert rec.q_m(t, 2, listing) == 1
    assert rec.t_m(t, 2, listing) == 1
    rec4 = reconstruct(strip(nmatrix(cycle(4))))
    t4 = rec4.top_index
    listing = (((2,), 2), ((2,), 2))
    assert rec4.t_m(t4, 4, listing) == 4
    # with m = v and b = v the subset sum collapses to a single con value
    assert rec4.q_m(t4, 4, (((4,), 4),)) == rec4.con(t4, (4,)) == 1


def test_con_matches_oracle_on_every_node(corpus5):
    for g in corpus5:
        if g.e == 0:
            continue
        labelled = nmatrix(g)
        rec = reconstruct(strip(labelled))
        for idx, cls in enumerate(labelled.labels.classes):
            h = cls.rep
            for seq in _seqs_upto(h.n):
                assert rec.con(idx, seq) == con_oracle(h, seq), (g, h, seq)
                assert rec.c(idx, seq) == c_oracle(h, seq), (g, h, seq)


def test_elementary_counts_via_c(corpus5):
    """c(A->G) = c(A->F) <G,F> when the sequence is a partition of v(G)."""
    from reconkit.combi import partitions_min2
    from math import factorial
    for g in corpus5:
        if g.e == 0 or g.n < 3:
            continue
        rec = reconstruct(strip(nmatrix(g)))
        t = rec.top_index
        for parts in partitions_min2(g.n):
            if len(parts) < 2:
                continue
            sym = 1
            for p in set(parts):
                sym *= factorial(parts.count(p))
            assert rec.c(t, parts) == sym * elementary_count_oracle(g, parts)


def test_cn_step_c4():
    rec = reconstruct(strip(nmatrix(cycle(4))))
    assert rec.top.charpoly.coeffs == (1, 0, -4, 0, 0)
    rec3 = reconstruct(strip(nmatrix(complete(3))))
    assert rec3.top.charpoly[3] == -2


def test_kedge_examples():
    rec = reconstruct(strip(nmatrix(cycle(4))))
    t = rec.top_index
    assert rec.kedge(t, 3) == 4
    assert rec.kedge(t, 4) == 1
    assert rec.kedge(t, 2) == 0
    rec4 = reconstruct(strip(nmatrix(complete(4))))
    assert rec4.kedge(rec4.top_index, 6) == 1


def test_kedge_matches_oracle(corpus5):
    for g in corpus5:
        if g.e == 0:
            continue
        rec = reconstruct(strip(nmatrix(g)))
        t = rec.top_index
        for k in range(g.n - 1, g.e + 1):
            assert rec.kedge(t, k) == kedge_connected_oracle(g, k), (g, k)


def test_lcompo_examples():
    rec = reconstruct(strip(nmatrix(cycle(4))))
    assert rec.lcompo(rec.top_index, ((2, 1), (2, 1))) == 2
    rec = reconstruct(strip(nmatrix(complete(4))))
    assert rec.lcompo(rec.top_index, ((2, 1), (2, 1))) == 3


def test_lcompo_matches_oracle(corpus5):
    from reconkit.combi import edge_profiles, partitions_min2
    for g in corpus5:
        if g.e == 0:
            continue
        rec = reconstruct(strip(nmatrix(g)))
        t = rec.top_index
        for nparts in partitions_min2(g.n):
            if len(nparts) < 2:
                continue
            for spec in edge_profiles(nparts, g.e):
                assert rec.lcompo(t, spec) == lcompo_oracle(g, spec), (g, spec)


def test_rankpoly_small(corpus5):
    for g in corpus5:
        if g.e == 0:
            continue
        assert reconstruct(strip(nmatrix(g))).rankpoly() == rankpoly_oracle(g), g


def test_permutation_invariance(prism):
    nm = strip(nmatrix(prism))
    perm = [0, 3, 1, 2, 6, 4, 5, 7, 8]  # reorder within ranks
    rows = tuple(tuple(nm.rows[perm[i]][perm[j]] for j in range(9))
                 for i in range(9))
    shuffled = NMatrix(rows, None)
    a = reconstruct(canonical_nmatrix(nm))
    b = reconstruct(canonical_nmatrix(shuffled))
    assert a.top.charpoly.coeffs == b.top.charpoly.coeffs
    assert a.top.ham == b.top.ham and a.top.tr == b.top.tr
    # reconstruct also accepts the shuffled matrix directly
    c = reconstruct(shuffled)
    assert c.top.charpoly.coeffs == a.top.charpoly.coeffs


def test_invalid_matrix_is_detected():
    # every off-by-one corruption of C4's matrix breaks an exact division
    # or the shape validation
    nm = strip(nmatrix(cycle(4)))
    for i in range(3):
        for j in range(3):
            for delta in (1, -1):
                rows = [list(r) for r in nm.rows]
                rows[i][j] += delta
                if rows[i][j] < 0:
                    continue
                with pytest.raises(InvalidMatrixError):
                    reconstruct(NMatrix(tuple(tuple(r) for r in rows), None))


def test_report_shape(prism):
    rep = reconstruct(strip(nmatrix(prism))).report()
    assert rep["charpoly"] == list(charpoly_oracle(prism).coeffs)
    assert rep["tr"] == tr_oracle(prism)
    assert rep["ham"] == ham_oracle(prism)
    assert rep["psi"]["3"] == psi_oracle(prism, 3)
    assert rep["uni"]["6"] == uni_oracle(prism, 6)
    got = {(d["r"], d["s"]): d["count"] for d in rep["rankpoly"]}
    assert got == rankpoly_oracle(prism)
