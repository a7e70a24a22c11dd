import pytest

from reconkit.deck import (Elp, NMatrix, canonical_nmatrix, child_nmatrices,
                           count_empty_induced, elp_automorphisms,
                           elp_from_json, elp_from_nmatrix, elp_to_json,
                           infer_v_e, lambda_deck, nmatrix, nmatrix_from_elp,
                           nmatrix_from_json, nmatrix_to_json, strip)
from reconkit.errors import DomainError, InvalidMatrixError
from reconkit.graphcore import (complete, empty_graph,
                                induced_subgraph, path)
from reconkit.isotype import are_isomorphic, count_induced

PRISM_MATRIX = (
    (1, 0, 0, 0, 0, 0, 0, 0, 0),
    (1, 1, 0, 0, 0, 0, 0, 0, 0),
    (2, 0, 1, 0, 0, 0, 0, 0, 0),
    (3, 0, 0, 1, 0, 0, 0, 0, 0),
    (3, 2, 2, 0, 1, 0, 0, 0, 0),
    (4, 1, 2, 1, 0, 1, 0, 0, 0),
    (4, 0, 4, 0, 0, 0, 1, 0, 0),
    (6, 3, 6, 1, 2, 2, 1, 1, 0),
    (9, 6, 12, 2, 6, 6, 3, 6, 1),
)


def test_lambda_deck_examples(prism):
    assert [c.rep for c in lambda_deck(path(2)).classes] == [path(2)]
    classes = lambda_deck(prism).classes
    assert len(classes) == 9
    assert are_isomorphic(classes[0].rep, path(2))
    assert are_isomorphic(classes[-1].rep, prism)
    assert [c.v for c in classes] == [2, 3, 3, 3, 4, 4, 4, 5, 6]
    p3_classes = lambda_deck(path(3)).classes
    assert len(p3_classes) == 2
    with pytest.raises(DomainError):
        lambda_deck(empty_graph(3))


def test_nmatrix_prism_golden(prism):
    assert nmatrix(prism).rows == PRISM_MATRIX


def test_nmatrix_small():
    assert nmatrix(path(2)).rows == ((1,),)
    assert nmatrix(path(3)).rows == ((1, 0), (2, 1))


def test_strip_drops_labels(prism):
    nm = nmatrix(prism)
    assert nm.labels is not None
    un = strip(nm)
    assert un.labels is None and un.rows == nm.rows


def test_infer_v_e(prism):
    ve = infer_v_e(strip(nmatrix(prism)))
    assert ve[8] == (6, 9)
    assert ve[0] == (2, 1)
    assert infer_v_e(strip(nmatrix(path(2)))) == ((2, 1),)
    assert infer_v_e(strip(nmatrix(path(3)))) == ((2, 1), (3, 2))


def test_infer_v_e_rejects_bad_matrices():
    with pytest.raises(InvalidMatrixError):
        infer_v_e(NMatrix(((1, 0), (0, 1)), None))  # two K2 rows
    with pytest.raises(InvalidMatrixError):
        infer_v_e(NMatrix(((1, 1), (1, 1)), None))  # mutual containment
    with pytest.raises(InvalidMatrixError):
        infer_v_e(NMatrix(((1, 0), (2, 2)), None))  # bad diagonal
    with pytest.raises(InvalidMatrixError):
        infer_v_e(NMatrix(((1, 0, 0), (1, 1, 0)), None))  # not square


def test_elp_prism_matches_published_diagram(prism):
    elp = elp_from_nmatrix(nmatrix(prism))
    assert elp.size == 9
    assert elp.ranks == (2, 3, 3, 3, 4, 4, 4, 5, 6)
    assert len(elp.covers) == 13
    assert sorted(lab for _j, _i, lab in elp.covers) == \
        [1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 4, 6]
    # the unique top cover edge carries the multiplicity 6
    tops = [c for c in elp.covers if c[1] == 8]
    assert tops == [(7, 8, 6)]
    # the C4 node (rank 4, row 6) covers only the P3 node, with label 4
    into_c4 = [c for c in elp.covers if c[1] == 6]
    assert into_c4 == [(2, 6, 4)]


def test_elp_p3():
    elp = elp_from_nmatrix(nmatrix(path(3)))
    assert elp.covers == ((0, 1, 2),)
    elp_k2 = elp_from_nmatrix(nmatrix(path(2)))
    assert elp_k2.size == 1 and elp_k2.covers == ()


def test_roundtrip_entrywise(corpus6):
    for g in corpus6:
        if g.e == 0:
            continue
        nm = strip(nmatrix(g))
        assert nmatrix_from_elp(elp_from_nmatrix(nm)).rows == nm.rows


def test_child_nmatrices(prism):
    kids = child_nmatrices(strip(nmatrix(prism)))
    assert len(kids) == 1 and kids[0][1] == 6
    lam8 = induced_subgraph(prism, [0, 1, 2, 3, 4])
    want = canonical_nmatrix(strip(nmatrix(lam8))).rows
    assert kids[0][0].rows == want

    kids = child_nmatrices(strip(nmatrix(path(3))))
    assert len(kids) == 1 and kids[0][1] == 2 and kids[0][0].rows == ((1,),)

    assert child_nmatrices(strip(nmatrix(path(2)))) == []


def test_child_nmatrices_match_direct(corpus6):
    for g in corpus6:
        if g.e == 0:
            continue
        got = {k.rows: m for k, m in child_nmatrices(strip(nmatrix(g)))}
        want = {}
        for u in range(g.n):
            card = induced_subgraph(g, set(range(g.n)) - {u})
            if card.e == 0:
                continue
            key = canonical_nmatrix(strip(nmatrix(card))).rows
            want[key] = want.get(key, 0) + 1
        assert got == want, g


def test_count_empty_induced(prism):
    assert count_empty_induced(strip(nmatrix(path(3))), 2) == 1
    assert count_empty_induced(strip(nmatrix(complete(3))), 2) == 0
    assert count_empty_induced(strip(nmatrix(prism)), 2) == 6
    with pytest.raises(DomainError):
        count_empty_induced(strip(nmatrix(complete(3))), 4)


def test_count_empty_matches_direct(corpus6):
    for g in corpus6:
        if g.e == 0:
            continue
        nm = strip(nmatrix(g))
        for r in range(2, g.n + 1):
            assert count_empty_induced(nm, r) == count_induced(g, empty_graph(r))


def test_elp_automorphisms_trivial(prism):
    assert elp_automorphisms(elp_from_nmatrix(nmatrix(prism))) == []
    assert elp_automorphisms(elp_from_nmatrix(nmatrix(path(2)))) == []


def test_elp_automorphisms_find_planted_symmetry():
    # a hand-built labelled poset with two interchangeable middle nodes
    elp = Elp((2, 3, 3, 4), ((0, 1, 1), (0, 2, 1), (1, 3, 2), (2, 3, 2)))
    auts = elp_automorphisms(elp)
    assert (0, 2, 1, 3) in auts


def test_canonical_nmatrix_properties(prism, corpus6):
    nm = strip(nmatrix(prism))
    cn = canonical_nmatrix(nm)
    assert canonical_nmatrix(cn).rows == cn.rows  # idempotent
    # invariant under admissible input reorder: swap two same-rank rows
    perm = [0, 2, 1, 3, 4, 5, 6, 7, 8]
    rows = tuple(tuple(nm.rows[perm[i]][perm[j]] for j in range(9)) for i in range(9))
    assert canonical_nmatrix(NMatrix(rows, None)).rows == cn.rows
    # distinct graphs yield distinct canonical forms at this scale
    forms = set()
    total = 0
    for g in corpus6:
        if g.e == 0:
            continue
        forms.add(canonical_nmatrix(strip(nmatrix(g))).rows)
        total += 1
    assert len(forms) == total == 202


def test_json_roundtrip(prism):
    nm = nmatrix(prism)
    d = nmatrix_to_json(nm)
    assert d["size"] == 9 and d["ve"][8] == [6, 9]
    back = nmatrix_from_json(d)
    assert back.rows == nm.rows
    assert [c.code for c in back.labels.classes] == \
        [c.code for c in nm.labels.classes]
    elp = elp_from_nmatrix(nm)
    e = elp_to_json(elp)
    assert elp_from_json(e) == elp
    with pytest.raises(InvalidMatrixError):
        nmatrix_from_json({"rows": "nope"})
