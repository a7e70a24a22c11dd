"""The Lambda-deck, the N-matrix and the edge-labelled poset of induced subgraphs.

Lambda(G) is the set of isomorphism types of induced subgraphs of G with at
least one edge, ordered by non-decreasing vertex count with ties broken by
(edge count, canonical code).  N[i][j] counts induced copies of type j inside
type i.  The edge-labelled poset (ELP) is the Hasse diagram of Lambda(G) under
the induced-subgraph order, each cover edge labelled with its multiplicity;
matrix and poset determine each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from math import comb

from .combi import exact_div
from .errors import DomainError, InvalidMatrixError
from .graphcore import Graph, parse_graph6, write_graph6
from .isotype import IsoClass, induced_type_table

__all__ = [
    "LambdaDeck",
    "NMatrix",
    "Elp",
    "lambda_deck",
    "nmatrix",
    "strip",
    "infer_v_e",
    "elp_from_nmatrix",
    "nmatrix_from_elp",
    "child_nmatrices",
    "count_empty_induced",
    "elp_automorphisms",
    "canonical_nmatrix",
    "nmatrix_to_json",
    "nmatrix_from_json",
    "elp_to_json",
    "elp_from_json",
]


@dataclass(frozen=True)
class LambdaDeck:
    """Ordered isomorphism types Lambda_1..Lambda_I of nonempty induced subgraphs."""

    classes: tuple

    def __len__(self):
        return len(self.classes)


@dataclass(frozen=True)
class NMatrix:
    """Incidence matrix of induced-subgraph multiplicities; labels optional."""

    rows: tuple
    labels: LambdaDeck | None = None

    @property
    def size(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i][j]


@dataclass(frozen=True)
class Elp:
    """Edge-labelled ranked poset: per-node ranks plus (lower, upper, label) covers."""

    ranks: tuple
    covers: tuple

    @property
    def size(self) -> int:
        return len(self.ranks)


def lambda_deck(g: Graph) -> LambdaDeck:
    """All induced-subgraph types of g with e >= 1, in the canonical row order."""
    if g.e == 0:
        raise DomainError("graph has no nonempty induced subgraphs")
    seen = {}
    for k in range(2, g.n + 1):
        for code, (_cnt, rep) in induced_type_table(g, k).items():
            if rep.e >= 1 and code not in seen:
                seen[code] = IsoClass(code, rep)
    classes = sorted(seen.values(), key=IsoClass.sort_key)
    return LambdaDeck(tuple(classes))


def nmatrix(g: Graph) -> NMatrix:
    """The labelled N-matrix of g."""
    deck = lambda_deck(g)
    rows = []
    for ci in deck.classes:
        row = []
        for cj in deck.classes:
            if cj.v > ci.v:
                row.append(0)
            else:
                row.append(induced_type_table(ci.rep, cj.v).get(cj.code, (0, None))[0])
        rows.append(tuple(row))
    return NMatrix(tuple(rows), deck)


def strip(nm: NMatrix) -> NMatrix:
    """Forget the indexing graphs; entries are unchanged."""
    return NMatrix(nm.rows, None)


def _validate_shape(nm: NMatrix):
    size = nm.size
    if size == 0:
        raise InvalidMatrixError("empty matrix")
    for row in nm.rows:
        if len(row) != size:
            raise InvalidMatrixError("matrix is not square")
        if any(x < 0 for x in row):
            raise InvalidMatrixError("negative entry")
    for i in range(size):
        if nm.rows[i][i] != 1:
            raise InvalidMatrixError(f"diagonal entry at {i} is not 1")
    for i in range(size):
        for j in range(size):
            if i != j and nm.rows[i][j] and nm.rows[j][i]:
                raise InvalidMatrixError(f"rows {i} and {j} contain each other")


def infer_v_e(nm: NMatrix) -> tuple:
    """Recover (v, e) for every row of a valid unlabelled N-matrix.

    e comes from the column of the unique single-nonzero row (the K2 row);
    v is the poset rank with the K2 row pinned at 2.
    """
    _validate_shape(nm)
    size = nm.size
    rows = nm.rows
    singles = [i for i in range(size)
               if sum(1 for x in rows[i] if x) == 1]
    if len(singles) != 1:
        raise InvalidMatrixError(f"expected exactly one K2 row, found {len(singles)}")
    k2 = singles[0]
    for i in range(size):
        if rows[i][k2] == 0:
            raise InvalidMatrixError(f"row {i} contains no K2")
    below = [tuple(j for j in range(size) if rows[i][j]) for i in range(size)]
    for i in range(size):
        for j in below[i]:
            for k in below[j]:
                if rows[i][k] == 0:
                    raise InvalidMatrixError(
                        f"containment not transitive at rows {i},{j},{k}")
    # rank = 2 + longest chain from the K2 row
    rank = [None] * size
    order = sorted(range(size), key=lambda i: len(below[i]))
    for i in order:
        preds = [j for j in below[i] if j != i]
        if not preds:
            rank[i] = 2
        else:
            if any(rank[j] is None for j in preds):
                raise InvalidMatrixError("containment relation is not acyclic")
            rank[i] = 1 + max(rank[j] for j in preds)
    for (j, i, _lab) in _covers(nm, below):
        if rank[i] != rank[j] + 1:
            raise InvalidMatrixError(
                f"no graded rank function: cover {j}->{i} spans ranks {rank[j]}->{rank[i]}")
    return tuple((rank[i], rows[i][k2]) for i in range(size))


def _covers(nm: NMatrix, below=None) -> list:
    rows = nm.rows
    size = nm.size
    if below is None:
        below = [tuple(j for j in range(size) if rows[i][j]) for i in range(size)]
    out = []
    for i in range(size):
        for j in below[i]:
            if j == i:
                continue
            if not any(k != i and k != j and rows[i][k] and rows[k][j]
                       for k in below[i]):
                out.append((j, i, rows[i][j]))
    return out


def _top_row(nm: NMatrix) -> int:
    tops = [i for i in range(nm.size) if all(nm.rows[i])]
    if len(tops) != 1:
        raise InvalidMatrixError(f"expected a unique maximal row, found {len(tops)}")
    return tops[0]


def elp_from_nmatrix(nm: NMatrix) -> Elp:
    """Hasse diagram of the containment order with multiplicity labels."""
    ve = infer_v_e(nm)
    covers = sorted(_covers(nm))
    return Elp(tuple(v for v, _e in ve), tuple(covers))


def nmatrix_from_elp(elp: Elp) -> NMatrix:
    """Rebuild the full matrix from cover labels, filling rank by rank.

    Non-cover entries come from the transitive counting identity: summing
    (i over k)(k over j) across the rank directly under i counts each copy
    of j exactly rank(i) - rank(j) times.
    """
    size = elp.size
    ranks = elp.ranks
    up = {}
    for (j, i, lab) in elp.covers:
        if ranks[i] != ranks[j] + 1:
            raise InvalidMatrixError("cover edge does not step one rank")
        up.setdefault(i, []).append((j, lab))
    rows = [[0] * size for _ in range(size)]
    for i in sorted(range(size), key=lambda x: ranks[x]):
        rows[i][i] = 1
        for (k, lab) in up.get(i, ()):
            rows[i][k] = lab
        for j in range(size):
            if j == i or ranks[j] >= ranks[i] - 1:
                continue
            total = sum(lab * rows[k][j] for (k, lab) in up.get(i, ()))
            rows[i][j] = exact_div(total, ranks[i] - ranks[j],
                                   f"poset fill at ({i},{j})")
    return NMatrix(tuple(tuple(r) for r in rows), None)


def child_nmatrices(nm: NMatrix) -> list:
    """The multiset {N(G-u) : e(G-u) > 0} recovered from N(G) alone.

    A row j is a vertex-deleted subgraph iff no row other than the top
    contains it; its matrix is the principal submatrix on the rows it
    contains, taken with multiplicity N[top][j].  Children with equal
    canonical matrices are merged and their multiplicities added.
    """
    infer_v_e(nm)
    top = _top_row(nm)
    rows = nm.rows
    size = nm.size
    merged = {}
    for j in range(size):
        if j == top:
            continue
        if any(rows[i][j] for i in range(size) if i != j and i != top):
            continue
        keep = [k for k in range(size) if rows[j][k]]
        sub = NMatrix(tuple(tuple(rows[a][b] for b in keep) for a in keep), None)
        key = canonical_nmatrix(sub).rows
        if key in merged:
            merged[key] = (merged[key][0], merged[key][1] + rows[top][j])
        else:
            merged[key] = (sub, rows[top][j])
    return [(canonical_nmatrix(sub), mult)
            for _key, (sub, mult) in sorted(merged.items())]


def count_empty_induced(nm: NMatrix, r: int) -> int:
    """Number of r-vertex independent sets in the graph behind the matrix."""
    ve = infer_v_e(nm)
    top = _top_row(nm)
    v_top = ve[top][0]
    if not (2 <= r <= v_top):
        raise DomainError(f"r={r} outside [2, {v_top}]")
    return comb(v_top, r) - sum(nm.rows[top][j] for j in range(nm.size)
                                if ve[j][0] == r)


# ---------------------------------------------------------------------------
# Canonical form and automorphisms of the unlabelled matrix
# ---------------------------------------------------------------------------

def _stable_cells(nm: NMatrix, ve) -> list:
    """Partition rows into cells closed under signature refinement.

    Signatures start from (v, e) and absorb, per round, the multiset of
    (cell, entry) pairs in both the row and the column of each node.  Cell
    ids are assigned in sorted signature order, so the final cell order is
    invariant under admissible permutations.
    """
    size = nm.size
    rows = nm.rows
    sig = {i: (ve[i][0], ve[i][1]) for i in range(size)}
    ids = _intern(sig, size)
    while True:
        nxt = {}
        for i in range(size):
            rowsig = sorted((ids[j], rows[i][j]) for j in range(size)
                            if j != i and rows[i][j])
            colsig = sorted((ids[j], rows[j][i]) for j in range(size)
                            if j != i and rows[j][i])
            nxt[i] = (ids[i], tuple(rowsig), tuple(colsig))
        new_ids = _intern(nxt, size)
        if len(set(new_ids.values())) == len(set(ids.values())):
            cells = {}
            for i in range(size):
                cells.setdefault(new_ids[i], []).append(i)
            return [sorted(cells[c]) for c in sorted(cells)]
        ids = new_ids


def _intern(sig: dict, size: int) -> dict:
    distinct = sorted(set(sig.values()))
    lookup = {s: k for k, s in enumerate(distinct)}
    return {i: lookup[sig[i]] for i in range(size)}


def canonical_nmatrix(nm: NMatrix) -> NMatrix:
    """Canonical representative under admissible simultaneous row/column orderings.

    Equal canonical matrices correspond exactly to isomorphic edge-labelled
    posets.  The ordering respects non-decreasing (v, e); remaining freedom is
    resolved by minimising the flattened matrix.
    """
    ve = infer_v_e(nm)
    cells = _stable_cells(nm, ve)
    rows = nm.rows
    best = [None]

    def flatten(perm):
        pos = {orig: p for p, orig in enumerate(perm)}
        return tuple(rows[perm[p]][perm[q]] for p in range(nm.size) for q in range(nm.size))

    def rec(cell_idx, prefix):
        if cell_idx == len(cells):
            flat = flatten(prefix)
            if best[0] is None or flat < best[0]:
                best[0] = flat
            return
        for order in permutations(cells[cell_idx]):
            rec(cell_idx + 1, prefix + list(order))

    rec(0, [])
    flat = best[0]
    size = nm.size
    out = tuple(tuple(flat[p * size:(p + 1) * size]) for p in range(size))
    return NMatrix(out, None)


def elp_automorphisms(elp: Elp) -> list:
    """All nontrivial label-preserving poset automorphisms.

    A bijection of nodes preserves the edge-labelled poset iff it preserves
    every entry of the reconstructed matrix, so the search runs on the matrix
    with refinement cells as candidate classes.
    """
    nm = nmatrix_from_elp(elp)
    ve = infer_v_e(nm)
    size = nm.size
    rows = nm.rows
    cells = _stable_cells(nm, ve)
    cell_of = {}
    for c, cell in enumerate(cells):
        for i in cell:
            cell_of[i] = c
    found = []
    sigma = [None] * size
    used = [False] * size

    def rec(i):
        if i == size:
            perm = tuple(sigma)
            if perm != tuple(range(size)):
                found.append(perm)
            return
        for t in cells[cell_of[i]]:
            if used[t]:
                continue
            ok = True
            for j in range(i):
                if rows[i][j] != rows[t][sigma[j]] or rows[j][i] != rows[sigma[j]][t]:
                    ok = False
                    break
            if ok:
                sigma[i] = t
                used[t] = True
                rec(i + 1)
                used[t] = False
                sigma[i] = None

    rec(0)
    return found


# ---------------------------------------------------------------------------
# JSON wire formats
# ---------------------------------------------------------------------------

def nmatrix_to_json(nm: NMatrix) -> dict:
    out = {
        "size": nm.size,
        "rows": [list(r) for r in nm.rows],
        "ve": [list(p) for p in infer_v_e(nm)],
    }
    if nm.labels is not None:
        out["labels"] = [write_graph6(c.rep) for c in nm.labels.classes]
    return out


def nmatrix_from_json(d: dict) -> NMatrix:
    try:
        rows = tuple(tuple(int(x) for x in r) for r in d["rows"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidMatrixError(f"bad matrix JSON: {exc}") from exc
    labels = None
    if "labels" in d:
        classes = tuple(IsoClass.of(parse_graph6(s)) for s in d["labels"])
        labels = LambdaDeck(classes)
    nm = NMatrix(rows, labels)
    infer_v_e(nm)
    return nm


def elp_to_json(elp: Elp) -> dict:
    return {
        "nodes": [{"rank": r} for r in elp.ranks],
        "covers": [{"from": j, "to": i, "label": lab} for (j, i, lab) in elp.covers],
    }


def elp_from_json(d: dict) -> Elp:
    try:
        ranks = tuple(int(nd["rank"]) for nd in d["nodes"])
        covers = tuple(sorted((int(c["from"]), int(c["to"]), int(c["label"]))
                              for c in d["covers"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidMatrixError(f"bad poset JSON: {exc}") from exc
    return Elp(ranks, covers)
