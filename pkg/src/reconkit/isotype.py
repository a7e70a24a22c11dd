"""Isomorphism certificates and subgraph counting.

The canonical code of a graph is the lexicographically smallest upper-triangle
adjacency bitstring over all vertex orderings, found by partition refinement
plus backtracking.  Two graphs are isomorphic iff their codes are equal, so
codes double as dictionary keys for all counting done in this package.

`count_subgraphs(g, f)` is the number of subgraphs of g isomorphic to f, where
a subgraph is identified with its edge set (its vertex set is the set of edge
endpoints); f must therefore have no isolated vertices.  `count_induced(g, f)`
counts vertex subsets of g inducing a copy of f.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import DomainError, InconsistentDeckError
from .graphcore import Graph, adjacency_masks, graph, induced_subgraph

__all__ = [
    "canonical_code",
    "canonical_rep",
    "canonical_perm",
    "are_isomorphic",
    "IsoClass",
    "count_induced",
    "count_subgraphs",
    "induced_type_table",
    "subgraph_type_table",
    "kelly_count",
]


def _refine(masks, cells):
    """Equitable refinement of an ordered partition by neighbour counts."""
    while True:
        cellmasks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            cellmasks.append(m)
        new_cells = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            groups = {}
            for v in cell:
                sig = tuple(bin(masks[v] & cm).count("1") for cm in cellmasks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
            for sig in sorted(groups):
                new_cells.append(groups[sig])
        cells = new_cells
        if not changed:
            return cells


def _bits_int(masks, perm, n):
    val = 0
    for i in range(n):
        mi = masks[perm[i]]
        for j in range(i + 1, n):
            val = (val << 1) | ((mi >> perm[j]) & 1)
    return val


@lru_cache(maxsize=None)
def _canon(g: Graph):
    """Return (minimal bitstring as int, witness permutation new->old)."""
    n = g.n
    if n == 0:
        return 0, ()
    masks = adjacency_masks(g)
    best = [None, None]

    def search(cells):
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            perm = tuple(c[0] for c in cells)
            val = _bits_int(masks, perm, n)
            if best[0] is None or val < best[0]:
                best[0], best[1] = val, perm
            return
        cell = cells[target]
        for v in sorted(cell):
            rest = [u for u in cell if u != v]
            split = cells[:target] + [[v], rest] + cells[target + 1:]
            search(_refine(masks, split))

    search(_refine(masks, [list(range(n))]))
    return best[0], best[1]


def canonical_perm(g: Graph) -> tuple:
    """Witness ordering: position k of the canonical form holds vertex perm[k]."""
    return _canon(g)[1]


def canonical_code(g: Graph) -> bytes:
    """Relabelling-invariant certificate: n byte plus packed minimal bitstring."""
    val, _ = _canon(g)
    nbits = g.n * (g.n - 1) // 2
    return bytes([g.n]) + val.to_bytes((nbits + 7) // 8 if nbits else 0, "big")


def canonical_rep(g: Graph) -> Graph:
    """The canonically relabelled form of g."""
    perm = canonical_perm(g)
    pos = {v: i for i, v in enumerate(perm)}
    return graph(g.n, [(pos[u], pos[v]) for u, v in g.edges])


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.e == h.e and canonical_code(g) == canonical_code(h)


@dataclass(frozen=True)
class IsoClass:
    """An isomorphism type: certificate, canonical representative, order and size."""

    code: bytes
    rep: Graph

    @property
    def v(self) -> int:
        return self.rep.n

    @property
    def e(self) -> int:
        return self.rep.e

    @staticmethod
    def of(g: Graph) -> "IsoClass":
        return IsoClass(canonical_code(g), canonical_rep(g))

    def sort_key(self):
        return (self.v, self.e, self.code)


@lru_cache(maxsize=None)
def induced_type_table(g: Graph, k: int) -> dict:
    """code -> (count, representative) over all k-vertex induced subgraphs of g."""
    table = {}
    for subset in combinations(range(g.n), k):
        sub = induced_subgraph(g, subset)
        code = canonical_code(sub)
        if code in table:
            table[code][0] += 1
        else:
            table[code] = [1, canonical_rep(sub)]
    return {c: (cnt, rep) for c, (cnt, rep) in table.items()}


def count_induced(g: Graph, f: Graph) -> int:
    """The number of induced subgraphs of g isomorphic to f."""
    if f.n > g.n:
        return 0
    return induced_type_table(g, f.n).get(canonical_code(f), (0, None))[0]


def _isolated_vertices(g: Graph) -> list:
    deg = [0] * g.n
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    return [v for v in range(g.n) if deg[v] == 0]


@lru_cache(maxsize=None)
def subgraph_type_table(g: Graph, m: int) -> dict:
    """code -> count over all m-edge subgraphs of g (vertex set = edge endpoints)."""
    table = {}
    edges = g.sorted_edges()
    for subset in combinations(edges, m):
        verts = sorted({x for e in subset for x in e})
        pos = {v: i for i, v in enumerate(verts)}
        sub = graph(len(verts), [(pos[u], pos[v]) for u, v in subset])
        code = canonical_code(sub)
        table[code] = table.get(code, 0) + 1
    return table


def count_subgraphs(g: Graph, f: Graph) -> int:
    """The number of subgraphs of g isomorphic to f; f may not have isolated vertices."""
    if _isolated_vertices(f):
        raise DomainError("count_subgraphs requires f without isolated vertices")
    if f.n > g.n or f.e > g.e:
        return 0
    return subgraph_type_table(g, f.e).get(canonical_code(f), 0)


def kelly_count(deck, f: Graph, n: int, induced: bool = False) -> int:
    """Count copies of f in the n-vertex graph behind a vertex deck.

    Valid for v(f) < n.  Exact division is a consistency certificate: a
    remainder proves the deck is not the vertex deck of any graph.
    """
    if f.n >= n:
        raise DomainError(f"kelly_count needs v(f) < n, got {f.n} >= {n}")
    counter = count_induced if induced else count_subgraphs
    total = sum(counter(card, f) for card in deck)
    q, r = divmod(total, n - f.n)
    if r:
        raise InconsistentDeckError(
            f"card counts for f sum to {total}, not divisible by {n - f.n}")
    return q
