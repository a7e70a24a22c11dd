"""Finite simple graphs: construction, graph6 I/O, induced subgraphs, blocks.

Vertices are always 0..n-1.  All values are immutable after construction and
every operation here is pure, so graphs can be shared freely across threads
and worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import DomainError, Graph6ParseError

__all__ = [
    "Graph",
    "graph",
    "empty_graph",
    "complete",
    "cycle",
    "path",
    "elementary_graph",
    "disjoint_union",
    "parse_graph6",
    "write_graph6",
    "induced_subgraph",
    "vertex_deck",
    "components",
    "is_connected",
    "blocks",
    "adjacency_masks",
    "all_graphs",
]


@dataclass(frozen=True)
class Graph:
    """A labelled simple graph: vertex count plus a frozenset of (u, v) pairs, u < v."""

    n: int
    edges: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise DomainError("vertex count must be nonnegative")
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.n):
                raise DomainError(f"edge {e} out of range for n={self.n}")

    @property
    def e(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


def graph(n: int, edges: Iterable = ()) -> Graph:
    """Build a Graph from any iterable of vertex pairs, normalising orientation."""
    norm = set()
    for u, v in edges:
        if u == v:
            raise DomainError(f"loop at vertex {u}")
        norm.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(norm))


def empty_graph(n: int) -> Graph:
    return Graph(n, frozenset())


def complete(n: int) -> Graph:
    return graph(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise DomainError("cycle needs at least 3 vertices")
    return graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return graph(n, [(i, i + 1) for i in range(n - 1)])


def disjoint_union(*gs: Graph) -> Graph:
    n = 0
    edges = []
    for g in gs:
        edges.extend((u + n, v + n) for u, v in g.edges)
        n += g.n
    return graph(n, edges)


def elementary_graph(parts: Sequence[int]) -> Graph:
    """Disjoint union of cycles and single edges: part 2 gives K2, part r >= 3 gives C_r."""
    pieces = []
    for p in parts:
        if p == 2:
            pieces.append(path(2))
        elif p >= 3:
            pieces.append(cycle(p))
        else:
            raise DomainError(f"elementary part {p} < 2")
    return disjoint_union(*pieces) if pieces else empty_graph(0)


def adjacency_masks(g: Graph) -> list:
    """Per-vertex neighbour bitmasks."""
    masks = [0] * g.n
    for u, v in g.edges:
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return masks


# ---------------------------------------------------------------------------
# graph6 text format
#
# Header byte encodes n (offset 63, n <= 62 here).  The upper triangle is
# read in column order -- for j in 1..n-1, for i in 0..j-1 -- packed into
# 6-bit groups, most significant bit first, zero-padded, each group offset
# by 63.
# ---------------------------------------------------------------------------

_G6_PREFIX = ">>graph6<<"


def parse_graph6(text: str) -> Graph:
    """Decode one line of standard graph6 (n <= 62)."""
    s = text.strip()
    if s.startswith(_G6_PREFIX):
        s = s[len(_G6_PREFIX):]
    if not s:
        raise Graph6ParseError("empty graph6 string", 0)
    head = ord(s[0])
    if head == 126:
        raise Graph6ParseError("graphs with more than 62 vertices are not supported", 0)
    if not (63 <= head <= 125):
        raise Graph6ParseError(f"bad header byte {head}", 0)
    n = head - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[1:]
    if len(body) < nbytes:
        raise Graph6ParseError("truncated bit vector", len(s))
    if len(body) > nbytes:
        raise Graph6ParseError("trailing garbage after bit vector", 1 + nbytes)
    bits = []
    for k, ch in enumerate(body):
        val = ord(ch) - 63
        if not (0 <= val <= 63):
            raise Graph6ParseError(f"bad data byte {ord(ch)}", 1 + k)
        bits.extend((val >> (5 - b)) & 1 for b in range(6))
    if any(bits[nbits:]):
        raise Graph6ParseError("nonzero padding bits", 1 + (nbits // 6))
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return graph(n, edges)


def write_graph6(g: Graph) -> str:
    """Encode a graph as canonical graph6 text (zero padding, no header prefix)."""
    if g.n > 62:
        raise DomainError(f"graph6 output limited to 62 vertices, got {g.n}")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if (i, j) in g.edges else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


# ---------------------------------------------------------------------------
# Subgraph extraction and decomposition
# ---------------------------------------------------------------------------

def induced_subgraph(g: Graph, s: Iterable) -> Graph:
    """Subgraph induced on vertex set `s`, relabelled 0..|s|-1 in sorted order."""
    verts = sorted(set(s))
    for v in verts:
        if not (0 <= v < g.n):
            raise DomainError(f"vertex {v} out of range for n={g.n}")
    pos = {v: i for i, v in enumerate(verts)}
    edges = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    return graph(len(verts), edges)


def vertex_deck(g: Graph) -> list:
    """The multiset {G - v} of single-vertex-deleted subgraphs."""
    if g.n == 0:
        raise DomainError("the null graph has no vertex deck")
    full = set(range(g.n))
    return [induced_subgraph(g, full - {v}) for v in range(g.n)]


def components(g: Graph) -> list:
    """Connected components as standalone graphs, ordered by smallest vertex."""
    masks = adjacency_masks(g)
    seen = [False] * g.n
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        stack = [root]
        seen[root] = True
        verts = []
        while stack:
            v = stack.pop()
            verts.append(v)
            m = masks[v]
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(induced_subgraph(g, verts))
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def blocks(g: Graph) -> list:
    """Biconnected components (including bridges) as standalone graphs.

    Standard Hopcroft-Tarjan lowpoint computation over an edge stack.
    Isolated vertices yield no block.
    """
    adj = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    disc = [0] * g.n
    low = [0] * g.n
    timer = [1]
    estack = []
    out = []

    def emit(upto):
        comp = []
        while estack:
            e = estack.pop()
            comp.append(e)
            if e == upto:
                break
        verts = sorted({x for e in comp for x in e})
        out.append(induced_subgraph(graph(g.n, comp), verts))

    def dfs(root):
        stack = [(root, -1, iter(adj[root]))]
        disc[root] = low[root] = timer[0]
        timer[0] += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for u in it:
                if u == parent:
                    continue
                if disc[u] == 0:
                    estack.append((min(v, u), max(v, u)))
                    disc[u] = low[u] = timer[0]
                    timer[0] += 1
                    stack.append((u, v, iter(adj[u])))
                    advanced = True
                    break
                if disc[u] < disc[v]:
                    estack.append((min(v, u), max(v, u)))
                    low[v] = min(low[v], disc[u])
            if advanced:
                continue
            stack.pop()
            if stack:
                pv = stack[-1][0]
                low[pv] = min(low[pv], low[v])
                if low[v] >= disc[pv]:
                    emit((min(pv, v), max(pv, v)))

    for r in range(g.n):
        if disc[r] == 0 and adj[r]:
            dfs(r)
    out.sort(key=lambda b: (b.n, b.sorted_edges()))
    return out


def all_graphs(max_n: int, min_edges: int = 0) -> list:
    """All isomorphism types with 1..max_n vertices, via vertex augmentation.

    Deduplication uses canonical codes from reconkit.isotype; results are
    canonical representatives sorted by (n, e, code).
    """
    from .isotype import canonical_code, canonical_rep

    levels = {1: [empty_graph(1)]}
    for n in range(2, max_n + 1):
        seen = {}
        for parent in levels[n - 1]:
            for nbrs in range(1 << (n - 1)):
                extra = [(i, n - 1) for i in range(n - 1) if (nbrs >> i) & 1]
                cand = graph(n, list(parent.edges) + extra)
                code = canonical_code(cand)
                if code not in seen:
                    seen[code] = canonical_rep(cand)
        levels[n] = [g for _, g in sorted(seen.items())]
    out = []
    for n in range(1, max_n + 1):
        out.extend(g for g in levels[n] if g.e >= min_edges)
    return out
