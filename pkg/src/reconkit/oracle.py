"""Brute-force oracles for every invariant the reconstruction pipelines produce.

Everything here enumerates explicitly (vertex subsets, edge subsets, tuples of
subgraphs) and shares no code with the pipelines it validates.  That makes the
oracles slow but trustworthy: they are the ground truth for all tests, and the
exhaustive sweeps pit each pipeline against them.

Conventions:
  * a cycle of length 2 is a single edge (K2), so `psi(g, 2) == e(g)`;
  * `ham(g)` is `psi(g, n)`, which for K2 equals 1 under that convention;
  * the rank polynomial ranges over edge subsets, with the vertex set of a
    subgraph taken to be its edge endpoints; the empty subgraph contributes
    the constant 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import DomainError
from .graphcore import Graph, adjacency_masks
from .isotype import canonical_code

__all__ = [
    "Polynomial",
    "psi_oracle",
    "tr_oracle",
    "ham_oracle",
    "uni_oracle",
    "charpoly_oracle",
    "rankpoly_oracle",
    "elementary_count_oracle",
    "cover_count_oracle",
    "p_oracle",
    "c_oracle",
    "con_oracle",
    "signed_c_oracle",
    "signed_exact_cover_oracle",
    "kedge_connected_oracle",
    "lcompo_oracle",
    "laplacian_tree_count",
]

RANKPOLY_EDGE_LIMIT = 16


@dataclass(frozen=True)
class Polynomial:
    """Characteristic polynomial sum(c_i * lambda^(n-i)), stored as c_0..c_n."""

    coeffs: tuple

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def derivative(self) -> "Polynomial":
        n = self.degree
        return Polynomial(tuple(c * (n - i) for i, c in enumerate(self.coeffs[:-1])))

    def add(self, other: "Polynomial") -> "Polynomial":
        assert self.degree == other.degree
        return Polynomial(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __str__(self):
        n = self.degree
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            p = n - i
            lam = "" if p == 0 else ("x" if p == 1 else f"x^{p}")
            terms.append(f"{c:+d}{lam}")
        return " ".join(terms) or "0"


# ---------------------------------------------------------------------------
# Cycle and elementary-subgraph enumeration
# ---------------------------------------------------------------------------

def _edge_index(g: Graph):
    edges = g.sorted_edges()
    return edges, {e: i for i, e in enumerate(edges)}


@lru_cache(maxsize=None)
def _cycles(g: Graph, length: int) -> tuple:
    """All cycles of a given length >= 3 as (vertex mask, edge mask) pairs."""
    masks = adjacency_masks(g)
    edges, eidx = _edge_index(g)
    found = []

    def extend(start, v, vmask, emask, depth, second):
        m = masks[v]
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            if u == start and depth == length:
                if second < v:
                    found.append((vmask, emask | (1 << eidx[(min(v, u), max(v, u))])))
                continue
            if u <= start or (vmask >> u) & 1 or depth >= length:
                continue
            extend(start, u, vmask | (1 << u), emask | (1 << eidx[(min(v, u), max(v, u))]),
                   depth + 1, u if depth == 1 else second)

    for s in range(g.n):
        extend(s, s, 1 << s, 0, 1, g.n)
    return tuple(found)


def psi_oracle(g: Graph, i: int) -> int:
    """Number of cycles of length i; psi_2 counts edges by the C2 = K2 convention."""
    if i < 2:
        raise DomainError(f"cycle length {i} < 2")
    if i == 2:
        return g.e
    if i > g.n:
        return 0
    return len(_cycles(g, i))


def ham_oracle(g: Graph) -> int:
    return psi_oracle(g, g.n)


def _endpoint_mask(subset) -> int:
    m = 0
    for u, v in subset:
        m |= (1 << u) | (1 << v)
    return m


def _connected_mask(edges_subset, vmask) -> bool:
    """Whether the subgraph on `edges_subset` connects every vertex of vmask."""
    if vmask == 0:
        return True
    parent = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    m = vmask
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        parent[v] = v
    for u, v in edges_subset:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    roots = {find(v) for v in parent}
    return len(roots) == 1


def tr_oracle(g: Graph) -> int:
    """Spanning trees, by enumerating (n-1)-edge subsets."""
    if g.n == 0:
        return 0
    if g.n == 1:
        return 1
    full = (1 << g.n) - 1
    count = 0
    for subset in combinations(g.sorted_edges(), g.n - 1):
        if _endpoint_mask(subset) == full and _connected_mask(subset, full):
            count += 1
    return count


def uni_oracle(g: Graph, r: int) -> int:
    """Spanning unicyclic subgraphs whose unique cycle has length r."""
    if not (3 <= r <= g.n):
        raise DomainError(f"cycle length {r} outside [3, {g.n}]")
    full = (1 << g.n) - 1
    count = 0
    for subset in combinations(g.sorted_edges(), g.n):
        if _endpoint_mask(subset) != full or not _connected_mask(subset, full):
            continue
        # connected, n vertices, n edges: unicyclic; the 2-core is the cycle
        deg = {}
        alive = set(subset)
        for u, v in subset:
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
        changed = True
        while changed:
            changed = False
            for e in list(alive):
                u, v = e
                if deg[u] == 1 or deg[v] == 1:
                    alive.discard(e)
                    deg[u] -= 1
                    deg[v] -= 1
                    changed = True
        if len(alive) == r:
            count += 1
    return count


@lru_cache(maxsize=None)
def _elementary_by_order(g: Graph) -> dict:
    """order -> tuples (vertex mask, edge mask, sachs weight, profile).

    One entry per elementary subgraph: a set of vertex-disjoint single edges
    and cycles.  The weight is (-1)^rank * 2^corank and the profile is the
    non-increasing tuple of component orders (2 for K2).
    """
    masks = adjacency_masks(g)
    _edges, eidx = _edge_index(g)
    out = {}

    def record(vmask, emask, weight, profile):
        order = bin(vmask).count("1")
        out.setdefault(order, []).append(
            (vmask, emask, weight, tuple(sorted(profile, reverse=True))))

    def cycles_from(start, avail):
        """Cycles with minimum vertex `start` inside avail."""
        res = []

        def walk(v, vmask, emask, depth, second):
            m = masks[v] & avail
            while m:
                u = (m & -m).bit_length() - 1
                m &= m - 1
                eb = 1 << eidx[(min(v, u), max(v, u))]
                if u == start and depth >= 3:
                    if second < v:
                        res.append((vmask, emask | eb, depth))
                    continue
                if u <= start or (vmask >> u) & 1:
                    continue
                walk(u, vmask | (1 << u), emask | eb, depth + 1,
                     u if depth == 1 else second)

        walk(start, 1 << start, 0, 1, g.n)
        return res

    def rec(avail, vmask, emask, weight, profile):
        # each elementary subgraph reaches `avail == 0` along exactly one path:
        # vertices are decided in increasing order and every component is
        # anchored at its minimum vertex
        if not avail:
            record(vmask, emask, weight, profile)
            return
        v = (avail & -avail).bit_length() - 1
        rest = avail & ~(1 << v)
        # v not part of the subgraph
        rec(rest, vmask, emask, weight, profile)
        # v matched by a single edge
        m = masks[v] & rest
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            eb = 1 << eidx[(min(v, u), max(v, u))]
            rec(rest & ~(1 << u), vmask | (1 << v) | (1 << u), emask | eb,
                -weight, profile + (2,))
        # v on a cycle where it is the minimum vertex
        for cyc_mask, cyc_emask, length in cycles_from(v, avail):
            w = weight * 2 * (-1 if length % 2 == 0 else 1)  # (-1)^(length-1) * 2
            rec(avail & ~cyc_mask, vmask | cyc_mask, emask | cyc_emask, w,
                profile + (length,))

    rec((1 << g.n) - 1, 0, 0, 1, ())
    return {k: tuple(v) for k, v in out.items()}


def charpoly_oracle(g: Graph) -> Polynomial:
    """Characteristic polynomial via the elementary-subgraph coefficient expansion."""
    acc = [0] * (g.n + 1)
    for order, items in _elementary_by_order(g).items():
        for _vm, _em, w, _prof in items:
            acc[order] += w
    coeffs = [acc[i] if i % 2 == 0 else -acc[i] for i in range(g.n + 1)]
    coeffs[0] = 1
    return Polynomial(tuple(coeffs))


def elementary_count_oracle(g: Graph, parts) -> int:
    """Subgraphs isomorphic to the elementary graph with the given part profile."""
    profile = tuple(sorted(parts, reverse=True))
    if any(p < 2 for p in profile):
        raise DomainError("elementary parts must be >= 2")
    order = sum(profile)
    return sum(1 for _vm, _em, _w, prof in _elementary_by_order(g).get(order, ())
               if prof == profile)


def rankpoly_oracle(g: Graph) -> dict:
    """(rank, corank) -> count over all edge subsets, empty subgraph included."""
    if g.e > RANKPOLY_EDGE_LIMIT:
        raise DomainError(f"rank polynomial enumeration limited to {RANKPOLY_EDGE_LIMIT} edges")
    edges = g.sorted_edges()
    out = {(0, 0): 1}
    for m in range(1, g.e + 1):
        for subset in combinations(edges, m):
            verts = {x for e in subset for x in e}
            parent = {v: v for v in verts}

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            comp = len(verts)
            for u, v in subset:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    comp -= 1
            r = len(verts) - comp
            s = m - len(verts) + comp
            out[(r, s)] = out.get((r, s), 0) + 1
    return out


# ---------------------------------------------------------------------------
# Tuple enumeration: covers and cycle covers
# ---------------------------------------------------------------------------

def _copies(h: Graph, f: Graph) -> list:
    """All subgraphs of h isomorphic to f, as (edge mask, vertex mask) pairs."""
    edges, _ = _edge_index(h)
    code = canonical_code(f)
    res = []
    for subset in combinations(range(len(edges)), f.e):
        chosen = [edges[i] for i in subset]
        verts = sorted({x for e in chosen for x in e})
        if len(verts) != f.n:
            continue
        pos = {v: i for i, v in enumerate(verts)}
        sub = Graph(len(verts), frozenset((pos[u], pos[v]) for u, v in chosen))
        if canonical_code(sub) == code:
            emask = 0
            for i in subset:
                emask |= 1 << i
            res.append((emask, _endpoint_mask(chosen)))
    return res


def cover_count_oracle(S, h: Graph) -> int:
    """Number of tuples (X_1..X_k), X_i a subgraph of h isomorphic to S[i], with union h."""
    for f in S:
        if any(f.degree(v) == 0 for v in range(f.n)):
            raise DomainError("cover members may not have isolated vertices")
    full_e = (1 << h.e) - 1
    full_v = (1 << h.n) - 1
    states = {(0, 0): 1}
    for f in S:
        copies = _copies(h, f)
        nxt = {}
        for (em, vm), cnt in states.items():
            for ce, cv in copies:
                key = (em | ce, vm | cv)
                nxt[key] = nxt.get(key, 0) + cnt
        states = nxt
        if not states:
            return 0
    return states.get((full_e, full_v), 0)


def p_oracle(g: Graph, seq) -> int:
    """Product of cycle counts for the sequence (number of cycle tuples)."""
    total = 1
    for a in seq:
        total *= psi_oracle(g, a)
    return total


def _cycle_items(g: Graph, a: int) -> list:
    """(edge mask, vertex mask) items for cycles of length a (edges when a == 2)."""
    if a == 2:
        edges, eidx = _edge_index(g)
        return [(1 << eidx[e], _endpoint_mask([e])) for e in edges]
    return [(em, vm) for vm, em in _cycles(g, a)]


def c_oracle(g: Graph, seq) -> int:
    """Cycle tuples whose vertex sets jointly cover V(g)."""
    full_v = (1 << g.n) - 1
    states = {0: 1}
    for a in seq:
        items = _cycle_items(g, a)
        nxt = {}
        for vm, cnt in states.items():
            for _em, cv in items:
                key = vm | cv
                nxt[key] = nxt.get(key, 0) + cnt
        states = nxt
        if not states:
            return 0
    return states.get(full_v, 0)


def con_oracle(g: Graph, seq) -> int:
    """Cycle tuples spanning V(g) whose union is connected."""
    edges, _ = _edge_index(g)
    states = {0: 1}
    for a in seq:
        items = _cycle_items(g, a)
        nxt = {}
        for em, cnt in states.items():
            for ce, _cv in items:
                key = em | ce
                nxt[key] = nxt.get(key, 0) + cnt
        states = nxt
        if not states:
            return 0
    full_v = (1 << g.n) - 1
    total = 0
    for em, cnt in states.items():
        subset = [edges[i] for i in range(len(edges)) if (em >> i) & 1]
        if _endpoint_mask(subset) == full_v and _connected_mask(subset, full_v):
            total += cnt
    return total


def signed_c_oracle(g: Graph, seq) -> int:
    """Spanning tuples of elementary subgraphs, weighted by (-1)^rank 2^corank.

    Entry a_j of the sequence ranges over *all* elementary subgraphs with a_j
    vertices, not just cycles; this is the polynomial-deck flavour of the
    cycle-cover sum.
    """
    by_order = _elementary_by_order(g)
    full_v = (1 << g.n) - 1
    states = {0: 1}
    for a in seq:
        items = [(vm, w) for vm, _em, w, _prof in by_order.get(a, ())]
        nxt = {}
        for vm, val in states.items():
            for cv, w in items:
                key = vm | cv
                nxt[key] = nxt.get(key, 0) + val * w
        states = nxt
        if not states:
            return 0
    return states.get(full_v, 0)


def signed_exact_cover_oracle(g: Graph, seq) -> int:
    """Sachs-weighted tuples of elementary subgraphs whose union is exactly g.

    Unlike signed_c_oracle, the union here must reproduce g's edge set, not
    just cover its vertices.  These are the transition coefficients of the
    partition-refinement recursion, evaluated on concrete elementary hosts.
    """
    by_order = _elementary_by_order(g)
    full_e = (1 << g.e) - 1
    full_v = (1 << g.n) - 1
    states = {(0, 0): 1}
    for a in seq:
        items = [(vm, em, w) for vm, em, w, _prof in by_order.get(a, ())]
        nxt = {}
        for (vm, em), val in states.items():
            for cv, ce, w in items:
                key = (vm | cv, em | ce)
                nxt[key] = nxt.get(key, 0) + val * w
        states = nxt
        if not states:
            return 0
    return states.get((full_v, full_e), 0)


def kedge_connected_oracle(g: Graph, k: int) -> int:
    """Connected spanning subgraphs with exactly k edges."""
    full = (1 << g.n) - 1
    count = 0
    for subset in combinations(g.sorted_edges(), k):
        if _endpoint_mask(subset) == full and _connected_mask(subset, full):
            count += 1
    return count


def lcompo_oracle(g: Graph, spec) -> int:
    """Spanning subgraphs whose component (order, size) multiset equals `spec`."""
    spec = tuple(sorted(spec, reverse=True))
    if sum(n for n, _m in spec) != g.n:
        raise DomainError("component orders must sum to v(g)")
    total_edges = sum(m for _n, m in spec)
    full = (1 << g.n) - 1
    count = 0
    for subset in combinations(g.sorted_edges(), total_edges):
        if _endpoint_mask(subset) != full:
            continue
        profile = _component_profile(subset, g.n)
        if profile == spec:
            count += 1
    return count


def _component_profile(edges_subset, n) -> tuple:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges_subset:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    verts = {}
    sizes = {}
    for u, v in edges_subset:
        for x in (u, v):
            r = find(x)
            verts.setdefault(r, set()).add(x)
        r = find(u)
        sizes[r] = sizes.get(r, 0) + 1
    return tuple(sorted(((len(verts[r]), sizes[r]) for r in verts), reverse=True))


def laplacian_tree_count(g: Graph) -> int:
    """Spanning trees via an exact integer determinant of the reduced Laplacian."""
    if g.n <= 1:
        return 1 if g.n == 1 else 0
    n = g.n - 1
    lap = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        for x in (u, v):
            if x < n:
                lap[x][x] += 1
        if u < n and v < n:
            lap[u][v] -= 1
            lap[v][u] -= 1
    # Bareiss fraction-free elimination
    m = [row[:] for row in lap]
    prev = 1
    sign = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
