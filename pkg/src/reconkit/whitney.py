"""Graph types as block multisets and the explicit subgraph expansion.

A 'type' is the multiset of isomorphism classes of a graph's blocks.  For a
type S0 = {F_1..F_k} of non-separable graphs, Kocay's counting identity

    prod <G, F_i>  =  sum over types S of  c(S0, S) <G, S>

relates the product of per-block counts to counts of whole types, where
c(S0, X) is the number of cover tuples of X by copies of the F_i and depends
only on the type of X.  Solving for <G, S0> and iterating yields an explicit
polynomial in non-separable subgraph counts; with Kelly-sourced counts on a
vertex deck this reconstructs every elementary spanning count and finally the
characteristic polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .combi import exact_div, partitions_min2
from .errors import ConsistencyError, DomainError, InconsistentDeckError
from .graphcore import Graph, blocks, cycle, graph, path
from .isotype import (canonical_code, canonical_rep, count_subgraphs,
                      kelly_count)
from .oracle import Polynomial, charpoly_oracle, cover_count_oracle

__all__ = [
    "block_type",
    "type_key",
    "CoverTable",
    "covers_of_type",
    "count_type",
    "count_type_chain",
    "charpoly_from_vertex_deck",
    "clear_cover_cache",
]


def block_type(g: Graph) -> tuple:
    """The multiset of block certificates of g, as a sorted code tuple."""
    if any(g.degree(v) == 0 for v in range(g.n)):
        raise DomainError("graph types are defined for graphs without isolated vertices")
    return tuple(sorted(canonical_code(b) for b in blocks(g)))


def type_key(members) -> tuple:
    """Type key of an explicit block multiset (no decomposition performed)."""
    return tuple(sorted(canonical_code(b) for b in members))


@dataclass(frozen=True)
class CoverTable:
    """All union graphs of copies of a root family, grouped into types.

    `members` maps each union's canonical code to (representative, cover
    count); `by_type` maps a type key to (cover count, block representatives).
    `self_cover` is c(S0, S0), defined even when no member of the root type
    fits under the vertex bound.
    """

    root: tuple
    vmax: int
    members: dict
    by_type: dict
    self_cover: int


_COVER_CACHE: dict = {}


def clear_cover_cache():
    _COVER_CACHE.clear()


def _glue(u: Graph, f: Graph, vmax: int):
    """All unions of u with one fresh copy of f, up to vmax vertices."""
    from itertools import combinations, permutations
    seen = set()
    fverts = list(range(f.n))
    for k in range(0, min(u.n, f.n) + 1):
        if u.n + f.n - k > vmax:
            continue
        for shared in combinations(fverts, k):
            shared_set = set(shared)
            free = [v for v in fverts if v not in shared_set]
            for target in permutations(range(u.n), k):
                mapping = dict(zip(shared, target))
                mapping.update({v: u.n + i for i, v in enumerate(free)})
                cand = graph(u.n + f.n - k,
                             list(u.edges) + [(mapping[a], mapping[b]) for a, b in f.edges])
                code = canonical_code(cand)
                if code not in seen:
                    seen.add(code)
                    yield code, canonical_rep(cand)


def _k2_cover_count(x: Graph, k: int) -> int:
    """c({k K2}, X): surjections of k tuple slots onto the e(X) edges."""
    e = x.e
    return sum((-1) ** j * comb(e, j) * (e - j) ** k for j in range(e + 1))


def covers_of_type(members, vmax: int) -> CoverTable:
    """Enumerate union graphs of one copy of each family member, with cover counts.

    The count c(S0, X) is recomputed per member and checked to be constant on
    each type; a violation raises ConsistencyError (it would contradict the
    type-grouping identity, not merely signal bad input).
    """
    fams = sorted(members, key=lambda b: (b.n, b.e, canonical_code(b)))
    root = type_key(fams)
    key = (root, vmax)
    if key in _COVER_CACHE:
        return _COVER_CACHE[key]
    all_k2 = all(canonical_code(b) == canonical_code(path(2)) for b in fams)
    partials = {canonical_code(graph(0, ())): graph(0, ())}
    for f in fams:
        nxt = {}
        for u in partials.values():
            for code, cand in _glue(u, f, vmax):
                nxt.setdefault(code, cand)
        partials = nxt
    member_table = {}
    by_type = {}
    for code, x in partials.items():
        if all_k2:
            c = _k2_cover_count(x, len(fams))
        else:
            c = cover_count_oracle(fams, x)
        member_table[code] = (x, c)
        tk = block_type(x)
        if tk in by_type:
            prev_c, _reps = by_type[tk]
            if prev_c != c:
                raise ConsistencyError(
                    f"cover count differs within a type: {prev_c} vs {c}")
        else:
            by_type[tk] = (c, tuple(blocks(x)))
    self_cover = by_type[root][0] if root in by_type else _type_symmetry(root)
    if root in by_type and by_type[root][0] != _type_symmetry(root):
        raise ConsistencyError("self cover count disagrees with block symmetry")
    table = CoverTable(root, vmax, member_table, by_type, self_cover)
    _COVER_CACHE[key] = table
    return table


def _type_symmetry(root: tuple) -> int:
    sym = 1
    for code in set(root):
        sym *= factorial(root.count(code))
    return sym


def count_type(g: Graph, members, _memo=None) -> int:
    """Number of subgraphs of g whose block multiset matches `members`.

    Memoised recursion on the type order: strictly smaller types have strictly
    fewer blocks, so the recursion terminates.
    """
    memo = {} if _memo is None else _memo
    return _count_type_rec(g, tuple(members), memo)


def _count_type_rec(g: Graph, fams: tuple, memo: dict) -> int:
    root = type_key(fams)
    if root in memo:
        return memo[root]
    total = 1
    for f in fams:
        total *= count_subgraphs(g, f)
        if total == 0:
            break
    table = covers_of_type(fams, g.n)
    for tk, (c, reps) in table.by_type.items():
        if tk == root:
            continue
        total -= c * _count_type_rec(g, reps, memo)
    val = exact_div(total, table.self_cover, f"type count {root}")
    memo[root] = val
    return val


def count_type_chain(g: Graph, members) -> int:
    """Chain-sum form of the same count; exponential, used as a cross-check."""
    fams = tuple(members)

    def p_of(blks) -> int:
        total = 1
        for f in blks:
            total *= count_subgraphs(g, f)
        return total

    total = Fraction(0)

    def walk(blks, q, acc):
        nonlocal total
        table = covers_of_type(blks, g.n)
        root = table.root
        total += Fraction((-1) ** q * p_of(blks), table.self_cover) * acc
        for tk, (c, reps) in table.by_type.items():
            if tk == root:
                continue
            walk(reps, q + 1, acc * Fraction(c, table.self_cover))

    walk(fams, 0, Fraction(1))
    if total.denominator != 1:
        raise ConsistencyError("chain sum is not integral")
    return int(total)


# ---------------------------------------------------------------------------
# Characteristic polynomial from the vertex deck
# ---------------------------------------------------------------------------

def _elementary_blocks(parts) -> list:
    return [path(2) if p == 2 else cycle(p) for p in parts]


def charpoly_from_vertex_deck(deck) -> Polynomial:
    """P(G) from the multiset of vertex-deleted subgraphs, n >= 3.

    Low coefficients follow from the derivative identity over card
    polynomials.  Spanning elementary counts come from the type expansion
    with every subgraph count Kelly-sourced; hamiltonian cycles are solved
    from the all-K2 type equation, whose only non-Kelly term is the n-cycle.
    """
    deck = list(deck)
    n = len(deck)
    if n < 3:
        raise DomainError("vertex deck reconstruction needs n >= 3")
    for card in deck:
        if card.n != n - 1:
            raise InconsistentDeckError(
                f"card has {card.n} vertices, expected {n - 1}")

    coeffs = []
    card_polys = [charpoly_oracle(card) for card in deck]
    for i in range(n):
        total = sum(p[i] for p in card_polys)
        q, r = divmod(total, n - i)
        if r:
            raise InconsistentDeckError(
                f"coefficient sum {total} at index {i} not divisible by {n - i}")
        coeffs.append(q)

    kelly_memo = {}

    def kelly(f: Graph) -> int:
        code = canonical_code(f)
        if code not in kelly_memo:
            kelly_memo[code] = kelly_count(deck, f, n)
        return kelly_memo[code]

    w_memo = {}

    def w_count(fams: tuple) -> int:
        """<G, type(fams)> via the expansion, with Kelly-sourced products."""
        root = type_key(fams)
        if root in w_memo:
            return w_memo[root]
        total = 1
        for f in fams:
            total *= kelly(f)
            if total == 0:
                break
        table = covers_of_type(fams, n)
        for tk, (c, reps) in table.by_type.items():
            if tk == root:
                continue
            total -= c * w_count(reps)
        q, r = divmod(total, table.self_cover)
        if r:
            raise InconsistentDeckError(f"type count for {root} is not integral")
        w_memo[root] = q
        return q

    acc = 0
    for parts in partitions_min2(n):
        if len(parts) == 1:
            continue
        fams = tuple(_elementary_blocks(parts))
        root = type_key(fams)
        spanning = w_count(fams)
        # strip the non-spanning members of the same type
        table = covers_of_type(fams, n)
        for _code, (x, _c) in table.members.items():
            if x.n < n and block_type(x) == root:
                spanning -= kelly(x)
        cyc = sum(1 for p in parts if p >= 3)
        acc += (-1) ** (n - len(parts)) * (2 ** cyc) * spanning

    # hamiltonian cycles from the n-fold K2 type: no subgraph has n K2 blocks
    fams = tuple(path(2) for _ in range(n))
    table = covers_of_type(fams, n)
    cn_key = type_key([cycle(n)])
    rhs = kelly(path(2)) ** n
    for tk, (c, reps) in table.by_type.items():
        if tk == cn_key:
            continue
        rhs -= c * w_count(reps)
    if cn_key not in table.by_type:
        raise ConsistencyError("n-cycle type missing from the all-K2 cover table")
    ham, r = divmod(rhs, table.by_type[cn_key][0])
    if r:
        raise InconsistentDeckError("hamiltonian count is not integral")
    acc += (-1) ** (n - 1) * 2 * ham

    coeffs.append((-1) ** n * acc)
    return Polynomial(tuple(coeffs))
