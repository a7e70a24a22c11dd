"""Characteristic polynomial from the complete polynomial deck.

The deck holds P(G_Y) for every nonempty proper vertex subset Y.  Low
coefficients follow from the derivative identity.  The constant term needs
the elementary spanning subgraph counts: signed cycle-cover sums c(A -> G)
are Moebius-computable from the deck alone, and a recursion over the
partition refinement order converts them into counts of each non-cycle
elementary spanning type.  The hamiltonian term is out of reach, so the
method applies when a degree-1 vertex is recognised in the deck, or when the
caller asserts non-hamiltonicity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .combi import partitions_min2, strict_refinements
from .errors import DomainError, InconsistentDeckError, NotReconstructibleError
from .graphcore import Graph, elementary_graph, induced_subgraph
from .oracle import Polynomial, charpoly_oracle, signed_exact_cover_oracle

__all__ = [
    "PolyDeck",
    "build_polydeck",
    "low_coeffs",
    "c_lambda",
    "count_elementary",
    "count_elementary_chain",
    "charpoly_from_polydeck",
    "polydeck_to_json",
    "polydeck_from_json",
]


@dataclass(frozen=True)
class PolyDeck:
    """Multiset of P(G - S) over nonempty proper S, with the order of G."""

    n: int
    polys: tuple  # tuple of coefficient tuples c_0..c_d

    def __post_init__(self):
        if len(self.polys) != 2 ** self.n - 2:
            raise InconsistentDeckError(
                f"expected {2 ** self.n - 2} entries for n={self.n}, got {len(self.polys)}")
        degs = [len(p) - 1 for p in self.polys]
        if degs.count(self.n - 1) != self.n:
            raise InconsistentDeckError("wrong number of degree n-1 entries")
        for p in self.polys:
            if len(p) == 2 and tuple(p) != (1, 0):
                raise InconsistentDeckError("single-vertex entries must equal lambda")

    def entries_of_degree(self, d: int) -> list:
        return [p for p in self.polys if len(p) - 1 == d]


def build_polydeck(g: Graph) -> PolyDeck:
    """P(G_Y) for every nonempty proper subset Y of the vertex set."""
    if g.n < 2:
        raise DomainError("polynomial deck needs at least 2 vertices")
    polys = []
    for size in range(1, g.n):
        for subset in combinations(range(g.n), size):
            polys.append(charpoly_oracle(induced_subgraph(g, subset)).coeffs)
    return PolyDeck(g.n, tuple(polys))


def low_coeffs(d: PolyDeck) -> tuple:
    """c_0 .. c_{n-1} of G from the degree-(n-1) deck entries (derivative identity)."""
    cards = d.entries_of_degree(d.n - 1)
    out = []
    for i in range(d.n):
        total = sum(p[i] for p in cards)
        q, r = divmod(total, d.n - i)
        if r:
            raise InconsistentDeckError(
                f"coefficient sum {total} at index {i} not divisible by {d.n - i}")
        out.append(q)
    return tuple(out)


def _p_value(coeffs, parts) -> int:
    """Sum over tuples of elementary subgraphs: prod of (-1)^a * c_a readings."""
    val = 1
    for a in parts:
        c = coeffs[a] if a < len(coeffs) else 0
        val *= (-1) ** a * c
        if val == 0:
            return 0
    return val


def c_lambda(d: PolyDeck, parts) -> int:
    """Signed spanning cover sum c(parts -> G), Moebius-inverted over the deck.

    Every part must be at most n-1: the subset sum needs the product of low
    coefficients on the full vertex set, and c_n(G) is exactly what the deck
    withholds.
    """
    parts = tuple(sorted(parts, reverse=True))
    if not parts or parts[-1] < 2:
        raise DomainError("parts must be >= 2")
    if parts[0] >= d.n:
        raise DomainError(f"part {parts[0]} >= n={d.n} is not computable from the deck")
    total = _p_value(low_coeffs(d), parts)
    for p in d.polys:
        sign = (-1) ** (d.n - (len(p) - 1))
        total += sign * _p_value(p, parts)
    return total


def _signed_c_on(parts, host_parts) -> int:
    """Transition coefficient c(parts -> F) on the elementary graph F.

    Counts Sachs-weighted tuples whose union is exactly F: grouping the
    spanning tuples of G by their union graph requires the exact-cover count
    on each host, not the vertex-spanning one.
    """
    return signed_exact_cover_oracle(elementary_graph(host_parts), parts)


def count_elementary(d: PolyDeck, parts, _memo=None) -> int:
    """Spanning subgraphs of G isomorphic to the elementary graph of `parts`.

    `parts` must be a nontrivial partition of n with parts >= 2.  Production
    path: the memoised recursion over strict refinements.
    """
    parts = tuple(sorted(parts, reverse=True))
    _check_nontrivial(d, parts)
    memo = {} if _memo is None else _memo
    return _count_rec(d, parts, memo)


def _count_rec(d: PolyDeck, parts, memo) -> int:
    if parts in memo:
        return memo[parts]
    val = c_lambda(d, parts)
    for finer in strict_refinements(parts):
        val -= _signed_c_on(parts, finer) * _count_rec(d, finer, memo)
    denom = _signed_c_on(parts, parts)
    q, r = divmod(val, denom)
    if r:
        raise InconsistentDeckError(f"count for {parts} is not integral")
    memo[parts] = q
    return q


def count_elementary_chain(d: PolyDeck, parts) -> int:
    """Chain-sum evaluation of the same count; cross-check for the recursion.

    Sums over all strict refinement chains below `parts`, with alternating
    sign and products of transition values.
    """
    parts = tuple(sorted(parts, reverse=True))
    _check_nontrivial(d, parts)
    total = Fraction(0)

    def walk(lam, q, acc):
        nonlocal total
        total += Fraction((-1) ** q * c_lambda(d, lam), _signed_c_on(lam, lam)) * acc
        for finer in strict_refinements(lam):
            step = Fraction(_signed_c_on(lam, finer), _signed_c_on(lam, lam))
            walk(finer, q + 1, acc * step)

    walk(parts, 0, Fraction(1))
    if total.denominator != 1:
        raise InconsistentDeckError(f"chain sum for {parts} is not integral")
    return int(total)


def _check_nontrivial(d: PolyDeck, parts):
    if sum(parts) != d.n:
        raise DomainError(f"parts must sum to n={d.n}")
    if len(parts) < 2:
        raise DomainError("the one-part partition is the hamiltonian case")


def degree_sequence(d: PolyDeck) -> tuple | None:
    """Vertex degrees recovered from c_2 differences, or None when n = 2.

    c_2 counts edges up to sign, so each degree-(n-1) entry reveals the degree
    of its deleted vertex.  At n = 2 the deck determines no edge count at all:
    K2 and 2K1 have identical decks.
    """
    if d.n < 3:
        return None
    e_total = -low_coeffs(d)[2]
    degs = []
    for p in d.entries_of_degree(d.n - 1):
        degs.append(e_total + p[2])
    return tuple(sorted(degs))


def charpoly_from_polydeck(d: PolyDeck, assert_nonhamiltonian: bool = False) -> Polynomial:
    """P(G) from the complete polynomial deck.

    Requires a recognised degree-1 vertex, which rules out hamiltonian
    cycles, or an explicit assertion that ham(G) = 0.  Otherwise raises
    NotReconstructibleError rather than guessing.
    """
    degs = degree_sequence(d)
    if not assert_nonhamiltonian:
        if degs is None:
            raise NotReconstructibleError(
                "n = 2 decks carry no edge information; pass the assertion flag "
                "only if the graph is known non-hamiltonian")
        if 1 not in degs:
            raise NotReconstructibleError(
                "no degree-1 vertex recognised and non-hamiltonicity not asserted")
    coeffs = list(low_coeffs(d))
    acc = 0
    memo = {}
    for parts in partitions_min2(d.n):
        if len(parts) == 1:
            continue  # hamiltonian term, zero by premise
        cnt = count_elementary(d, parts, _memo=memo)
        cyc = sum(1 for p in parts if p >= 3)
        acc += (-1) ** (d.n - len(parts)) * (2 ** cyc) * cnt
    coeffs.append((-1) ** d.n * acc)
    return Polynomial(tuple(coeffs))


def polydeck_to_json(d: PolyDeck) -> dict:
    return {"n": d.n, "polys": [list(p) for p in d.polys]}


def polydeck_from_json(obj: dict) -> PolyDeck:
    try:
        n = int(obj["n"])
        polys = tuple(tuple(int(c) for c in p) for p in obj["polys"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InconsistentDeckError(f"bad polynomial deck JSON: {exc}") from exc
    return PolyDeck(n, polys)
