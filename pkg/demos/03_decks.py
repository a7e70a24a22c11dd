"""Characteristic polynomials from decks: polynomial deck and vertex deck.

The complete polynomial deck holds P(G - S) for every nonempty proper vertex
subset S.  When a degree-1 vertex is visible in the deck, the polynomial of G
follows; the hamiltonian term is the one thing a deck cannot see, which the
2-vertex example makes painfully concrete.  The vertex deck route instead
rebuilds the constant coefficient through block-type counting.
"""

from reconkit import (build_polydeck, charpoly_from_polydeck,
                      charpoly_from_vertex_deck, NotReconstructibleError)
from reconkit.graphcore import (complete, cycle, empty_graph, graph, path,
                                vertex_deck)
from reconkit.oracle import charpoly_oracle

print("== polynomial deck, degree-1 route ==")
for name, g in [("P4", path(4)), ("star K1,3", graph(4, [(0, 1), (0, 2), (0, 3)])),
                ("triangle with tail", graph(4, [(0, 1), (1, 2), (0, 2), (2, 3)]))]:
    got = charpoly_from_polydeck(build_polydeck(g))
    print(f"  {name:20s} deck -> {got}   (direct: {charpoly_oracle(g)})")

print("\n== the deck cannot see hamiltonicity ==")
try:
    charpoly_from_polydeck(build_polydeck(cycle(4)))
except NotReconstructibleError as exc:
    print(f"  C4 deck without the flag: {exc}")
got = charpoly_from_polydeck(build_polydeck(path(5)), assert_nonhamiltonian=True)
print(f"  P5 deck with the flag     : {got}")

print("\n== the n = 2 ambiguity ==")
d_edge = build_polydeck(path(2))
d_none = build_polydeck(empty_graph(2))
print(f"  deck of K2 : {sorted(d_edge.polys)}")
print(f"  deck of 2K1: {sorted(d_none.polys)}")
print("  identical decks, different polynomials -- no deck function can tell them apart")

print("\n== vertex deck route ==")
for name, g in [("K4", complete(4)), ("C5", cycle(5)), ("prism",
                graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                          (0, 3), (1, 4), (2, 5)]))]:
    got = charpoly_from_vertex_deck(vertex_deck(g))
    print(f"  {name:6s} cards -> {got}   (direct: {charpoly_oracle(g)})")
