"""Tour of the induced-subgraph machinery on the triangular prism.

The prism (two triangles joined by a perfect matching) is the running example
for the whole library: its nine induced-subgraph types, the 9x9 incidence
matrix, and the edge-labelled poset.
"""

from reconkit import (graph, lambda_deck, nmatrix, elp_from_nmatrix,
                      write_graph6, count_induced)
from reconkit.graphcore import path, complete, cycle

prism = graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5),
                  (0, 3), (1, 4), (2, 5)])
print("prism:", prism)
print("graph6:", write_graph6(prism))

print("\nInduced-copy counts of a few small graphs:")
for name, h in [("K2", path(2)), ("P3", path(3)), ("K3", complete(3)),
                ("C4", cycle(4))]:
    print(f"  copies of {name}: {count_induced(prism, h)}")

deck = lambda_deck(prism)
print(f"\nThe prism has {len(deck)} induced-subgraph types with edges:")
for i, cls in enumerate(deck.classes, start=1):
    print(f"  type {i}: {cls.v} vertices, {cls.e} edges, graph6 {write_graph6(cls.rep)}")

nm = nmatrix(prism)
print("\nIncidence matrix N[i][j] = induced copies of type j inside type i:")
for row in nm.rows:
    print("  " + " ".join(f"{x:2d}" for x in row))

elp = elp_from_nmatrix(nm)
print(f"\nEdge-labelled poset: {elp.size} nodes, {len(elp.covers)} cover edges")
print("ranks:", elp.ranks)
for (j, i, lab) in elp.covers:
    print(f"  type {j + 1} -> type {i + 1}   label {lab}")
