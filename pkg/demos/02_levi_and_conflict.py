"""The Levi graph, its line-graph square, and the conflict graph.

Coloring the incidences of a hypergraph is the same problem three ways:
a proper coloring of the conflict graph, a strong edge coloring of the
Levi graph, and a proper coloring of the square of the Levi line graph.
"""

from hgcolor import (
    Hypergraph,
    biregular_profile,
    conflict_graph,
    d2_neighborhood,
    is_k2t1_free,
    levi_graph,
    line_graph_square,
    zeta,
)

h = Hypergraph([["a", "b"], ["b", "c"]])
print("hypergraph:", h)

# The Levi graph joins vertices to the edges containing them.
levi = levi_graph(h)
print("levi graph:", levi)
print("levi edges:", levi.edges)

# The conflict graph lives on the incidences; here it is K4 minus one
# edge (the two far-end incidences do not conflict).
cg = conflict_graph(h)
print("\nconflict graph:", cg.graph.n_vertices, "vertices,",
      cg.graph.n_edges, "edges")

# It is isomorphic to the square of the line graph of the Levi graph.
square = line_graph_square(levi)
print("square of the Levi line graph:", square.n_vertices, "vertices,",
      square.n_edges, "edges")

# Distance-2 edge neighborhoods (the sets behind strong edge coloring):
e = levi.edges[0]
print(f"\nD2({e}) =", sorted(d2_neighborhood(levi, e)))
f = sorted(d2_neighborhood(levi, e))[0]
print(f"zeta({f}, {e}) =", zeta(levi, f, e))

# Bipartite structure predicates:
print("\nbiregular profile of the Levi graph:", biregular_profile(levi))
print("contains two vertices with 2 common neighbors?",
      not is_k2t1_free(levi, 1))
