"""Build hypergraphs, read their structure, and use the text format."""

from hgcolor import Hypergraph, parse_hypergraph, serialize_hypergraph

# A hypergraph is a vertex set plus a family of non-empty vertex subsets.
# Vertices are ordered by first appearance; edges keep their list order.
h = Hypergraph([["a", "b", "c"], ["c", "d"], ["d", "e"]])
print(h)

rep = h.structure_report()
print(f"max degree      {rep.max_degree}")
print(f"rank            {rep.rank}")
print(f"rho             {rep.rho} (max of the two)")
print(f"quasi-linearity {rep.linearity_t} (1 means linear)")
print(f"connected       {rep.connected}")

# Degrees and incidences: an incidence is a (vertex, edge_index) pair.
print("\ndegree of c:", h.degree("c"))
print("incidences:", h.incidences())

# Two incidences are adjacent when they share the vertex, or their two
# vertices lie together in either edge.
i1, i2 = h.incidences()[0], h.incidences()[3]
print(f"{i1} ~ {i2}:", h.incidences_adjacent(i1, i2))

# Induced subhypergraphs come in two flavors.
print("\ntrace on {a,b}:     ", h.induced(["a", "b"], semantics="trace"))
print("whole-edge on {a,b}:", h.induced(["a", "b"], semantics="whole-edge"))

# Minimization drops edges contained in larger ones.
nested = Hypergraph([["a", "b"], ["a", "b", "c"]])
print("\nminimization:", nested.minimization())

# The .hg text format round-trips losslessly.
text = serialize_hypergraph(h)
print("\nserialized:")
print(text)
assert parse_hypergraph(text) == h
