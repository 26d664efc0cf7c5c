"""Alpha-acyclicity three ways: reduction, brute force, forest test."""

from hgcolor import (
    Hypergraph,
    gyo_reduce,
    is_alpha_acyclic,
    is_alpha_acyclic_brute,
    linear_forest_test,
)

# The reduction removes ear vertices (in exactly one edge), contained
# edges, and empty edges until stuck; acyclic means nothing is left.
chain = Hypergraph([["a", "b", "c"], ["c", "d"], ["d", "e"]])
trace = gyo_reduce(chain)
for step in trace.steps:
    print(f"  {step.rule} {step.item}")
print("residual empty:", trace.residual_empty)

# A triangle is stuck immediately: every vertex lies in two edges and
# no edge contains another.
triangle = Hypergraph([["a", "b"], ["b", "c"], ["a", "c"]])
print("\ntriangle acyclic:", is_alpha_acyclic(triangle))

# Independent oracle: scan all vertex subsets of size >= 3 and look for
# a minimized trace that is a graph cycle or the family of all
# one-vertex-deleted subsets.
print("brute force agrees:", is_alpha_acyclic_brute(triangle))

boundary = Hypergraph([["b", "c", "d"], ["a", "c", "d"], ["a", "b", "d"], ["a", "b", "c"]])
print("one-vertex-deleted family acyclic:", is_alpha_acyclic_brute(boundary))

# For linear hypergraphs, acyclicity is exactly Levi-graph acyclicity.
path = Hypergraph([["a", "b"], ["b", "c"]])
print("\nlinear path: forest test =", linear_forest_test(path),
      "  reduction =", is_alpha_acyclic(path))

# Acyclicity is not hereditary in general: the big edge below absorbs
# the triangle, but deleting it leaves a stuck cycle.
absorbed = Hypergraph([["a", "b", "c"], ["a", "b"], ["b", "c"], ["a", "c"]])
print("\nwith absorbing edge:", is_alpha_acyclic(absorbed))
print("after deleting it:  ", is_alpha_acyclic(absorbed.delete_edge(0)))
print("(for LINEAR hypergraphs deletion always preserves acyclicity)")
