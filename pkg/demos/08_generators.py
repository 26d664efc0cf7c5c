"""Seeded instance generators for every class the audits need."""

from hgcolor import (
    gen_acyclic_linear,
    gen_biregular_k2t1_free,
    gen_linear,
    gen_quasi_linear,
    gen_uniform_acyclic_linear,
    is_alpha_acyclic,
    serialize_bipartite,
    serialize_hypergraph,
)

# Alpha-acyclic linear: a random tree 2-colored into (vertex, edge)
# sides under degree caps, read back as a hypergraph.
h = gen_acyclic_linear(n_edge_nodes=5, max_r=3, max_degree=3, seed=42)
print("acyclic linear:")
print(serialize_hypergraph(h))
assert h.is_linear() and is_alpha_acyclic(h)

# Uniform variant with an exact max degree (for sharpness experiments).
u = gen_uniform_acyclic_linear(n_edges=5, k=3, delta=3, seed=7)
print("3-uniform, max degree 3:")
print(serialize_hypergraph(u))

# Biregular K_{2,t+1}-free bipartite graphs by stub matching with
# rejection; the try count is reported.
g, tries = gen_biregular_k2t1_free(a=3, b=3, n_u=9, t=1, seed=4)
print(f"(3,3)-regular with no 4-cycle, accepted after {tries} tries:")
print(serialize_bipartite(g))

# Linear and quasi-linear k-uniform hypergraphs by randomized insertion.
print("linear triple system on 7 points:")
print(serialize_hypergraph(gen_linear(7, 7, 3, seed=3)))

print("2-quasi-linear, 4-uniform:")
print(serialize_hypergraph(gen_quasi_linear(8, 6, 4, 2, seed=5)))

# Identical parameters and seed always reproduce the same instance.
again = gen_quasi_linear(8, 6, 4, 2, seed=5)
assert serialize_hypergraph(again) == serialize_hypergraph(
    gen_quasi_linear(8, 6, 4, 2, seed=5)
)
print("determinism: same seed, same instance")
