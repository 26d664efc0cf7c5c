"""Exact counting audits and the palette bound formulas."""

from hgcolor import (
    Hypergraph,
    bound_table,
    eval_f,
    eval_w,
    gen_biregular_k2t1_free,
    poly_bound,
    poly_bound_collapsed,
    sparsity_empirical,
    zeta_sum_audit,
)

# For a K_{2,t+1}-free (a,b)-regular bipartite graph, the sum of
# distance-2 overlaps at any edge obeys an exact quadratic bound.
g, _ = gen_biregular_k2t1_free(2, 2, 3, 1, seed=1)  # the 6-cycle
audit = zeta_sum_audit(g, 1)
print("6-cycle: bound", audit.per_edge[0].poly_bound, "per edge")
for row in audit.per_edge:
    print(f"  {row.edge}: zeta_sum={row.zeta_sum} slack={row.slack}")
print("worst ratio:", audit.max_ratio, "(the 6-cycle is extremal)")

# The same bound, collapsed into powers of b; identical for all inputs.
assert poly_bound(3, 5, 2) == poly_bound_collapsed(3, 5, 2)
print("\npoly_bound(3,5,2) =", poly_bound(3, 5, 2))

# Neighborhood sparsity of the square of the line graph; the asymptotic
# target is reported for comparison, never asserted at finite size.
rep = sparsity_empirical(g, t=1)
print(f"\nsigma_emp = {rep.sigma_emp}  (asymptotic target {rep.asymptotic_target:.4f})")

# Palette coefficients: w(k,t) tends to 4/3 as k grows with t fixed.
print("\nw(3,1) =", round(eval_w(3, 1), 6), " (the 1.531 coefficient)")
print("w(10,1) =", round(eval_w(10, 1), 6))
print("w(10**6,1) =", round(eval_w(10**6, 1), 6), " -> 4/3")
print("f(4) = w(4,1)*4 =", round(eval_f(4), 6))

# Every applicable bound for one instance, flags included.
h = Hypergraph([["a", "b", "c"], ["c", "d", "e"]])
print("\nbound table for {abc},{cde}:")
for row in bound_table(h, with_exact=True).rows:
    if row.applicable:
        flag = " (asymptotic, advisory)" if row.asymptotic else ""
        value = round(row.value, 3) if isinstance(row.value, float) else row.value
        print(f"  {row.name:<14} {row.kind:<6} {value}{flag}")
