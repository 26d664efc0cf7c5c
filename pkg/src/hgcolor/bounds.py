"""Counting audits and palette-bound formulas.

The distance-2 overlap sums are audited in exact integer arithmetic
against a four-term quadratic that holds for every finite biregular
K_{2,t+1}-free instance.  The closed-form coefficient evaluators (w, z,
f) and the quadratic-in-rho bounds are asymptotic: they are reported for
comparison and never asserted against exact values on finite inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .coloring import clique_lower_bound, exact_chromatic
from .hypergraph import Hypergraph
from .levi import (
    BipartiteGraph,
    all_d2_neighborhoods,
    biregular_profile,
    is_k2t1_free,
    line_graph_square,
)
from .acyclicity import is_alpha_acyclic


def poly_bound(a: int, b: int, t: int) -> int:
    """Exact upper bound on the distance-2 overlap sum at any edge of a
    K_{2,t+1}-free (a,b)-regular bipartite graph, as a four-term integer
    polynomial (symmetric in a and b)."""
    if a < 1 or b < 1 or t < 1:
        raise ValueError("a, b, t must be positive")
    return (
        (b - 1) * ((a + t - 1) * b - 2 * t)
        + (a - 1) * ((b + t - 1) * a - 2 * t)
        + (a - 1) * (b - 1) * ((3 * t - 1) * (a - 2) + b * t)
        + (a - 1) * (b - 1) * ((3 * t - 1) * (b - 2) + a * t)
    )


def poly_bound_collapsed(a: int, b: int, t: int) -> int:
    """The same bound collapsed into powers of b; kept separate so the
    two forms can be checked against each other."""
    return (
        (4 * a - 3) * t * b * b
        + (4 * t * a * a - (20 * t - 4) * a + 13 * t - 4) * b
        - (3 * t * a * a - (13 * t - 4) * a + 8 * t - 4)
    )


@dataclass(frozen=True)
class ZetaEdgeAudit:
    edge: tuple
    zeta_sum: int
    poly_bound: int
    slack: int


@dataclass(frozen=True)
class ZetaAudit:
    profile: tuple[int, int]
    t: int
    per_edge: tuple[ZetaEdgeAudit, ...]
    max_ratio: Fraction


def zeta_sum_audit(g: BipartiteGraph, t: int) -> ZetaAudit:
    """Per-edge overlap sums against the polynomial bound.

    The input must be biregular and K_{2,t+1}-free; every slack is
    asserted non-negative (the bound is exact, not asymptotic).
    """
    profile = biregular_profile(g)
    if profile is None:
        raise ValueError("graph is not biregular")
    if not is_k2t1_free(g, t):
        raise ValueError(f"graph contains a K_{{2,{t + 1}}}")
    a, b = profile
    bound = poly_bound(a, b, t)
    d2 = all_d2_neighborhoods(g)
    rows = []
    max_ratio = Fraction(0)
    for e in g.edges:
        total = sum(len(d2[f] & d2[e]) for f in d2[e])
        slack = bound - total
        if slack < 0:
            raise AssertionError(
                f"overlap sum {total} at {e!r} exceeds the bound {bound}"
            )
        if bound > 0:
            max_ratio = max(max_ratio, Fraction(total, bound))
        rows.append(ZetaEdgeAudit(edge=e, zeta_sum=total, poly_bound=bound, slack=slack))
    return ZetaAudit(profile=profile, t=t, per_edge=tuple(rows), max_ratio=max_ratio)


@dataclass(frozen=True)
class SparsityReport:
    sigma_emp: Fraction
    square_max_degree: int
    max_neighborhood_edges: int
    per_edge: tuple[tuple[tuple, int], ...]  # (edge, edges induced by its D2 set)
    asymptotic_target: float | None


def sparsity_empirical(g: BipartiteGraph, t: int | None = None) -> SparsityReport:
    """Empirical sparsity of the line-graph square: one minus the largest
    neighborhood-induced edge count over C(max_degree, 2).

    When t is given the asymptotic target 1 - (4a-3)t/(2a-1)^2 is
    reported alongside for comparison only; nothing is asserted against
    it (it is a limit statement in the vertex-side degree).
    """
    profile = biregular_profile(g)
    if profile is None:
        raise ValueError("graph is not biregular")
    a, _ = profile
    square = line_graph_square(g)
    max_deg = square.max_degree()
    counts = []
    for e in g.edges:
        nbrs = set(square.neighbors(e))
        induced = sum(
            1 for u, v in square.edges if u in nbrs and v in nbrs
        )
        counts.append((e, induced))
    worst = max((c for _, c in counts), default=0)
    if max_deg <= 1:
        sigma = Fraction(1)
    else:
        sigma = 1 - Fraction(worst, math.comb(max_deg, 2))
    target = None
    if t is not None:
        target = 1 - (4 * a - 3) * t / (2 * a - 1) ** 2
    return SparsityReport(
        sigma_emp=sigma,
        square_max_degree=max_deg,
        max_neighborhood_edges=worst,
        per_edge=tuple(counts),
        asymptotic_target=target,
    )


def eval_z(a: int, t: int) -> float:
    """Half-palette coefficient for K_{2,t+1}-free (a,b)-regular bipartite
    squares; defined for t < a (otherwise freeness is vacuous and the
    sparsity argument collapses)."""
    if t < 1:
        raise ValueError("t must be positive")
    if t >= a:
        raise ValueError(
            f"coefficient needs t < a (got t={t}, a={a}); with t >= a the "
            "K_{2,t+1}-freeness is vacuous"
        )
    q = (4 * a - 3) * t / (2 * a - 1) ** 2
    return 0.5 * (1 + q) + (1 - q) ** 1.5 / 6


def eval_w(k: int, t: int) -> float:
    """Palette coefficient: chi_I <= w(k, t) * rank * max_degree holds
    asymptotically for t-quasi-linear hypergraphs of rank k; tends to 4/3
    as k grows with t fixed."""
    return 2 * eval_z(k, t)


def eval_f(r: int) -> float:
    """Linear-hypergraph coefficient: w(r, 1) * r."""
    return eval_w(r, 1) * r


UPPER = "upper"
LOWER = "lower"
EXACT = "exact"


@dataclass(frozen=True)
class BoundRow:
    name: str
    kind: str  # upper | lower | exact
    value: int | float | None
    applicable: bool
    asymptotic: bool
    note: str = ""


@dataclass(frozen=True)
class BoundTable:
    rows: tuple[BoundRow, ...]

    def row(self, name: str) -> BoundRow:
        for r in self.rows:
            if r.name == name:
                return r
        raise KeyError(name)


def bound_table(
    h: Hypergraph, with_exact: bool = False, budget: int = 10_000_000, cap: int = 40
) -> BoundTable:
    """Every palette bound that applies to h, with applicability and
    asymptotic flags.  Asymptotic rows are advisory; non-asymptotic upper
    rows dominate the exact value whenever the exact value is known."""
    rep = h.structure_report()
    r, d, rho, t = rep.rank, rep.max_degree, rep.rho, rep.linearity_t
    has_edges = h.n_edges > 0
    linear = t == 1
    rows: list[BoundRow] = []

    rows.append(
        BoundRow("greedy_2rd", UPPER, 2 * r * d if has_edges else 0, has_edges, False,
                 "greedy on the conflict graph")
    )
    rows.append(
        BoundRow("global_1772", UPPER, 1.772 * rho * rho if has_edges else None,
                 has_edges, True, "large rho only")
    )
    w_ok = has_edges and t < r
    rows.append(
        BoundRow("w_bound", UPPER, eval_w(r, t) * r * d if w_ok else None, w_ok, True,
                 "needs t < rank; large max_degree only")
    )
    lin_ok = has_edges and linear and r >= 3
    rows.append(
        BoundRow("linear_1531", UPPER, 1.531 * r * d if lin_ok else None, lin_ok, True,
                 "linear with rank >= 3; large max_degree only")
    )
    mah_ok = has_edges and linear and rho >= 3
    rows.append(
        BoundRow("mahdian", UPPER, 2 * rho * rho / math.log(rho) if mah_ok else None,
                 mah_ok, True, "linear only; natural log; large rho only")
    )
    acyclic_ok = has_edges and linear and is_alpha_acyclic(h)
    rows.append(
        BoundRow("acyclic_linear", UPPER, d + r - 1 if acyclic_ok else None,
                 acyclic_ok, False, "alpha-acyclic linear only")
    )
    rows.append(
        BoundRow("clique_lower", LOWER, clique_lower_bound(h) if has_edges else None,
                 has_edges, False, "pairwise adjacent incidences at one vertex")
    )

    exact_value = None
    exact_note = "not requested"
    if with_exact:
        incidences = sum(len(e) for e in h.edges)
        if incidences > cap:
            exact_note = f"{incidences} incidences over solver cap {cap}"
        else:
            result = exact_chromatic(h, budget=budget, cap=cap)
            if result.optimal:
                exact_value = result.upper
                exact_note = f"{result.nodes} nodes"
            else:
                exact_note = f"unknown, bounds [{result.lower}, {result.upper}]"
    rows.append(
        BoundRow("exact", EXACT, exact_value, exact_value is not None, False, exact_note)
    )
    return BoundTable(rows=tuple(rows))
