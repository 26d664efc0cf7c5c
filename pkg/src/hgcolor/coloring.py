"""Incidence colorings and strong edge colorings: verification, the
greedy bound, an exact branch-and-bound solver, and the translation
between the two coloring kinds along the Levi bijection.

Colors are 1-based consecutive integers.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping, Sequence

from .hypergraph import Hypergraph, Incidence
from .levi import (
    BipartiteGraph,
    SimpleGraph,
    all_d2_neighborhoods,
    conflict_graph,
    edge_node_labels,
    levi_graph,
)


def _validate_assignment(assignment: Mapping, palette: int) -> None:
    if palette < 0:
        raise ValueError("palette must be non-negative")
    for key, color in assignment.items():
        if not isinstance(color, int) or color < 1:
            raise ValueError(f"color of {key!r} must be a positive integer, got {color!r}")
        if color > palette:
            raise ValueError(f"color {color} of {key!r} exceeds palette {palette}")


@dataclass(frozen=True)
class IncidenceColoring:
    """Total map from incidences to colors, with a declared palette size."""

    assignment: dict[Incidence, int]
    palette: int

    def __post_init__(self):
        _validate_assignment(self.assignment, self.palette)


@dataclass(frozen=True)
class StrongEdgeColoring:
    """Total map from graph edges (canonical tuples) to colors."""

    assignment: dict[tuple, int]
    palette: int

    def __post_init__(self):
        _validate_assignment(self.assignment, self.palette)


def verify_incidence(h: Hypergraph, c: IncidenceColoring) -> list[tuple[Incidence, Incidence]]:
    """Adjacent incidence pairs sharing a color; empty iff proper.

    Raises if the assignment is not exactly a map on the incidences of h
    (missing or unknown incidences both indicate a mismatched coloring).
    """
    incs = h.incidences()
    missing = [i for i in incs if i not in c.assignment]
    if missing:
        raise ValueError(f"coloring is missing incidences: {missing}")
    unknown = [i for i in c.assignment if not h.is_incidence(i)]
    if unknown:
        raise ValueError(f"coloring assigns non-incidences: {unknown}")
    sets = h.edge_sets
    bad = []
    for i in range(len(incs)):
        x1, e1 = incs[i]
        c1 = c.assignment[incs[i]]
        for j in range(i + 1, len(incs)):
            x2, e2 = incs[j]
            if c.assignment[incs[j]] != c1:
                continue
            if x1 == x2 or {x1, x2} <= sets[e1] or {x1, x2} <= sets[e2]:
                bad.append((incs[i], incs[j]))
    return bad


def verify_strong_edge(
    g: SimpleGraph | BipartiteGraph, c: StrongEdgeColoring
) -> list[tuple[tuple, tuple]]:
    """Edge pairs at line-graph distance <= 2 sharing a color."""
    gs = g.to_simple() if isinstance(g, BipartiteGraph) else g
    missing = [e for e in gs.edges if e not in c.assignment]
    if missing:
        raise ValueError(f"coloring is missing edges: {missing}")
    unknown = [e for e in c.assignment if not (len(e) == 2 and gs.has_edge(*e))]
    if unknown:
        raise ValueError(f"coloring assigns unknown edges: {unknown}")
    d2 = all_d2_neighborhoods(gs)
    pos = {e: i for i, e in enumerate(gs.edges)}
    bad = []
    for e in gs.edges:
        for f in d2[e]:
            if pos[e] < pos[f] and c.assignment[e] == c.assignment[f]:
                bad.append((e, f))
    return bad


def translate(h: Hypergraph, c: IncidenceColoring) -> StrongEdgeColoring:
    """Transport an incidence coloring of h onto the edges of its Levi
    graph; properness and violation pairs are preserved exactly."""
    labels = edge_node_labels(h)
    assignment = {}
    for inc, color in c.assignment.items():
        assignment[(inc.vertex, labels[inc.edge_index])] = color
    return StrongEdgeColoring(assignment, c.palette)


def translate_back(h: Hypergraph, c: StrongEdgeColoring) -> IncidenceColoring:
    labels = edge_node_labels(h)
    index = {lab: i for i, lab in enumerate(labels)}
    assignment = {}
    for (v, lab), color in c.assignment.items():
        assignment[Incidence(v, index[lab])] = color
    return IncidenceColoring(assignment, c.palette)


def _levi_bfs_order(h: Hypergraph) -> list[Incidence]:
    """Incidences in the order their Levi edges are discovered by a BFS
    over the Levi graph (components visited in canonical order)."""
    gs = levi_graph(h).to_simple()
    labels = edge_node_labels(h)
    index = {lab: i for i, lab in enumerate(labels)}
    seen_nodes = set()
    seen_edges = set()
    order: list[Incidence] = []
    for start in gs.vertices:
        if start in seen_nodes:
            continue
        seen_nodes.add(start)
        queue = deque([start])
        while queue:
            node = queue.popleft()
            for nb in gs.neighbors(node):
                edge = gs.edge_key((node, nb))
                if edge not in seen_edges:
                    seen_edges.add(edge)
                    # part_u (hypergraph vertices) precede edge labels in
                    # the Levi vertex order, so edge = (vertex, label)
                    order.append(Incidence(edge[0], index[edge[1]]))
                if nb not in seen_nodes:
                    seen_nodes.add(nb)
                    queue.append(nb)
    return order


def greedy_color(
    h: Hypergraph, order: str | Sequence[Incidence] = "canonical"
) -> IncidenceColoring:
    """Color incidences in the given order, each with the smallest color
    absent from its already-colored neighbors.

    The palette never exceeds (max conflict degree + 1), hence never
    2 * rank * max_degree.
    """
    incs = h.incidences()
    if order == "canonical":
        seq = incs
    elif order == "levi-bfs":
        seq = _levi_bfs_order(h)
    else:
        seq = list(order)
        if sorted(seq) != sorted(incs):
            raise ValueError("custom order is not a permutation of the incidences")

    cg = conflict_graph(h).graph
    assignment: dict[Incidence, int] = {}
    for inc in seq:
        used = {assignment[nb] for nb in cg.neighbors(inc) if nb in assignment}
        color = 1
        while color in used:
            color += 1
        assignment[inc] = color
    palette = max(assignment.values(), default=0)
    return IncidenceColoring(assignment, palette)


def clique_lower_bound(h: Hypergraph) -> int:
    """Max over vertices x of degree(x) + (largest edge at x) - 1; the
    witnessing incidences are pairwise adjacent, so no smaller palette
    can work."""
    if h.n_edges == 0:
        raise ValueError("clique bound needs at least one edge")
    best = 0
    for v in h.vertices:
        at = h.edges_at(v)
        if not at:
            continue
        largest = max(len(h.edges[i]) for i in at)
        best = max(best, len(at) + largest - 1)
    return best


@dataclass(frozen=True)
class ExactResult:
    """Outcome of the exact solver.

    When the search completes (or the bounds meet), ``optimal`` is True
    and ``chi`` returns the exact incidence chromatic number.  When the
    node budget runs out first, ``chi`` raises and only the bounds
    [lower, upper] are meaningful; ``witness`` is always a proper
    coloring with palette ``upper``.
    """

    lower: int
    upper: int
    optimal: bool
    nodes: int
    witness: IncidenceColoring

    @property
    def chi(self) -> int:
        if not self.optimal:
            raise ValueError(
                f"exact chromatic number unknown: bounds [{self.lower}, {self.upper}] "
                f"after {self.nodes} node expansions"
            )
        return self.upper


def _solve_graph_coloring(
    adjacency: list[int], lower: int, initial: list[int], budget: int
) -> tuple[list[int], int, bool, int]:
    """Branch and bound over a graph given as adjacency bitmasks.

    Branches on the uncolored vertex with the most distinct neighbor
    colors (ties by vertex index); starts from the ``initial`` coloring
    as incumbent.  Returns (best coloring, best palette, optimal?, nodes).
    Colors are 0-based internally.
    """
    n = len(adjacency)
    if n == 0:
        return [], 0, True, 0
    best = list(initial)
    best_k = max(initial) + 1
    if best_k == lower:
        return best, best_k, True, 0

    colors = [-1] * n
    # per-vertex count of colored neighbors by color; mask of used colors
    counts = [[0] * (best_k + 1) for _ in range(n)]
    sat_mask = [0] * n
    nodes = 0
    aborted = False

    def pick() -> int:
        best_v, best_sat = -1, -1
        for v in range(n):
            if colors[v] < 0:
                s = sat_mask[v].bit_count()
                if s > best_sat:
                    best_sat, best_v = s, v
        return best_v

    def assign(v: int, c: int, delta: int) -> None:
        mask = adjacency[v]
        while mask:
            low = mask & -mask
            u = low.bit_length() - 1
            mask ^= low
            counts[u][c] += delta
            if counts[u][c] > 0:
                sat_mask[u] |= 1 << c
            else:
                sat_mask[u] &= ~(1 << c)

    def dfs(colored: int, used: int) -> None:
        nonlocal best, best_k, nodes, aborted
        if aborted or best_k == lower or used >= best_k:
            return
        if colored == n:
            best_k = used
            best = colors.copy()
            return
        nodes += 1
        if nodes > budget:
            aborted = True
            return
        v = pick()
        c = 0
        # best_k may shrink while iterating; re-read the limit each pass
        while c <= used and c < best_k - 1:
            if not (sat_mask[v] >> c) & 1:
                colors[v] = c
                assign(v, c, +1)
                dfs(colored + 1, max(used, c + 1))
                assign(v, c, -1)
                colors[v] = -1
                if aborted or best_k == lower:
                    return
            c += 1

    dfs(0, 0)
    return best, best_k, (not aborted) or best_k == lower, nodes


def exact_chromatic(
    h: Hypergraph, budget: int = 10_000_000, cap: int = 40
) -> ExactResult:
    """Exact incidence chromatic number by branch and bound on the
    conflict graph, with the clique bound below and the greedy coloring
    above.  Budget exhaustion yields an explicit unknown result, never a
    silently wrong number."""
    incs = h.incidences()
    if len(incs) > cap:
        raise ValueError(f"exact solver capped at {cap} incidences, got {len(incs)}")
    if not incs:
        return ExactResult(0, 0, True, 0, IncidenceColoring({}, 0))

    cg = conflict_graph(h).graph
    pos = {inc: i for i, inc in enumerate(incs)}
    adjacency = [0] * len(incs)
    for u, v in cg.edges:
        adjacency[pos[u]] |= 1 << pos[v]
        adjacency[pos[v]] |= 1 << pos[u]

    lower = clique_lower_bound(h)
    greedy = greedy_color(h)
    initial = [greedy.assignment[inc] - 1 for inc in incs]

    best, best_k, optimal, nodes = _solve_graph_coloring(adjacency, lower, initial, budget)
    witness = IncidenceColoring({inc: best[pos[inc]] + 1 for inc in incs}, best_k)
    return ExactResult(lower=lower, upper=best_k, optimal=optimal, nodes=nodes, witness=witness)
