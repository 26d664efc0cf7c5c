"""Alpha-acyclicity: GYO reduction, a brute-force subset oracle, and the
forest equivalence for linear hypergraphs.

The reduction applies three rules to a fixpoint: (i) drop a vertex lying
in exactly one edge, (ii) drop an edge contained in another, (iii) drop
an empty edge.  A hypergraph is alpha-acyclic iff the residual has no
edges.  Vertices never become isolated during reduction (rule (ii) only
removes an edge whose vertices all survive in the container), so for
inputs without isolated vertices an edgeless residual is the empty
hypergraph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .hypergraph import Hypergraph
from .levi import levi_graph

EAR_VERTEX = "ear-vertex"
CONTAINED_EDGE = "contained-edge"
EMPTY_EDGE = "empty-edge"


@dataclass(frozen=True)
class GyoStep:
    rule: str
    item: str | int  # vertex token, or index of the edge in the input


@dataclass(frozen=True)
class GyoTrace:
    steps: tuple[GyoStep, ...]
    residual: Hypergraph

    @property
    def residual_empty(self) -> bool:
        return self.residual.n_edges == 0


def gyo_reduce(h: Hypergraph, rng: random.Random | None = None) -> GyoTrace:
    """Run the reduction to a fixpoint.

    Deterministic order: lowest-numbered applicable rule first, then the
    lowest-index item (canonical vertex order / input edge index).  Pass
    rng to instead pick uniformly among all applicable (rule, item)
    pairs; the emptiness of the residual must not depend on the order.
    """
    vpos = {v: i for i, v in enumerate(h.vertices)}
    alive_vertices = set(h.vertices)
    # edge identity is the index in the input; content shrinks in place
    edges: dict[int, set[str]] = {i: set(e) for i, e in enumerate(h.edges)}
    steps: list[GyoStep] = []

    while True:
        ear_candidates = []
        for v in alive_vertices:
            homes = [i for i, e in edges.items() if v in e]
            if len(homes) == 1:
                ear_candidates.append((vpos[v], v, homes[0]))
        contained = [
            i
            for i, e in edges.items()
            if any(j != i and e <= f for j, f in edges.items())
        ]
        empty = [i for i, e in edges.items() if not e]

        moves: list[tuple[int, int]] = []  # (rule number, sort key)
        if ear_candidates:
            moves += [(1, key) for key, _, _ in ear_candidates]
        if contained:
            moves += [(2, i) for i in contained]
        if empty:
            moves += [(3, i) for i in empty]
        if not moves:
            break

        if rng is None:
            rule, key = min(moves)
        else:
            rule, key = moves[rng.randrange(len(moves))]

        if rule == 1:
            v, home = next((v, home) for k, v, home in ear_candidates if k == key)
            alive_vertices.discard(v)
            edges[home].discard(v)
            steps.append(GyoStep(EAR_VERTEX, v))
        elif rule == 2:
            del edges[key]
            steps.append(GyoStep(CONTAINED_EDGE, key))
        else:
            del edges[key]
            steps.append(GyoStep(EMPTY_EDGE, key))

    residual_vertices = [v for v in h.vertices if v in alive_vertices]
    residual_edges = [sorted(edges[i], key=vpos.__getitem__) for i in sorted(edges)]
    residual = Hypergraph(residual_edges, vertices=residual_vertices)
    return GyoTrace(steps=tuple(steps), residual=residual)


def is_alpha_acyclic(h: Hypergraph) -> bool:
    return gyo_reduce(h).residual_empty


def _minimized_traces(edge_masks: list[int], sub: int) -> list[int]:
    cuts = {e & sub for e in edge_masks}
    cuts.discard(0)
    return [e for e in cuts if not any(e != f and e & f == e for f in cuts)]


def _is_graph_cycle(min_edges: list[int], sub: int) -> bool:
    """Connected 2-regular 2-uniform on exactly the vertices of sub."""
    if any(e.bit_count() != 2 for e in min_edges):
        return False
    deg: dict[int, int] = {}
    rest = sub
    while rest:
        b = rest & -rest
        deg[b] = 0
        rest ^= b
    for e in min_edges:
        lo = e & -e
        hi = e ^ lo
        if lo not in deg or hi not in deg:
            return False
        deg[lo] += 1
        deg[hi] += 1
    if any(d != 2 for d in deg.values()):
        return False
    # connectivity over the 2-uniform edges
    bits = list(deg)
    reach = {bits[0]}
    frontier = [bits[0]]
    while frontier:
        b = frontier.pop()
        for e in min_edges:
            if e & b:
                other = e ^ b
                if other not in reach:
                    reach.add(other)
                    frontier.append(other)
    return len(reach) == len(bits)


def _is_full_corank(min_edges: list[int], sub: int) -> bool:
    """Edge family equals { sub minus one vertex : vertex of sub }."""
    want = set()
    rest = sub
    while rest:
        b = rest & -rest
        want.add(sub ^ b)
        rest ^= b
    return set(min_edges) == want


def is_alpha_acyclic_brute(h: Hypergraph, cap: int = 12) -> bool:
    """Exhaustive characterization: acyclic iff no vertex subset (of size
    at least 3) whose minimized trace is a graph cycle or the family of
    all one-vertex-deleted subsets.

    Subsets of size 1 and 2 are skipped: a two-vertex subset whose trace
    is two singletons would otherwise match the one-vertex-deleted family
    vacuously, flagging every hypergraph with two vertices that share no
    edge.
    """
    n = h.n_vertices
    if n > cap:
        raise ValueError(f"brute-force oracle capped at {cap} vertices, got {n}")
    vpos = {v: i for i, v in enumerate(h.vertices)}
    edge_masks = []
    for e in h.edges:
        m = 0
        for v in e:
            m |= 1 << vpos[v]
        edge_masks.append(m)
    for sub in range(1, 1 << n):
        if sub.bit_count() < 3:
            continue
        cuts = _minimized_traces(edge_masks, sub)
        if not cuts:
            continue
        if _is_graph_cycle(cuts, sub) or _is_full_corank(cuts, sub):
            return False
    return True


def linear_forest_test(h: Hypergraph) -> bool:
    """For linear hypergraphs only: alpha-acyclic iff the Levi graph is
    a forest."""
    if not h.is_linear():
        raise ValueError("forest equivalence requires a linear hypergraph")
    return levi_graph(h).is_acyclic()
