"""Bipartite incidence graphs, line-graph squares, and distance-2 edge
neighborhood analytics.

Edge distance is measured in the line graph: two edges are at distance 1
when they share an endpoint and at distance 2 when a third edge meets
both.  D2 queries use that rule directly instead of materializing the
line graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

from .hypergraph import Hypergraph

Node = Hashable
Edge = tuple  # canonical (u, v) tuple in the owning graph's vertex order


class SimpleGraph:
    """Undirected simple graph over arbitrary hashable, ordered vertices."""

    __slots__ = ("_vertices", "_vpos", "_edges", "_edge_set", "_adj")

    def __init__(self, vertices: Iterable[Node], edges: Iterable[Sequence[Node]]):
        vs = list(vertices)
        vpos = {v: i for i, v in enumerate(vs)}
        if len(vpos) != len(vs):
            raise ValueError("duplicate vertices")
        adj: dict[Node, set[Node]] = {v: set() for v in vs}
        canon: list[Edge] = []
        seen: set[frozenset] = set()
        for e in edges:
            u, v = e
            if u not in vpos or v not in vpos:
                raise ValueError(f"edge {e!r} uses unknown vertices")
            if u == v:
                raise ValueError(f"loop at {u!r}")
            key = frozenset((u, v))
            if key in seen:
                raise ValueError(f"parallel edge {e!r}")
            seen.add(key)
            if vpos[u] > vpos[v]:
                u, v = v, u
            canon.append((u, v))
            adj[u].add(v)
            adj[v].add(u)
        canon.sort(key=lambda uv: (vpos[uv[0]], vpos[uv[1]]))
        object.__setattr__(self, "_vertices", tuple(vs))
        object.__setattr__(self, "_vpos", vpos)
        object.__setattr__(self, "_edges", tuple(canon))
        object.__setattr__(self, "_edge_set", frozenset(seen))
        object.__setattr__(self, "_adj", {v: tuple(sorted(ns, key=vpos.__getitem__)) for v, ns in adj.items()})

    def __setattr__(self, name, value):
        raise AttributeError("SimpleGraph is immutable")

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def n_vertices(self) -> int:
        return len(self._vertices)

    @property
    def n_edges(self) -> int:
        return len(self._edges)

    def vertex_index(self, v: Node) -> int:
        try:
            return self._vpos[v]
        except KeyError:
            raise ValueError(f"unknown vertex {v!r}") from None

    def neighbors(self, v: Node) -> tuple:
        self.vertex_index(v)
        return self._adj[v]

    def degree(self, v: Node) -> int:
        return len(self.neighbors(v))

    def max_degree(self) -> int:
        return max((len(ns) for ns in self._adj.values()), default=0)

    def has_edge(self, u: Node, v: Node) -> bool:
        return frozenset((u, v)) in self._edge_set

    def edge_key(self, e: Sequence[Node]) -> Edge:
        """Canonical tuple for an edge given in either orientation."""
        u, v = e
        if not self.has_edge(u, v):
            raise ValueError(f"unknown edge {tuple(e)!r}")
        return (u, v) if self._vpos[u] < self._vpos[v] else (v, u)

    def incident_edges(self, v: Node) -> list[Edge]:
        return [self.edge_key((v, w)) for w in self.neighbors(v)]

    def is_acyclic(self) -> bool:
        parent = list(range(self.n_vertices))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self._edges:
            ru, rv = find(self._vpos[u]), find(self._vpos[v])
            if ru == rv:
                return False
            parent[rv] = ru
        return True

    def __repr__(self) -> str:
        return f"SimpleGraph({self.n_vertices} vertices, {self.n_edges} edges)"


class BipartiteGraph:
    """Simple bipartite graph with disjoint ordered parts."""

    __slots__ = ("_part_u", "_part_v", "_simple")

    def __init__(
        self,
        part_u: Iterable[Node],
        part_v: Iterable[Node],
        edges: Iterable[Sequence[Node]],
    ):
        pu = tuple(part_u)
        pv = tuple(part_v)
        uset, vset = set(pu), set(pv)
        if uset & vset:
            raise ValueError("parts overlap")
        fixed = []
        for e in edges:
            a, b = e
            if a in uset:
                fixed.append((a, b))
            elif b in uset:
                fixed.append((b, a))
            else:
                raise ValueError(f"edge {e!r} touches no part_u vertex")
            if fixed[-1][1] not in vset:
                raise ValueError(f"edge {e!r} does not join the two parts")
        object.__setattr__(self, "_part_u", pu)
        object.__setattr__(self, "_part_v", pv)
        object.__setattr__(self, "_simple", SimpleGraph(pu + pv, fixed))

    def __setattr__(self, name, value):
        raise AttributeError("BipartiteGraph is immutable")

    @property
    def part_u(self) -> tuple:
        return self._part_u

    @property
    def part_v(self) -> tuple:
        return self._part_v

    @property
    def edges(self) -> tuple[Edge, ...]:
        """Canonical (part_u node, part_v node) tuples."""
        return self._simple.edges

    @property
    def n_edges(self) -> int:
        return self._simple.n_edges

    def degree(self, v: Node) -> int:
        return self._simple.degree(v)

    def neighbors(self, v: Node) -> tuple:
        return self._simple.neighbors(v)

    def edge_key(self, e: Sequence[Node]) -> Edge:
        return self._simple.edge_key(e)

    def to_simple(self) -> SimpleGraph:
        """Same graph with the bipartition forgotten (vertex order:
        part_u then part_v, so edge keys are unchanged)."""
        return self._simple

    def is_acyclic(self) -> bool:
        return self._simple.is_acyclic()

    def __repr__(self) -> str:
        return (f"BipartiteGraph({len(self._part_u)}+{len(self._part_v)} vertices, "
                f"{self.n_edges} edges)")


@dataclass(frozen=True)
class ConflictGraph:
    """Graph on the incidences of a hypergraph; adjacency agrees with
    Hypergraph.incidences_adjacent, and the graph is isomorphic to the
    square of the line graph of the Levi graph."""

    source: Hypergraph
    graph: SimpleGraph


def edge_node_labels(h: Hypergraph) -> list[str]:
    """Deterministic labels for the edge-side nodes of the Levi graph,
    guaranteed not to collide with vertex tokens."""
    prefix = "e"
    names = set(h.vertices)
    while any(f"{prefix}{i}" in names for i in range(h.n_edges)):
        prefix = "e" + prefix
    return [f"{prefix}{i}" for i in range(h.n_edges)]


def levi_graph(h: Hypergraph) -> BipartiteGraph:
    """Bipartite membership graph: vertices on one side, one node per
    edge on the other, joined when the vertex lies in the edge."""
    labels = edge_node_labels(h)
    edges = [(v, labels[i]) for i, e in enumerate(h.edges) for v in e]
    return BipartiteGraph(h.vertices, labels, edges)


def _edge_adjacency(g: SimpleGraph) -> dict[Edge, set[Edge]]:
    """Line-graph adjacency: edges sharing an endpoint."""
    adj: dict[Edge, set[Edge]] = {e: set() for e in g.edges}
    for v in g.vertices:
        at = g.incident_edges(v)
        for i in range(len(at)):
            for j in range(i + 1, len(at)):
                adj[at[i]].add(at[j])
                adj[at[j]].add(at[i])
    return adj


def _as_simple(g: SimpleGraph | BipartiteGraph) -> SimpleGraph:
    return g.to_simple() if isinstance(g, BipartiteGraph) else g


def d2_neighborhood(g: SimpleGraph | BipartiteGraph, e: Sequence[Node]) -> set[Edge]:
    """Edges at line-graph distance 1 or 2 from e (excluding e)."""
    gs = _as_simple(g)
    e = gs.edge_key(e)
    adj = _edge_adjacency(gs)
    out = set(adj[e])
    for f in adj[e]:
        out |= adj[f]
    out.discard(e)
    return out


def zeta(g: SimpleGraph | BipartiteGraph, e_prime: Sequence[Node], e: Sequence[Node]) -> int:
    """Overlap |D2(e') ∩ D2(e)| of two distance-2 edge neighborhoods;
    e' must itself lie in D2(e)."""
    gs = _as_simple(g)
    e = gs.edge_key(e)
    e_prime = gs.edge_key(e_prime)
    d2_e = d2_neighborhood(gs, e)
    if e_prime not in d2_e:
        raise ValueError(f"{e_prime!r} is not in the distance-2 neighborhood of {e!r}")
    return len(d2_neighborhood(gs, e_prime) & d2_e)


def all_d2_neighborhoods(g: SimpleGraph | BipartiteGraph) -> dict[Edge, set[Edge]]:
    """D2 sets for every edge in one pass."""
    gs = _as_simple(g)
    adj = _edge_adjacency(gs)
    out: dict[Edge, set[Edge]] = {}
    for e in gs.edges:
        d2 = set(adj[e])
        for f in adj[e]:
            d2 |= adj[f]
        d2.discard(e)
        out[e] = d2
    return out


def line_graph_square(g: SimpleGraph | BipartiteGraph) -> SimpleGraph:
    """Graph on the edge-nodes of g, adjacent when the underlying edges
    are at line-graph distance at most 2."""
    gs = _as_simple(g)
    d2 = all_d2_neighborhoods(gs)
    nodes = list(gs.edges)
    pos = {e: i for i, e in enumerate(nodes)}
    pairs = [
        (e, f)
        for e in nodes
        for f in d2[e]
        if pos[e] < pos[f]
    ]
    return SimpleGraph(nodes, pairs)


def conflict_graph(h: Hypergraph) -> ConflictGraph:
    """Adjacency graph of the incidences, ordered by (edge index,
    position in edge)."""
    incs = h.incidences()
    sets = h.edge_sets
    pairs = []
    for i in range(len(incs)):
        x1, e1 = incs[i]
        for j in range(i + 1, len(incs)):
            x2, e2 = incs[j]
            if x1 == x2 or {x1, x2} <= sets[e1] or {x1, x2} <= sets[e2]:
                pairs.append((incs[i], incs[j]))
    return ConflictGraph(source=h, graph=SimpleGraph(incs, pairs))


def is_k2t1_free(g: BipartiteGraph, t: int) -> bool:
    """True iff no two nodes on one side share t+1 common neighbors
    (checked for both sides by codegree counting)."""
    if t < 1:
        raise ValueError("t must be positive")
    for side in (g.part_u, g.part_v):
        other = g.part_v if side is g.part_u else g.part_u
        codeg: dict[tuple, int] = {}
        for w in other:
            ns = g.neighbors(w)
            for i in range(len(ns)):
                for j in range(i + 1, len(ns)):
                    key = (ns[i], ns[j])
                    c = codeg.get(key, 0) + 1
                    if c > t:
                        return False
                    codeg[key] = c
    return True


def biregular_profile(g: BipartiteGraph) -> tuple[int, int] | None:
    """(a, b) when every part_u node has degree a and every part_v node
    degree b; None otherwise (including when a part is empty)."""
    if not g.part_u or not g.part_v:
        return None
    du = {g.degree(v) for v in g.part_u}
    dv = {g.degree(v) for v in g.part_v}
    if len(du) == 1 and len(dv) == 1:
        return (du.pop(), dv.pop())
    return None
