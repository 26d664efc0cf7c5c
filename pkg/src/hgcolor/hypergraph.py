"""Hypergraph values, structural predicates, and derived quantities.

A hypergraph is a finite vertex set plus a family of non-empty vertex
subsets (edges).  Values are immutable after construction and safe to
share across threads; every operation returns a new object.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple


class Incidence(NamedTuple):
    """A (vertex, edge_index) pair with the vertex a member of that edge."""

    vertex: str
    edge_index: int


@dataclass(frozen=True)
class StructureReport:
    max_degree: int
    rank: int
    rho: int
    min_degree: int
    uniform_k: int | None
    regular_d: int | None
    linearity_t: int
    connected: bool


class Hypergraph:
    """Immutable hypergraph with deterministic vertex and edge order.

    Vertices are opaque string tokens, ordered by insertion (header order
    first, then first appearance in the edge list).  Edges are sets: the
    family may not contain two identical subsets.  Isolated vertices
    (degree 0) are permitted.
    """

    __slots__ = ("_vertices", "_vpos", "_edges", "_edge_sets", "_vertex_edges")

    def __init__(
        self,
        edges: Iterable[Iterable[str]],
        vertices: Iterable[str] | None = None,
    ):
        vorder: list[str] = []
        vpos: dict[str, int] = {}

        def intern(v: str) -> int:
            if not isinstance(v, str) or not v or v.split() != [v]:
                raise ValueError(f"bad vertex token {v!r}: must be a non-empty "
                                 "string without whitespace")
            if v not in vpos:
                vpos[v] = len(vorder)
                vorder.append(v)
            return vpos[v]

        declared = None
        if vertices is not None:
            declared = list(vertices)
            for v in declared:
                if v in vpos:
                    raise ValueError(f"duplicate vertex {v!r}")
                intern(v)

        edge_tuples: list[tuple[str, ...]] = []
        edge_sets: list[frozenset[str]] = []
        seen: set[frozenset[str]] = set()
        for i, raw in enumerate(edges):
            members = list(raw)
            if not members:
                raise ValueError(f"edge {i} is empty")
            fs = frozenset(members)
            if len(fs) != len(members):
                raise ValueError(f"edge {i} repeats a vertex: {sorted(members)}")
            if declared is not None and not fs <= vpos.keys():
                missing = sorted(fs - vpos.keys())
                raise ValueError(f"edge {i} uses undeclared vertices {missing}")
            if fs in seen:
                raise ValueError(f"duplicate edge {sorted(fs)} at index {i}")
            seen.add(fs)
            for v in members:
                intern(v)
            edge_tuples.append(tuple(sorted(fs, key=vpos.__getitem__)))
            edge_sets.append(fs)

        at: dict[str, list[int]] = {v: [] for v in vorder}
        for i, e in enumerate(edge_tuples):
            for v in e:
                at[v].append(i)

        object.__setattr__(self, "_vertices", tuple(vorder))
        object.__setattr__(self, "_vpos", vpos)
        object.__setattr__(self, "_edges", tuple(edge_tuples))
        object.__setattr__(self, "_edge_sets", tuple(edge_sets))
        object.__setattr__(self, "_vertex_edges", {v: tuple(ix) for v, ix in at.items()})

    def __setattr__(self, name, value):
        raise AttributeError("Hypergraph is immutable")

    # -- basic accessors ---------------------------------------------------

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[tuple[str, ...], ...]:
        """Edges as tuples, each sorted by canonical vertex order."""
        return self._edges

    @property
    def edge_sets(self) -> tuple[frozenset[str], ...]:
        return self._edge_sets

    @property
    def n_vertices(self) -> int:
        return len(self._vertices)

    @property
    def n_edges(self) -> int:
        return len(self._edges)

    def vertex_index(self, v: str) -> int:
        try:
            return self._vpos[v]
        except KeyError:
            raise ValueError(f"unknown vertex {v!r}") from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edge_sets == other._edge_sets

    def __hash__(self) -> int:
        return hash((self._vertices, self._edge_sets))

    def __repr__(self) -> str:
        es = ", ".join("{" + ",".join(e) + "}" for e in self._edges)
        return f"Hypergraph({self.n_vertices} vertices, edges=[{es}])"

    # -- degrees and incidences --------------------------------------------

    def edges_at(self, v: str) -> tuple[int, ...]:
        """Indices of the edges containing v."""
        self.vertex_index(v)
        return self._vertex_edges[v]

    def degree(self, v: str) -> int:
        return len(self.edges_at(v))

    def incidences(self) -> list[Incidence]:
        """All (vertex, edge_index) pairs, ordered by (edge index,
        position of the vertex inside the edge)."""
        return [Incidence(v, i) for i, e in enumerate(self._edges) for v in e]

    def is_incidence(self, inc: Incidence) -> bool:
        return 0 <= inc.edge_index < self.n_edges and inc.vertex in self._edge_sets[inc.edge_index]

    def incidences_adjacent(self, i1: Incidence, i2: Incidence) -> bool:
        """True iff the incidences share their vertex, or both vertices lie
        in either of the two edges."""
        for inc in (i1, i2):
            if not self.is_incidence(inc):
                raise ValueError(f"invalid incidence {inc!r}")
        if i1 == i2:
            raise ValueError("incidences must be distinct")
        if i1.vertex == i2.vertex:
            return True
        pair = {i1.vertex, i2.vertex}
        return pair <= self._edge_sets[i1.edge_index] or pair <= self._edge_sets[i2.edge_index]

    # -- induced / derived hypergraphs ---------------------------------------

    def induced(self, sub: Iterable[str], semantics: str = "trace") -> "Hypergraph":
        """Induced subhypergraph on a vertex set.

        semantics="whole-edge" keeps every edge that meets the set, whole
        (the result's vertex set then grows to cover those edges);
        semantics="trace" replaces each such edge by its intersection with
        the set, dropping duplicates and empties.
        """
        sel = list(dict.fromkeys(sub))
        if not sel:
            raise ValueError("induced vertex set must be non-empty")
        selset = set(sel)
        for v in sel:
            self.vertex_index(v)
        if semantics == "whole-edge":
            kept = [e for e, fs in zip(self._edges, self._edge_sets) if fs & selset]
            vs = [v for v in self._vertices if v in selset]
            covered = {v for e in kept for v in e}
            vs += [v for v in self._vertices if v in covered and v not in selset]
            vs.sort(key=self._vpos.__getitem__)
            return Hypergraph(kept, vertices=vs)
        if semantics == "trace":
            vs = [v for v in self._vertices if v in selset]
            out: list[tuple[str, ...]] = []
            seen: set[frozenset[str]] = set()
            for fs in self._edge_sets:
                cut = fs & selset
                if cut and cut not in seen:
                    seen.add(cut)
                    out.append(tuple(sorted(cut, key=self._vpos.__getitem__)))
            return Hypergraph(out, vertices=vs)
        raise ValueError(f"unknown induced semantics {semantics!r}")

    def minimization(self) -> "Hypergraph":
        """Drop every edge strictly contained in another edge."""
        kept = [
            e
            for e, fs in zip(self._edges, self._edge_sets)
            if not any(fs < other for other in self._edge_sets)
        ]
        return Hypergraph(kept, vertices=self._vertices)

    def delete_edge(self, index: int) -> "Hypergraph":
        if not 0 <= index < self.n_edges:
            raise ValueError(f"no edge at index {index}")
        return Hypergraph(
            [e for i, e in enumerate(self._edges) if i != index],
            vertices=self._vertices,
        )

    def delete_vertex(self, v: str) -> "Hypergraph":
        """Remove v from the vertex set and from every edge (trace
        semantics); resulting empty or duplicate edges are dropped."""
        self.vertex_index(v)
        rest = [u for u in self._vertices if u != v]
        if not rest:
            return Hypergraph([], vertices=[])
        return self.induced(rest, semantics="trace")

    def components(self) -> list["Hypergraph"]:
        """Maximal connected pieces; isolated vertices form their own
        edgeless components.  Ordered by smallest member vertex."""
        parent = list(range(self.n_vertices))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self._edges:
            root = find(self._vpos[e[0]])
            for v in e[1:]:
                parent[find(self._vpos[v])] = root

        groups: dict[int, list[str]] = {}
        for i, v in enumerate(self._vertices):
            groups.setdefault(find(i), []).append(v)

        out = []
        for key in sorted(groups, key=lambda r: min(self._vpos[v] for v in groups[r])):
            members = set(groups[key])
            comp_edges = [e for e, fs in zip(self._edges, self._edge_sets) if fs <= members]
            out.append(Hypergraph(comp_edges, vertices=groups[key]))
        return out

    # -- structure report ----------------------------------------------------

    def structure_report(self) -> StructureReport:
        if self.n_vertices == 0:
            raise ValueError("structure report of an empty hypergraph")
        degrees = [self.degree(v) for v in self._vertices]
        max_degree = max(degrees)
        min_degree = min(degrees)
        sizes = [len(e) for e in self._edges]
        rank = max(sizes, default=0)
        uniform_k = sizes[0] if sizes and len(set(sizes)) == 1 else None
        regular_d = degrees[0] if len(set(degrees)) == 1 else None
        return StructureReport(
            max_degree=max_degree,
            rank=rank,
            rho=max(rank, max_degree),
            min_degree=min_degree,
            uniform_k=uniform_k,
            regular_d=regular_d,
            linearity_t=self.linearity_t(),
            connected=len(self.components()) <= 1,
        )

    def linearity_t(self) -> int:
        """Smallest t for which the hypergraph is t-quasi-linear: the max of
        all pairwise edge-intersection sizes and all vertex-pair codegrees,
        floored at 1."""
        t = 1
        sets = self._edge_sets
        for i in range(len(sets)):
            for j in range(i + 1, len(sets)):
                t = max(t, len(sets[i] & sets[j]))
        codeg: dict[tuple[str, str], int] = {}
        for e in self._edges:
            for i in range(len(e)):
                for j in range(i + 1, len(e)):
                    key = (e[i], e[j])
                    codeg[key] = codeg.get(key, 0) + 1
        if codeg:
            t = max(t, max(codeg.values()))
        return t

    def is_linear(self) -> bool:
        return self.linearity_t() == 1
