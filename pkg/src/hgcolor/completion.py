"""Embedding a t-quasi-linear hypergraph into a uniform regular one.

Two steps: pad every short edge with fresh degree-1 vertices until the
hypergraph is rank-uniform, then repeatedly take rank-many disjoint
copies glued by one new edge across the copies of each deficient vertex.
Each glue round raises the minimum degree by exactly one and changes
neither the maximum degree nor the quasi-linearity parameter, so after
(max_degree - min_degree) rounds the result is regular.  The blow-up is
exponential and guarded by a hard size cap; this is a proof device, not
a compression scheme.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ResourceCapError
from .hypergraph import Hypergraph
from .levi import biregular_profile, is_k2t1_free, levi_graph


@dataclass(frozen=True)
class Embedding:
    """Injective maps taking original vertices/edges into the output;
    each original edge is contained in its image edge."""

    vertex_map: dict[str, str]
    edge_map: dict[int, int]


@dataclass(frozen=True)
class CompletionCheck:
    name: str
    passed: bool
    detail: str


def _fresh_pad_names(h: Hypergraph) -> str:
    prefix = "z"
    existing = set(h.vertices)
    while any(v.startswith(prefix) for v in existing):
        prefix = "z" + prefix
    return prefix


def pad_uniform(h: Hypergraph) -> tuple[Hypergraph, Embedding]:
    """Grow every edge to the rank with fresh degree-1 vertices; the
    fresh sets are pairwise disjoint and disjoint from the original
    vertices, so max degree and quasi-linearity are untouched."""
    report = h.structure_report()
    if report.rank < 2:
        raise ValueError("padding needs rank >= 2")
    prefix = _fresh_pad_names(h)
    new_edges = []
    all_pads: list[str] = []
    for i, e in enumerate(h.edges):
        need = report.rank - len(e)
        pads = [f"{prefix}{i}.{j}" for j in range(need)]
        all_pads += pads
        new_edges.append(list(e) + pads)
    out = Hypergraph(new_edges, vertices=list(h.vertices) + all_pads)
    emb = Embedding(
        vertex_map={v: v for v in h.vertices},
        edge_map={i: i for i in range(h.n_edges)},
    )
    return out, emb


def regularize_step(h: Hypergraph) -> Hypergraph:
    """One glue round: rank-many disjoint copies plus one new edge per
    deficient vertex joining its copies.  Requires a uniform input with
    min degree below max degree."""
    report = h.structure_report()
    k = report.uniform_k
    if k is None:
        raise ValueError("glue step needs a uniform hypergraph")
    if k < 2:
        raise ValueError("glue step needs edges of size >= 2")
    if report.min_degree >= report.max_degree:
        raise ValueError("input is already regular")
    copies = range(1, k + 1)
    vertices = [f"{v}#{c}" for c in copies for v in h.vertices]
    edges = [[f"{v}#{c}" for v in e] for c in copies for e in h.edges]
    deficient = [v for v in h.vertices if h.degree(v) < report.max_degree]
    edges += [[f"{v}#{c}" for c in copies] for v in deficient]
    return Hypergraph(edges, vertices=vertices)


def complete(h: Hypergraph, cap: int = 10**6) -> tuple[Hypergraph, Embedding]:
    """Full construction: pad to uniform, then glue until regular.

    The projected incidence count k**(max_degree - min_degree) * |I| is
    checked against the cap up front.
    """
    report = h.structure_report()
    if report.rank < 2:
        raise ValueError(
            "completion needs rank >= 2 (a rank-1 hypergraph needs no completion)"
        )
    current, emb = pad_uniform(h)
    rep = current.structure_report()
    k = rep.rank
    incidences = sum(len(e) for e in current.edges)
    projected = incidences * k ** (rep.max_degree - rep.min_degree)
    if projected > cap:
        raise ResourceCapError(
            f"projected completion size {projected} incidences exceeds cap {cap}"
        )
    vmap = dict(emb.vertex_map)
    emap = dict(emb.edge_map)
    while True:
        rep = current.structure_report()
        if rep.min_degree >= rep.max_degree:
            break
        current = regularize_step(current)
        # copy 1 carries the embedded image; its edges keep their indices
        vmap = {v: f"{w}#1" for v, w in vmap.items()}
    return current, Embedding(vertex_map=vmap, edge_map=emap)


def check_completion(
    h: Hypergraph, h_star: Hypergraph, embedding: Embedding
) -> list[CompletionCheck]:
    """Postcondition audit: uniformity at the original rank, regularity
    at the original max degree, no growth of the quasi-linearity
    parameter, a valid embedding, and a biregular K_{2,t+1}-free Levi
    graph.  Failures are reported, not raised."""
    checks: list[CompletionCheck] = []
    rep = h.structure_report()
    rep_star = h_star.structure_report()

    checks.append(
        CompletionCheck(
            "uniform",
            rep_star.uniform_k == rep.rank,
            f"uniform_k={rep_star.uniform_k}, expected {rep.rank}",
        )
    )
    checks.append(
        CompletionCheck(
            "regular",
            rep_star.regular_d == rep.max_degree,
            f"regular_d={rep_star.regular_d}, expected {rep.max_degree}",
        )
    )
    checks.append(
        CompletionCheck(
            "quasi_linearity",
            rep_star.linearity_t <= rep.linearity_t,
            f"t={rep_star.linearity_t}, input t={rep.linearity_t}",
        )
    )

    star_vertices = set(h_star.vertices)
    images = list(embedding.vertex_map.values())
    injective = len(set(images)) == len(images)
    total = set(embedding.vertex_map) == set(h.vertices)
    in_range = set(images) <= star_vertices
    edge_ok = True
    detail = "ok"
    if set(embedding.edge_map) != set(range(h.n_edges)):
        edge_ok = False
        detail = "edge map is not total"
    else:
        for i, j in embedding.edge_map.items():
            if not 0 <= j < h_star.n_edges:
                edge_ok = False
                detail = f"edge {i} maps outside the output"
                break
            image = {embedding.vertex_map.get(v) for v in h.edges[i]}
            if None in image or not image <= h_star.edge_sets[j]:
                edge_ok = False
                detail = f"edge {i} image is not inside output edge {j}"
                break
        if edge_ok and len(set(embedding.edge_map.values())) != h.n_edges:
            edge_ok = False
            detail = "edge map is not injective"
    checks.append(
        CompletionCheck(
            "embedding",
            injective and total and in_range and edge_ok,
            detail if not (injective and total and in_range and edge_ok) else "ok",
        )
    )

    levi = levi_graph(h_star)
    profile = biregular_profile(levi)
    checks.append(
        CompletionCheck(
            "levi_biregular",
            profile == (rep.max_degree, rep.rank),
            f"profile={profile}, expected {(rep.max_degree, rep.rank)}",
        )
    )
    checks.append(
        CompletionCheck(
            "levi_k2t1_free",
            is_k2t1_free(levi, rep.linearity_t),
            f"t={rep.linearity_t}",
        )
    )
    return checks
