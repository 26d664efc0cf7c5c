"""Seeded random instance generators.

All generators are pure functions of their parameters and seed (Python's
Mersenne Twister via random.Random), validate their own class predicate
before returning, and fail loudly with statistics when a rejection loop
runs out of tries.
"""

from __future__ import annotations

import heapq
import math
import random

from .acyclicity import is_alpha_acyclic
from .errors import ResourceCapError
from .hypergraph import Hypergraph
from .levi import BipartiteGraph, biregular_profile, is_k2t1_free


def prufer_decode(seq: list[int], n: int) -> list[tuple[int, int]]:
    """Labeled tree on nodes 0..n-1 from a sequence of length n-2."""
    if n < 1:
        raise ValueError("tree needs at least one node")
    if len(seq) != max(n - 2, 0):
        raise ValueError(f"sequence length must be {max(n - 2, 0)} for {n} nodes")
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return edges


def random_tree_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    """Uniform random labeled tree on 0..n-1."""
    if n <= 2:
        return prufer_decode([], n)
    return prufer_decode([rng.randrange(n) for _ in range(n - 2)], n)


def _bipartition(n: int, edges: list[tuple[int, int]]) -> list[int]:
    """2-coloring of a tree by parity of BFS depth from node 0."""
    adj: dict[int, list[int]] = {i: [] for i in range(n)}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    side = [-1] * n
    side[0] = 0
    queue = [0]
    while queue:
        u = queue.pop()
        for w in adj[u]:
            if side[w] < 0:
                side[w] = 1 - side[u]
                queue.append(w)
    return side


def gen_acyclic_linear(
    n_edge_nodes: int,
    max_r: int,
    max_degree: int,
    seed: int,
    max_tries: int = 10_000,
) -> Hypergraph:
    """Random alpha-acyclic linear hypergraph with n_edge_nodes edges.

    Draws uniform labeled trees, 2-colors them, and accepts when one side
    has exactly n_edge_nodes nodes whose degrees stay within max_r while
    the other side stays within max_degree; the accepted tree is read
    back as a hypergraph (its own Levi graph).
    """
    if n_edge_nodes < 1:
        raise ValueError("need at least one edge")
    if max_r < 1 or max_degree < 1:
        raise ValueError("degree caps must be positive")
    if max_r == 1 and n_edge_nodes > 1:
        raise ValueError("max_r=1 forces duplicate singleton edges")
    lo = 1 if max_degree == 1 else max(1, math.ceil((n_edge_nodes - 1) / (max_degree - 1)))
    hi = n_edge_nodes * (max_r - 1) + 1
    if max_degree == 1 and n_edge_nodes > 1:
        raise ValueError("max_degree=1 cannot connect more than one edge per tree")
    if lo > hi:
        raise ValueError(
            f"infeasible caps: need between {lo} and {hi} vertices for "
            f"{n_edge_nodes} edges"
        )
    rng = random.Random(seed)
    for _ in range(max_tries):
        n_vertex_nodes = rng.randint(lo, hi)
        n = n_edge_nodes + n_vertex_nodes
        edges = random_tree_edges(n, rng)
        side = _bipartition(n, edges)
        class0 = [i for i in range(n) if side[i] == 0]
        class1 = [i for i in range(n) if side[i] == 1]
        for edge_class, vertex_class in ((class0, class1), (class1, class0)):
            if len(edge_class) != n_edge_nodes:
                continue
            deg = [0] * n
            for u, v in edges:
                deg[u] += 1
                deg[v] += 1
            if any(deg[i] > max_r for i in edge_class):
                continue
            if any(deg[i] > max_degree for i in vertex_class):
                continue
            vname = {node: f"v{i}" for i, node in enumerate(vertex_class)}
            adj: dict[int, list[int]] = {i: [] for i in range(n)}
            for u, v in edges:
                adj[u].append(v)
                adj[v].append(u)
            family = [sorted(vname[w] for w in adj[e]) for e in edge_class]
            if len({frozenset(e) for e in family}) != len(family):
                continue  # two degree-1 edge nodes hanging off one vertex
            out = Hypergraph(family, vertices=[vname[i] for i in vertex_class])
            if not out.is_linear() or not is_alpha_acyclic(out):
                raise AssertionError("generator postcondition failed")
            return out
    raise ResourceCapError(
        f"no acceptable tree in {max_tries} tries "
        f"(n_edge_nodes={n_edge_nodes}, max_r={max_r}, max_degree={max_degree})"
    )


def gen_uniform_acyclic_linear(
    n_edges: int, k: int, delta: int, seed: int
) -> Hypergraph:
    """Random k-uniform alpha-acyclic linear hypergraph with max degree
    exactly delta (grown edge by edge: each new edge reuses exactly one
    existing vertex, so the Levi graph stays a tree)."""
    if k < 2:
        raise ValueError("uniform generator needs k >= 2")
    if delta < 1:
        raise ValueError("delta must be positive")
    if delta > 1 and n_edges < delta:
        raise ValueError(f"need at least {delta} edges to reach degree {delta}")
    rng = random.Random(seed)
    counter = 0

    def fresh() -> str:
        nonlocal counter
        counter += 1
        return f"v{counter - 1}"

    anchor = fresh()
    edges = [[anchor] + [fresh() for _ in range(k - 1)]]
    degree = {anchor: 1}
    for v in edges[0][1:]:
        degree[v] = 1
    # force the anchor up to the target degree, then attach freely
    for i in range(1, n_edges):
        if degree[anchor] < delta:
            host = anchor
        else:
            options = [v for v in degree if degree[v] < delta and v != anchor]
            host = rng.choice(options) if options else None
            if host is None:
                raise ResourceCapError(
                    f"all vertices saturated at degree {delta} after {i} edges"
                )
        new = [host] + [fresh() for _ in range(k - 1)]
        degree[host] += 1
        for v in new[1:]:
            degree[v] = 1
        edges.append(new)
    out = Hypergraph(edges)
    rep = out.structure_report()
    if (
        rep.uniform_k != k
        or rep.max_degree != delta
        or not out.is_linear()
        or not is_alpha_acyclic(out)
    ):
        raise AssertionError("generator postcondition failed")
    return out


def gen_biregular_k2t1_free(
    a: int,
    b: int,
    n_u: int,
    t: int,
    seed: int,
    max_tries: int = 100_000,
    allow_vacuous_t: bool = False,
) -> tuple[BipartiteGraph, int]:
    """Stub-matched (a,b)-regular bipartite graph, rejected until simple
    and K_{2,t+1}-free.  Returns (graph, tries used).

    a*n_u must be divisible by b (fixing the other side's size).  With
    t >= min(a, b) the freeness condition is vacuous; that is refused
    unless allow_vacuous_t is set.
    """
    if a < 1 or b < 1 or n_u < 1 or t < 1:
        raise ValueError("parameters must be positive")
    if (a * n_u) % b:
        raise ValueError(f"a*n_u = {a * n_u} is not divisible by b = {b}")
    if t >= min(a, b) and not allow_vacuous_t:
        raise ValueError(
            f"t={t} >= min(a,b)={min(a, b)} makes K_{{2,{t + 1}}}-freeness vacuous; "
            "pass allow_vacuous_t=True to accept"
        )
    n_v = a * n_u // b
    rng = random.Random(seed)
    part_u = [f"u{i}" for i in range(n_u)]
    part_v = [f"w{j}" for j in range(n_v)]
    simple_failures = 0
    free_failures = 0
    for tries in range(1, max_tries + 1):
        u_stubs = [i for i in range(n_u) for _ in range(a)]
        v_stubs = [j for j in range(n_v) for _ in range(b)]
        rng.shuffle(v_stubs)
        pairs = set(zip(u_stubs, v_stubs))
        if len(pairs) != len(u_stubs):
            simple_failures += 1
            continue
        g = BipartiteGraph(part_u, part_v, [(part_u[i], part_v[j]) for i, j in sorted(pairs)])
        if not is_k2t1_free(g, t):
            free_failures += 1
            continue
        if biregular_profile(g) != (a, b):
            raise AssertionError("generator postcondition failed")
        return g, tries
    raise ResourceCapError(
        f"no K_{{2,{t + 1}}}-free simple matching in {max_tries} tries "
        f"({simple_failures} multi-edge rejections, {free_failures} freeness rejections)"
    )


def _insertable(
    edge: frozenset[str],
    edge_sets: list[frozenset[str]],
    codegree: dict[frozenset[str], int],
    t: int,
) -> bool:
    if any(len(edge & f) > t for f in edge_sets):
        return False
    for pair in _pairs(edge):
        if codegree.get(pair, 0) + 1 > t:
            return False
    return True


def _pairs(edge: frozenset[str]) -> list[frozenset[str]]:
    items = sorted(edge)
    return [
        frozenset((items[i], items[j]))
        for i in range(len(items))
        for j in range(i + 1, len(items))
    ]


def gen_quasi_linear(
    n_vertices: int,
    n_edges: int,
    k: int,
    t: int,
    seed: int,
    max_tries_per_edge: int = 1_000,
    restarts: int = 50,
) -> Hypergraph:
    """Random k-uniform t-quasi-linear hypergraph on n_vertices vertices
    with exactly n_edges edges, by randomized insertion keeping pairwise
    intersections and codegrees within t."""
    if k < 1 or t < 1 or n_vertices < k or n_edges < 0:
        raise ValueError("bad parameters")
    if t == 1 and math.comb(n_vertices, 2) < n_edges * math.comb(k, 2):
        raise ValueError(
            f"infeasible: {n_edges} edges need {n_edges * math.comb(k, 2)} "
            f"distinct vertex pairs, only {math.comb(n_vertices, 2)} exist"
        )
    rng = random.Random(seed)
    names = [f"v{i}" for i in range(n_vertices)]
    for _ in range(restarts):
        edge_sets: list[frozenset[str]] = []
        codegree: dict[frozenset[str], int] = {}
        ok = True
        for _ in range(n_edges):
            placed = False
            for _ in range(max_tries_per_edge):
                cand = frozenset(rng.sample(names, k))
                if cand in edge_sets:
                    continue
                if _insertable(cand, edge_sets, codegree, t):
                    edge_sets.append(cand)
                    for pair in _pairs(cand):
                        codegree[pair] = codegree.get(pair, 0) + 1
                    placed = True
                    break
            if not placed:
                ok = False
                break
        if ok:
            out = Hypergraph([sorted(e) for e in edge_sets], vertices=names)
            if out.n_edges and out.linearity_t() > t:
                raise AssertionError("generator postcondition failed")
            return out
    raise ResourceCapError(
        f"could not place {n_edges} edges after {restarts} restarts "
        f"(n={n_vertices}, k={k}, t={t})"
    )


def gen_linear(
    n_vertices: int, n_edges: int, k: int, seed: int, **kwargs
) -> Hypergraph:
    """Random k-uniform linear hypergraph (pairwise intersections at most
    one vertex)."""
    return gen_quasi_linear(n_vertices, n_edges, k, 1, seed, **kwargs)
