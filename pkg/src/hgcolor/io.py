"""Text formats.

Hypergraph (.hg): one edge per line as whitespace-separated vertex
tokens; lines starting with '#' are comments; an optional first line
'vertices: v1 v2 ...' pins the vertex order and declares isolated
vertices.  Parse followed by serialize is byte-stable modulo comment
stripping (the header is emitted only when the edge lines alone would
not reproduce the vertex set and order).

Bipartite graph (.graph): a 'parts: u1 u2 ...' header naming the part_u
nodes, then one edge 'u v' per line; part_v is collected from the edge
lines in first-seen order.

Coloring (.coloring): a 'palette: k' header, then one 'vertex edge_index
color' line per incidence; 'bound:' lines are informational and skipped.
"""

from __future__ import annotations

from .coloring import IncidenceColoring
from .errors import ParseError
from .hypergraph import Hypergraph, Incidence
from .levi import BipartiteGraph


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((i, line))
    return out


def parse_hypergraph(text: str) -> Hypergraph:
    lines = _content_lines(text)
    vertices = None
    header_line = 1
    if lines and lines[0][1].split()[0] == "vertices:":
        header_line = lines[0][0]
        vertices = lines[0][1].split()[1:]
        lines = lines[1:]
    declared = set(vertices) if vertices is not None else None
    edges = []
    seen: set[frozenset[str]] = set()
    for lineno, line in lines:
        tokens = line.split()
        if len(set(tokens)) != len(tokens):
            raise ParseError(lineno, f"edge repeats a vertex: {line!r}")
        if declared is not None and not set(tokens) <= declared:
            missing = sorted(set(tokens) - declared)
            raise ParseError(lineno, f"undeclared vertices {missing}")
        fs = frozenset(tokens)
        if fs in seen:
            raise ParseError(lineno, f"duplicate edge {line!r}")
        seen.add(fs)
        edges.append(tokens)
    try:
        return Hypergraph(edges, vertices=vertices)
    except ValueError as exc:
        raise ParseError(header_line, str(exc)) from exc


def serialize_hypergraph(h: Hypergraph) -> str:
    derived = list(dict.fromkeys(v for e in h.edges for v in e))
    lines = []
    if derived != list(h.vertices):
        lines.append("vertices: " + " ".join(h.vertices))
    lines += [" ".join(e) for e in h.edges]
    return "\n".join(lines) + "\n" if lines else ""


def parse_bipartite(text: str) -> BipartiteGraph:
    lines = _content_lines(text)
    if not lines or lines[0][1].split()[0] != "parts:":
        raise ParseError(lines[0][0] if lines else 1, "expected a 'parts:' header")
    part_u = lines[0][1].split()[1:]
    useen = set(part_u)
    part_v: list[str] = []
    vseen = set()
    edges = []
    for lineno, line in lines[1:]:
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(lineno, f"expected 'u v', got {line!r}")
        u, v = tokens
        if u not in useen:
            raise ParseError(lineno, f"{u!r} is not in part_u")
        if v in useen:
            raise ParseError(lineno, f"{v!r} appears in both parts")
        if v not in vseen:
            vseen.add(v)
            part_v.append(v)
        edges.append((u, v))
    try:
        return BipartiteGraph(part_u, part_v, edges)
    except ValueError as exc:
        raise ParseError(1, str(exc)) from exc


def serialize_bipartite(g: BipartiteGraph) -> str:
    lines = ["parts: " + " ".join(str(u) for u in g.part_u)]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> IncidenceColoring:
    lines = _content_lines(text)
    palette = None
    assignment: dict[Incidence, int] = {}
    for lineno, line in lines:
        tokens = line.split()
        if tokens[0] == "palette:":
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise ParseError(lineno, f"bad palette line {line!r}")
            palette = int(tokens[1])
            continue
        if tokens[0] == "bound:":
            continue
        if len(tokens) != 3:
            raise ParseError(lineno, f"expected 'vertex edge_index color', got {line!r}")
        vertex, edge_index, color = tokens
        try:
            inc = Incidence(vertex, int(edge_index))
            col = int(color)
        except ValueError:
            raise ParseError(lineno, f"bad integers in {line!r}") from None
        if inc in assignment:
            raise ParseError(lineno, f"incidence {inc} assigned twice")
        assignment[inc] = col
    if palette is None:
        raise ParseError(1, "missing 'palette:' header")
    try:
        return IncidenceColoring(assignment, palette)
    except ValueError as exc:
        raise ParseError(1, str(exc)) from exc


def serialize_coloring(c: IncidenceColoring, extra_lines: list[str] | None = None) -> str:
    lines = [f"palette: {c.palette}"]
    if extra_lines:
        lines += extra_lines
    for inc in sorted(c.assignment, key=lambda i: (i.edge_index, i.vertex)):
        lines.append(f"{inc.vertex} {inc.edge_index} {c.assignment[inc]}")
    return "\n".join(lines) + "\n"


def serialize_embedding(vertex_map: dict[str, str], edge_map: dict[int, int]) -> str:
    lines = ["# vertices"]
    lines += [f"{v} -> {w}" for v, w in sorted(vertex_map.items())]
    lines.append("# edges")
    lines += [f"{i} -> {j}" for i, j in sorted(edge_map.items())]
    return "\n".join(lines) + "\n"
