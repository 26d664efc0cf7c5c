"""Command-line entry point.

Exit codes: 0 success, 1 check or verification failure, 2 usage or
parse error, 3 resource cap exceeded (size caps, solver budget,
generator retry limits).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io as formats
from .acyclicity import gyo_reduce, is_alpha_acyclic, is_alpha_acyclic_brute
from .bounds import bound_table, sparsity_empirical, zeta_sum_audit
from .coloring import exact_chromatic, greedy_color, verify_incidence
from .completion import check_completion, complete
from .errors import ParseError, ResourceCapError
from .generators import (
    gen_acyclic_linear,
    gen_biregular_k2t1_free,
    gen_linear,
    gen_quasi_linear,
    gen_uniform_acyclic_linear,
)
from .hypergraph import Hypergraph
from .tree_color import color_acyclic_linear

OK, CHECK_FAILED, USAGE, CAPPED = 0, 1, 2, 3


class CheckFailure(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(0, f"cannot read {path}: {exc}") from exc


def _load_hypergraph(path: str) -> Hypergraph:
    return formats.parse_hypergraph(_read(path))


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    sys.stdout.write(text if not out else f"wrote {out}\n")


def _cmd_check(args) -> int:
    h = _load_hypergraph(args.file)
    rep = h.structure_report()
    print(f"vertices:    {h.n_vertices}")
    print(f"edges:       {h.n_edges}")
    print(f"max_degree:  {rep.max_degree}")
    print(f"rank:        {rep.rank}")
    print(f"rho:         {rep.rho}")
    print(f"min_degree:  {rep.min_degree}")
    print(f"uniform_k:   {rep.uniform_k if rep.uniform_k is not None else '-'}")
    print(f"regular_d:   {rep.regular_d if rep.regular_d is not None else '-'}")
    print(f"linearity_t: {rep.linearity_t}")
    print(f"connected:   {'yes' if rep.connected else 'no'}")
    print(f"alpha_acyclic: {'yes' if is_alpha_acyclic(h) else 'no'}")
    return OK


def _cmd_color(args) -> int:
    h = _load_hypergraph(args.file)
    extra = None
    if args.method == "greedy":
        coloring = greedy_color(h, order=args.order)
    elif args.method == "exact":
        result = exact_chromatic(h, budget=args.budget)
        if not result.optimal:
            print(
                f"exact palette unknown: bounds [{result.lower}, {result.upper}] "
                f"after {result.nodes} nodes",
                file=sys.stderr,
            )
            return CAPPED
        coloring = result.witness
    else:  # tree
        try:
            coloring = color_acyclic_linear(h)
        except ValueError as exc:
            raise CheckFailure(str(exc)) from exc
        rep = h.structure_report()
        extra = [f"bound: max_degree+rank-1 = {rep.max_degree + rep.rank - 1}"]
    _emit(formats.serialize_coloring(coloring, extra_lines=extra), args.out)
    return OK


def _cmd_verify(args) -> int:
    h = _load_hypergraph(args.file)
    try:
        coloring = formats.parse_coloring(_read(args.coloring))
        violations = verify_incidence(h, coloring)
    except (ParseError, ValueError) as exc:
        raise CheckFailure(f"coloring rejected: {exc}") from exc
    if violations:
        for a, b in violations:
            print(f"conflict: ({a.vertex},{a.edge_index}) vs ({b.vertex},{b.edge_index})")
        raise CheckFailure(f"{len(violations)} violations")
    print(f"ok: proper incidence coloring with palette {coloring.palette}")
    return OK


def _cmd_complete(args) -> int:
    h = _load_hypergraph(args.file)
    star, embedding = complete(h, cap=args.cap)
    _emit(formats.serialize_hypergraph(star), args.out)
    if args.embedding_out:
        Path(args.embedding_out).write_text(
            formats.serialize_embedding(embedding.vertex_map, embedding.edge_map),
            encoding="utf-8",
        )
        print(f"wrote {args.embedding_out}")
    checks = check_completion(h, star, embedding)
    for c in checks:
        print(f"check {c.name}: {'pass' if c.passed else 'FAIL (' + c.detail + ')'}")
    if not all(c.passed for c in checks):
        raise CheckFailure("completion postcondition failed")
    return OK


def _cmd_acyclicity(args) -> int:
    h = _load_hypergraph(args.file)
    if args.method == "brute":
        verdict = is_alpha_acyclic_brute(h, cap=args.cap)
        print(f"alpha-acyclic: {'yes' if verdict else 'no'}")
        return OK
    trace = gyo_reduce(h)
    for step in trace.steps:
        item = step.item if isinstance(step.item, str) else f"e{step.item}"
        print(f"{step.rule} {item}")
    print(f"residual: {'empty' if trace.residual_empty else 'nonempty'}")
    return OK


def _cmd_audit(args) -> int:
    g = formats.parse_bipartite(_read(args.graph))
    if args.what == "zeta":
        if args.t is None:
            raise ParseError(0, "audit zeta requires --t")
        try:
            audit = zeta_sum_audit(g, args.t)
        except ValueError as exc:
            raise CheckFailure(str(exc)) from exc
        print(f"profile: ({audit.profile[0]},{audit.profile[1]})  t: {audit.t}")
        print(f"{'edge':<20} {'zeta_sum':>9} {'bound':>7} {'slack':>7}")
        for row in audit.per_edge:
            name = f"{row.edge[0]}-{row.edge[1]}"
            print(f"{name:<20} {row.zeta_sum:>9} {row.poly_bound:>7} {row.slack:>7}")
        print(f"max_ratio: {audit.max_ratio}")
        if args.out:
            lines = [f"profile_a={audit.profile[0]}", f"profile_b={audit.profile[1]}",
                     f"t={audit.t}", f"max_ratio={audit.max_ratio}"]
            lines += [
                f"zeta_sum[{r.edge[0]}-{r.edge[1]}]={r.zeta_sum}" for r in audit.per_edge
            ]
            Path(args.out).write_text("\n".join(lines) + "\n", encoding="utf-8")
        return OK
    report = sparsity_empirical(g, t=args.t)
    print(f"square_max_degree: {report.square_max_degree}")
    print(f"max_neighborhood_edges: {report.max_neighborhood_edges}")
    print(f"sigma_emp: {report.sigma_emp} (= {float(report.sigma_emp):.6f})")
    if report.asymptotic_target is not None:
        print(f"asymptotic_target: {report.asymptotic_target:.6f} (comparison only)")
    if args.out:
        lines = [f"sigma_emp={report.sigma_emp}",
                 f"square_max_degree={report.square_max_degree}",
                 f"max_neighborhood_edges={report.max_neighborhood_edges}"]
        if report.asymptotic_target is not None:
            lines.append(f"asymptotic_target={report.asymptotic_target}")
        Path(args.out).write_text("\n".join(lines) + "\n", encoding="utf-8")
    return OK


def _cmd_bounds(args) -> int:
    h = _load_hypergraph(args.file)
    table = bound_table(h, with_exact=args.exact, budget=args.budget)
    print(f"{'bound':<15} {'kind':<6} {'value':>12} {'flags':<12} note")
    kv = []
    for row in table.rows:
        if not row.applicable:
            value = "-"
        elif isinstance(row.value, float):
            value = f"{row.value:.3f}"
        else:
            value = str(row.value)
        flags = []
        if not row.applicable:
            flags.append("n/a")
        if row.asymptotic:
            flags.append("asymptotic")
        print(f"{row.name:<15} {row.kind:<6} {value:>12} {','.join(flags) or '-':<12} {row.note}")
        if row.applicable:
            kv.append(f"{row.name}={row.value}")
    if args.out:
        Path(args.out).write_text("\n".join(kv) + "\n", encoding="utf-8")
    return OK


def _cmd_gen(args) -> int:
    if args.klass == "acyclic-linear":
        h = gen_acyclic_linear(args.edges, args.rank, args.degree, args.seed)
        text = formats.serialize_hypergraph(h)
    elif args.klass == "uniform-acyclic-linear":
        h = gen_uniform_acyclic_linear(args.edges, args.k, args.degree, args.seed)
        text = formats.serialize_hypergraph(h)
    elif args.klass == "linear":
        h = gen_linear(args.vertices, args.edges, args.k, args.seed)
        text = formats.serialize_hypergraph(h)
    elif args.klass == "quasi-linear":
        h = gen_quasi_linear(args.vertices, args.edges, args.k, args.t, args.seed)
        text = formats.serialize_hypergraph(h)
    else:  # biregular
        g, tries = gen_biregular_k2t1_free(
            args.a, args.b, args.n_u, args.t, args.seed, max_tries=args.max_tries
        )
        print(f"# accepted after {tries} tries", file=sys.stderr)
        text = formats.serialize_bipartite(g)
    _emit(text, args.out)
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hgcolor",
        description="Incidence coloring of hypergraphs: structure checks, "
        "coloring, verification, completion, and counting audits.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="structure report and acyclicity")
    p.add_argument("file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("color", help="color the incidences of a hypergraph")
    p.add_argument("file")
    p.add_argument("--method", choices=["greedy", "exact", "tree"], default="greedy")
    p.add_argument("--order", choices=["canonical", "levi-bfs"], default="canonical",
                   help="greedy traversal order")
    p.add_argument("--budget", type=int, default=10_000_000,
                   help="node budget for the exact solver")
    p.add_argument("--out", help="write the coloring file here")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("verify", help="verify a coloring file against a hypergraph")
    p.add_argument("file")
    p.add_argument("coloring")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("complete", help="embed into a uniform regular hypergraph")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=10**6,
                   help="maximum projected incidence count")
    p.add_argument("--out", help="write the completed hypergraph here")
    p.add_argument("--embedding-out", help="write the embedding here")
    p.set_defaults(func=_cmd_complete)

    p = sub.add_parser("acyclicity", help="reduction trace or brute-force verdict")
    p.add_argument("file")
    p.add_argument("--method", choices=["gyo", "brute"], default="gyo")
    p.add_argument("--cap", type=int, default=12,
                   help="vertex cap for the brute-force oracle")
    p.set_defaults(func=_cmd_acyclicity)

    p = sub.add_parser("audit", help="distance-2 counting audits on a bipartite graph")
    p.add_argument("what", choices=["zeta", "sparsity"])
    p.add_argument("graph")
    p.add_argument("--t", type=int, default=None, help="quasi-linearity parameter")
    p.add_argument("--out", help="write name=value pairs here")
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("bounds", help="palette bound table for a hypergraph")
    p.add_argument("file")
    p.add_argument("--exact", action="store_true", help="also run the exact solver")
    p.add_argument("--budget", type=int, default=10_000_000)
    p.add_argument("--out", help="write name=value pairs here")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("gen", help="seeded random instances")
    p.add_argument("klass", choices=["acyclic-linear", "uniform-acyclic-linear",
                                     "linear", "quasi-linear", "biregular"])
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--edges", type=int, default=5)
    p.add_argument("--vertices", type=int, default=12)
    p.add_argument("--rank", type=int, default=3, help="edge size cap (acyclic-linear)")
    p.add_argument("--degree", type=int, default=3, help="vertex degree cap or target")
    p.add_argument("--k", type=int, default=3, help="edge size (uniform classes)")
    p.add_argument("--t", type=int, default=1)
    p.add_argument("--a", type=int, default=2)
    p.add_argument("--b", type=int, default=2)
    p.add_argument("--n-u", dest="n_u", type=int, default=3)
    p.add_argument("--max-tries", dest="max_tries", type=int, default=100_000)
    p.add_argument("--out", help="write the instance here")
    p.set_defaults(func=_cmd_gen)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code not in (0, None) else OK
    try:
        return args.func(args)
    except CheckFailure as exc:
        print(f"FAILED: {exc}", file=sys.stderr)
        return CHECK_FAILED
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except ResourceCapError as exc:
        print(f"capped: {exc}", file=sys.stderr)
        return CAPPED
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
