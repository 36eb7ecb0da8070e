"""Command-line interface.

One executable, ``veds``, with solve / verify / order / decompose / reduce /
oracle / gen / bench subcommands over the text formats.  Results go to
stdout, diagnostics to stderr.  Exit codes: 0 success, 1 domain or contract
error, 2 input or parse error, 3 capacity error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .chains import decompose, verify_decomposition_lemma
from .errors import InputError, VedsError
from .graph import (
    BipartiteGraph,
    first_undominated_edge,
    parse_vertex_name,
    xref,
    yref,
)
from .io import (
    format_graph_text,
    load_graph,
    load_set_system,
    save_graph,
)
from .oracle import (
    GeneratorConfig,
    brute_force_gamma_ve,
    brute_force_min_cover,
    cross_check,
    gen_random_convex_bipartite,
)
from .ordering import (
    LexConvexOrdering,
    compute_lex_convex_ordering,
    find_convex_ordering_exhaustive,
    identity_permutation,
)
from .reductions import reduce_comb_convex, reduce_star_convex
from .solver import solve_baseline, solve_exact

GRAMMAR_HELP = """\
graph file grammar ('#' starts a comment):
    graph <n1> <n2>
    edge <i> <j>                  # one line per edge x_i ~ y_j
    yorder <j1> ... <jn2>         # optional declared convex ordering of Y

set-system file grammar:
    universe <p>
    set <j>: <e1> <e2> ...        # j consecutive from 1
"""


def _ordering_for(path: str) -> tuple[BipartiteGraph, LexConvexOrdering]:
    g, yorder = load_graph(path)
    if yorder is None:
        found = find_convex_ordering_exhaustive(g)
        if found is None:
            raise InputError(
                f"{path}: graph is not convex on Y; no ordering exists"
            )
        yorder = found
    return g, compute_lex_convex_ordering(g, yorder)


def _witness_names(refs) -> list[str]:
    return sorted((v.name() for v in refs), key=lambda s: (s[0], int(s[1:])))


def _cmd_solve(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    if args.algorithm == "bruteforce":
        g, _ = load_graph(args.file)
        result = brute_force_gamma_ve(g)
    else:
        g, ordering = _ordering_for(args.file)
        if args.algorithm == "exact":
            result = solve_exact(g, ordering)
        else:
            result = solve_baseline(g, ordering, decompose(g, ordering))
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    if args.json:
        payload = {
            "gamma_ve": result.gamma_ve,
            "witness": _witness_names(result.witness),
            "algorithm": args.algorithm,
            "elapsed_ms": elapsed_ms,
        }
        if args.trace:
            payload["trace"] = [
                {"subproblem": list(s.subproblem), "branch": s.branch, "chosen": s.chosen}
                for s in result.trace
            ]
        print(json.dumps(payload))
    else:
        print(f"gamma_ve = {result.gamma_ve}")
        if args.emit_set:
            print("witness = {" + ", ".join(_witness_names(result.witness)) + "}")
        if args.trace:
            for s in result.trace:
                print(f"trace: at ({s.subproblem[0]}, {s.subproblem[1]}) took {s.branch}"
                      + (f" choosing {s.chosen}" if s.chosen else ""))
    return 0


def _parse_set_arg(text: str):
    names = text.replace(",", " ").split()
    if not names:
        raise InputError("--set needs at least one vertex name")
    return frozenset(parse_vertex_name(n) for n in names)


def _cmd_verify(args: argparse.Namespace) -> int:
    g, _ = load_graph(args.file)
    d = _parse_set_arg(args.set)
    g.check_refs(d)
    offending = first_undominated_edge(g, d)
    valid = offending is None
    if args.json:
        payload = {"valid": valid}
        if offending:
            payload["undominated_edge"] = [f"x{offending[0]}", f"y{offending[1]}"]
        print(json.dumps(payload))
    elif valid:
        print("VALID")
    else:
        print(f"INVALID: edge x{offending[0]} y{offending[1]} is not dominated")
    return 0 if valid else 1


def _cmd_order(args: argparse.Namespace) -> int:
    g, ordering = _ordering_for(args.file)
    if args.json:
        print(json.dumps({
            "xperm": list(ordering.xperm),
            "yperm": list(ordering.yperm),
            "left_x": list(ordering.left_x),
            "right_x": list(ordering.right_x),
            "left_y": list(ordering.left_y),
            "right_y": list(ordering.right_y),
        }))
        return 0
    print("xperm: " + " ".join(f"x{i}" for i in ordering.xperm))
    print("yperm: " + " ".join(f"y{j}" for j in ordering.yperm))
    print(f"{'pos':>4} {'x':>6} {'left':>5} {'right':>6}")
    for p, i in enumerate(ordering.xperm, start=1):
        left = ordering.left_x[p - 1]
        right = ordering.right_x[p - 1]
        print(f"{p:>4} {'x' + str(i):>6} {left if left else '-':>5} {right if right else '-':>6}")
    print(f"{'pos':>4} {'y':>6} {'left':>5} {'right':>6}")
    for p, j in enumerate(ordering.yperm, start=1):
        left = ordering.left_y[p - 1]
        right = ordering.right_y[p - 1]
        print(f"{p:>4} {'y' + str(j):>6} {left if left else '-':>5} {right if right else '-':>6}")
    return 0


def _name_set(refs) -> str:
    return "{" + ", ".join(_witness_names(refs)) + "}"


def _cmd_decompose(args: argparse.Namespace) -> int:
    g, ordering = _ordering_for(args.file)
    decomp = decompose(g, ordering)
    report = verify_decomposition_lemma(g, decomp)
    if args.json:
        print(json.dumps({
            "chains": [
                {"x": sorted(hx), "y": sorted(hy)} for hx, hy in decomp.chains
            ],
            "isolated_sets": [sorted(js) for js in decomp.isolated_sets],
            "tail_isolated": _witness_names(decomp.tail_isolated),
            "lemma_checks": [
                {"chain": c.chain_index, "clause": c.clause, "ok": c.ok, "detail": c.detail}
                for c in report.checks
            ],
            "lemma_passed": report.passed,
        }))
        return 0
    for k, ((hx, hy), js) in enumerate(zip(decomp.chains, decomp.isolated_sets), start=1):
        print(f"chain {k}: X = {_name_set(xref(i) for i in hx)}  "
              f"Y = {_name_set(yref(j) for j in hy)}")
        if js:
            print(f"isolated after chain {k}: {_name_set(xref(i) for i in js)}")
    if decomp.tail_isolated:
        print(f"tail (flagged): {_name_set(decomp.tail_isolated)}")
    for c in report.checks:
        print(f"[chain {c.chain_index}] {c.clause}: {'pass' if c.ok else 'FAIL'} ({c.detail})")
    print(f"lemma verification: {'all clauses passed' if report.passed else 'FAILED'}")
    return 0


def _format_certificate(art) -> str:
    cert = art.certificate
    roles = {ref: name for name, ref in art.vertex_roles}
    if cert.kind == "star":
        return f"tree star center={roles[xref(cert.center)]}\n"
    backbone = ",".join(roles[xref(r)] for r in cert.backbone)
    teeth = ",".join(f"{roles[xref(t)]}:{roles[xref(r)]}" for r, t in cert.teeth)
    return f"tree comb backbone={backbone} teeth={teeth}\n"


def _cmd_reduce(args: argparse.Namespace) -> int:
    ss = load_set_system(args.file)
    art = reduce_star_convex(ss) if args.target == "star" else reduce_comb_convex(ss)
    text = format_graph_text(art.graph)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        if args.certify:
            Path(args.out + ".cert").write_text(_format_certificate(art), encoding="utf-8")
    else:
        print(text, end="")
        if args.certify:
            print(_format_certificate(art), end="")
    for name, ref in art.vertex_roles:
        print(f"{name} = {ref.name()}", file=sys.stderr if args.out is None else sys.stdout)
    if art.coverless:
        print("warning: some element lies in no set (no cover exists)", file=sys.stderr)
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    if args.kind == "ve":
        g, _ = load_graph(args.file)
        result = brute_force_gamma_ve(g)
        if args.json:
            print(json.dumps({
                "gamma_ve": result.gamma_ve,
                "witness": _witness_names(result.witness),
                "algorithm": "bruteforce",
            }))
        else:
            print(f"gamma_ve = {result.gamma_ve}")
            print("witness = " + _name_set(result.witness))
    else:
        ss = load_set_system(args.file)
        cover = brute_force_min_cover(ss)
        if args.json:
            print(json.dumps({"cover": sorted(cover) if cover is not None else None}))
        elif cover is None:
            print("cover = none")
        else:
            print(f"cover size = {len(cover)}")
            print("cover = {" + ", ".join(str(j) for j in sorted(cover)) + "}")
    return 0


def _cmd_gen(args: argparse.Namespace) -> int:
    g = gen_random_convex_bipartite(GeneratorConfig(
        n1=args.n1,
        n2=args.n2,
        density=args.density,
        seed=args.seed,
        require_connected=args.connected,
    ))
    print(format_graph_text(g, yorder=identity_permutation(g.n2)), end="")
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    report = cross_check(args.trials, args.max_n, args.seed)
    if args.json:
        print(json.dumps(report.to_json_dict()))
    else:
        print(report.to_text(), end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="veds",
        description="Minimum vertex-edge domination on convex bipartite graphs.",
        epilog=GRAMMAR_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="compute gamma_ve of a graph file")
    p.add_argument("file")
    p.add_argument("--algorithm", choices=["exact", "baseline", "bruteforce"], default="exact")
    p.add_argument("--emit-set", action="store_true", help="print the witness set")
    p.add_argument("--trace", action="store_true", help="print recursion decisions")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_solve)

    p = sub.add_parser("verify", help="check a vertex set against the domination definition")
    p.add_argument("file")
    p.add_argument("--set", required=True, help="comma/space-separated names, e.g. 'x1,y2'")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("order", help="print the lexicographic convex ordering")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_order)

    p = sub.add_parser("decompose", help="print the chain decomposition and its checks")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("reduce", help="reduce a set system to a domination instance")
    p.add_argument("file")
    p.add_argument("--target", choices=["star", "comb"], required=True)
    p.add_argument("--out", help="write the graph here instead of stdout")
    p.add_argument("--certify", action="store_true", help="emit the witness tree")
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser("oracle", help="brute-force ground truth")
    osub = p.add_subparsers(dest="kind", required=True)
    q = osub.add_parser("ve", help="exhaustive minimum VED-set")
    q.add_argument("file")
    q.add_argument("--json", action="store_true")
    q.set_defaults(handler=_cmd_oracle, kind="ve")
    q = osub.add_parser("setcover", help="exhaustive minimum set cover")
    q.add_argument("file")
    q.add_argument("--json", action="store_true")
    q.set_defaults(handler=_cmd_oracle, kind="setcover")

    p = sub.add_parser("gen", help="generate random instances")
    gsub = p.add_subparsers(dest="family", required=True)
    q = gsub.add_parser("convex", help="random convex bipartite graph (identity yorder)")
    q.add_argument("--n1", type=int, required=True)
    q.add_argument("--n2", type=int, required=True)
    q.add_argument("--density", type=float, required=True)
    q.add_argument("--seed", type=int, required=True)
    q.add_argument("--connected", action="store_true")
    q.set_defaults(handler=_cmd_gen)

    p = sub.add_parser("bench", help="cross-check exact solver against brute force")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except VedsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except BrokenPipeError:
        return 0


def run_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run_main()
