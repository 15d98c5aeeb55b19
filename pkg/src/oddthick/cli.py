"""``oddthick`` command line: solve, verify, generate, thickness, critical, discharge, claims.

Exit codes: 0 success, 1 refuted claim or failed verification, 2 usage or
input error, 3 budget exhausted with the answer still unknown.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import generators
from .budget import Budget
from .canonical import MAX_ENUM_N, connected_graphs
from .coloring import VertexColoring, odd_verdict
from .critical import (
    MINOR_MAX_N,
    is_odd_k_minor_critical,
    reports_to_csv,
    reports_to_jsonl,
    search_critical,
)
from .discharging import verify_certificate
from .errors import BudgetExhausted, InvariantError, OddThickError
from .formats import parse_graph, read_graph6_lines, serialize_graph, to_graph6
from .graph import Graph
from .planarity import planar_embed
from .solvers import chromatic_number, odd_chromatic_number
from .thickness import EdgePartition, thickness

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_UNKNOWN = 0, 1, 2, 3

log = logging.getLogger("oddthick")


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# input and output helpers
# ---------------------------------------------------------------------------


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _sniff(path: str, text: str) -> str:
    suffix = Path(path).suffix.lower()
    if suffix in (".g6", ".graph6"):
        return "graph6"
    if suffix in (".dimacs", ".col"):
        return "dimacs"
    if suffix in (".edges", ".edgelist", ".el"):
        return "edge_list"
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith(("#", "c "))]
    if lines and lines[0].startswith("p "):
        return "dimacs"
    if len(lines) == 1 and " " not in lines[0] and "=" not in lines[0]:
        return "graph6"
    return "edge_list"


def load_graph(args: argparse.Namespace) -> Graph:
    chosen = [name for name in ("graph6", "edgelist", "dimacs", "graph") if getattr(args, name, None)]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --graph6, --edgelist, --dimacs, --graph")
    which = chosen[0]
    value = getattr(args, which)
    if which == "graph6":
        # a literal string unless it names an existing file
        text = _read(value) if value == "-" or Path(value).is_file() else value
        return parse_graph(text.strip(), "graph6")
    text = _read(value)
    fmt = {"edgelist": "edge_list", "dimacs": "dimacs"}.get(which) or _sniff(value, text)
    return parse_graph(text.strip() if fmt == "graph6" else text, fmt)


def budget_of(args: argparse.Namespace) -> Budget:
    return Budget(max_nodes=args.budget_nodes, max_seconds=args.budget_seconds)


def emit(args: argparse.Namespace, name: str, doc: dict | str) -> None:
    if not args.out:
        return
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    text = doc if isinstance(doc, str) else json.dumps(doc, indent=2, sort_keys=True) + "\n"
    (out / name).write_text(text)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_solve(args: argparse.Namespace) -> int:
    g = load_graph(args)
    label = "chi_o" if args.odd else "chi"
    if args.odd:
        res = odd_chromatic_number(g, budget_of(args), lookahead=args.lookahead)
    else:
        res = chromatic_number(g, budget_of(args))
    doc = {
        "graph": to_graph6(g),
        "quantity": label,
        "exact": res.exact,
        "value": res.k,
        "lower": res.lower,
        "upper": res.upper,
        "refuted_palettes": list(res.refuted),
        "nodes": res.nodes,
        "witness": res.witness.to_json() if res.witness else None,
    }
    emit(args, "solve.json", doc)
    if res.exact:
        print(f"{label} = {res.k}")
        print("witness: " + " ".join(str(c) for c in res.witness.colors))
        return EXIT_OK
    print(f"{label} unknown: {res.lower} <= {label} <= {res.upper} (budget exhausted after {res.nodes} nodes)")
    return EXIT_UNKNOWN


def _load_coloring(path: str, n: int) -> VertexColoring:
    try:
        data = json.loads(_read(path))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: not JSON ({exc.msg} at line {exc.lineno})") from None
    if isinstance(data, list):
        coloring = VertexColoring.of(data, n)
    else:
        coloring = VertexColoring.from_json(data)
    if len(coloring) != n:
        raise UsageError(f"coloring covers {len(coloring)} vertices, graph has {n}")
    return coloring


def cmd_verify(args: argparse.Namespace) -> int:
    g = load_graph(args)
    coloring = _load_coloring(args.coloring, g.n)
    verdict = odd_verdict(g, coloring)
    emit(args, "verify.json", {"graph": to_graph6(g), "palette_size": coloring.palette_size, **verdict.to_json()})
    for u, v in verdict.conflicts:
        print(f"conflict: vertices {u} and {v} (v{u + 1}, v{v + 1}) share color {coloring[u]}")
    for v in verdict.failing_parity:
        print(f"parity failure at vertex {v} (v{v + 1}): every neighbor color appears an even number of times")
    ok = verdict.is_odd
    print(f"{'odd coloring' if ok else 'not an odd coloring'} with {coloring.palette_size} colors")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_generate(args: argparse.Namespace) -> int:
    g = generators.generate(args.kind, args.params)
    text = serialize_graph(g, args.format)
    if not text.endswith("\n"):
        text += "\n"
    suffix = {"graph6": "g6", "edge_list": "edges", "dimacs": "dimacs"}[args.format]
    emit(args, f"{args.kind}_{'_'.join(map(str, args.params))}.{suffix}", text)
    sys.stdout.write(text)
    return EXIT_OK


def cmd_thickness(args: argparse.Namespace) -> int:
    g = load_graph(args)
    res = thickness(g, t_max=args.t_max, budget=budget_of(args), restarts=args.restarts, seed=args.seed)
    doc = {
        "graph": to_graph6(g),
        "exact": res.exact,
        "theta": res.theta,
        "lower": res.lower,
        "upper": res.upper,
        "nodes": res.nodes,
        "certificate": res.certificate.to_json() if res.certificate else None,
    }
    emit(args, "thickness.json", doc)
    if res.exact:
        print(f"theta = {res.theta}")
        return EXIT_OK
    print(f"theta unknown: {res.lower} <= theta <= {res.upper}")
    return EXIT_UNKNOWN


def cmd_critical(args: argparse.Namespace) -> int:
    corpus = None
    if args.corpus:
        corpus = [item for item in read_graph6_lines(_read(args.corpus))]
        bad = sum(1 for item in corpus if not isinstance(item, Graph))
        if bad:
            log.warning("skipped %d unparsable corpus lines", bad)
        corpus = [item for item in corpus if isinstance(item, Graph)]
    if args.minor:
        if args.n_max > MINOR_MAX_N:
            raise UsageError(f"minor search is capped at n <= {MINOR_MAX_N}")
        graphs = corpus if corpus is not None else connected_graphs(args.n_max)
        found = []
        for g in graphs:
            if g.n > args.n_max:
                continue
            r = is_odd_k_minor_critical(g, args.k, budget_of(args))
            if r.is_critical:
                found.append(r)
        found.sort(key=lambda r: r.graph_key)
        emit(args, f"minor_critical_k{args.k}.jsonl",
             "".join(json.dumps(r.to_json(), sort_keys=True) + "\n" for r in found))
        for r in found:
            print(r.graph_key.decode())
        print(f"{len(found)} minor-critical graphs for k={args.k}, n<={args.n_max}")
        return EXIT_OK
    if corpus is None and args.n_max > MAX_ENUM_N:
        raise UsageError(f"built-in enumeration stops at n={MAX_ENUM_N}; pass --corpus")
    stats: dict = {}
    found = search_critical(args.k, args.n_max, corpus, workers=args.threads, stats=stats)
    emit(args, f"critical_k{args.k}.jsonl", reports_to_jsonl(found))
    emit(args, f"critical_k{args.k}.csv", reports_to_csv(found))
    emit(args, f"critical_k{args.k}_stats.json", stats)
    failed = 0
    for r in found:
        checks = [name for name, c in r.lemma_checks.items() if c.applicable and not c.passed]
        failed += bool(checks)
        suffix = f"  failing checks: {', '.join(checks)}" if checks else ""
        print(f"{to_graph6(r.graph)}  n={r.graph.n} m={r.graph.m}{suffix}")
    print(f"{len(found)} critical graphs for k={args.k}, n<={args.n_max} ({stats.get('scanned', 0)} scanned)")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_discharge(args: argparse.Namespace) -> int:
    g = load_graph(args)
    if args.partition:
        try:
            partition = EdgePartition.from_json(json.loads(_read(args.partition)))
        except json.JSONDecodeError as exc:
            raise UsageError(f"{args.partition}: not JSON ({exc.msg})") from None
    else:
        res = thickness(g, budget=budget_of(args), restarts=args.restarts, seed=args.seed)
        if res.certificate is None:
            print("no partition available within budget")
            return EXIT_UNKNOWN
        partition = res.certificate
    embeddings = []
    for i, layer in enumerate(partition.layers(g)):
        emb = planar_embed(layer)
        if not emb.is_planar:
            print(f"layer {i} is not planar ({emb.witness_kind} subdivision found)")
            return EXIT_FAIL
        embeddings.append(emb.embedding)
    t = args.t if args.t is not None else partition.t
    report = verify_certificate(g, partition, embeddings, t)
    doc = {"graph": to_graph6(g), "partition": partition.to_json(), **report.to_json()}
    emit(args, "discharge.json", doc)
    print(f"t = {t}  S = {report.total_initial}  S* = {report.total_final}")
    print(f"violations: faces {len(report.face_violations)}, components {len(report.component_violations)}, "
          f"vertices {len(report.vertex_violations)}")
    broken = report.total_initial != -6 * t or report.total_final != report.total_initial
    # with girth >= 6 only faces bounded by no cycle may be short
    if report.girth_at_least_6 and any(not f["acyclic_boundary"] for f in report.face_violations):
        broken = True
    return EXIT_FAIL if broken else EXIT_OK


def cmd_claims(args: argparse.Namespace) -> int:
    from .claims import REFUTED, REGISTRY, SKIPPED, run_claims

    if args.only:
        unknown = sorted(set(args.only) - set(REGISTRY))
        if unknown:
            raise UsageError(f"unknown claim id(s): {', '.join(unknown)}")
    results = run_claims(args.tier, args.out or "claims_out", seed=args.seed, only=args.only)
    for r in results:
        print(f"{r.claim_id:34s} {r.status:15s} {r.evidence}")
    statuses = [r.status for r in results]
    print(", ".join(f"{s}: {statuses.count(s)}" for s in sorted(set(statuses))))
    if REFUTED in statuses:
        return EXIT_FAIL
    if args.strict and SKIPPED in statuses:
        return EXIT_UNKNOWN
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="DIR", help="directory for JSON/CSV reports")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1, help="worker processes for corpus searches")
    common.add_argument("--budget-nodes", type=int, default=None)
    common.add_argument("--budget-seconds", type=float, default=None)
    common.add_argument("-v", "--verbose", action="store_true")

    graph_in = argparse.ArgumentParser(add_help=False)
    graph_in.add_argument("--graph6", metavar="STR|FILE")
    graph_in.add_argument("--edgelist", metavar="FILE")
    graph_in.add_argument("--dimacs", metavar="FILE")
    graph_in.add_argument("--graph", metavar="FILE", help="format guessed from suffix or content")

    parser = argparse.ArgumentParser(prog="oddthick", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", parents=[common, graph_in], help="chromatic or odd chromatic number")
    p.add_argument("--odd", action="store_true")
    p.add_argument("--lookahead", action="store_true", help="extra parity pruning on partial neighborhoods")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", parents=[common, graph_in], help="check a coloring file")
    p.add_argument("--coloring", required=True, metavar="FILE")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", parents=[common], help="write a named graph")
    p.add_argument("kind", choices=generators.KINDS)
    p.add_argument("params", type=int, nargs="*")
    p.add_argument("--format", choices=("graph6", "edge_list", "dimacs"), default="graph6")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("thickness", parents=[common, graph_in], help="thickness with a partition certificate")
    p.add_argument("--t-max", type=int, default=None)
    p.add_argument("--restarts", type=int, default=0, help="shuffled first-fit passes for the upper bound")
    p.set_defaults(func=cmd_thickness)

    p = sub.add_parser("critical", parents=[common], help="search for odd k+-critical graphs")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--corpus", metavar="FILE", help="graph6 lines instead of the built-in enumeration")
    p.add_argument("--minor", action="store_true", help="minor-critical instead of subgraph-critical")
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("discharge", parents=[common, graph_in], help="run the charge argument on a partition")
    p.add_argument("--t", type=int, default=None)
    p.add_argument("--partition", metavar="FILE", help="JSON edge partition; computed when omitted")
    p.add_argument("--restarts", type=int, default=0)
    p.set_defaults(func=cmd_discharge)

    p = sub.add_parser("claims", parents=[common], help="run the claim registry")
    p.add_argument("--tier", choices=("smoke", "desk", "deep"), default="smoke")
    p.add_argument("--only", nargs="+", metavar="CLAIM_ID")
    p.add_argument("--strict", action="store_true", help="exit 3 when any claim was skipped for budget")
    p.set_defaults(func=cmd_claims)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except InvariantError:
        raise
    except (UsageError, OddThickError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
