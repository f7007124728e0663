"""Command-line front end.

Subcommands::

    solve      solve an instance file, write a solution file
    check      verify a solution file against an instance file
    classify   report the structural class of an instance's digraph
    generate   emit instance files (reductions and seeded random ones)
    bench      approximation-quality benchmark, CSV output

Exit codes: 0 success, 2 solver/structure mismatch, 3 parse error,
1 internal error (and, for ``check``, an infeasible solution).
"""
from __future__ import annotations

import argparse
import csv
import io
import sys
import time
from typing import Optional

from . import approx, exact, formats, gadgets
from .constraints import evaluate
from .graph import GraphClass, GraphError, classify
from .instance import InstanceError, ProblemKind, Solution, WeightedInstance

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_STRUCTURE = 2
EXIT_PARSE = 3

ALGORITHMS = ("auto", "brute", "tree-dp", "tournament", "eulerian", "ptas")


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except formats.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (exact.SolverError, GraphError, InstanceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STRUCTURE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dss",
        description="Subset-sum solvers under digraph closure constraints.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("instance", help="instance file path")
    p.add_argument("--algorithm", choices=ALGORITHMS, default="auto")
    p.add_argument("--k", type=int, default=2, help="PTAS seed size")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="verify a solution file")
    p.add_argument("instance")
    p.add_argument("solution")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("classify", help="report the structural graph class")
    p.add_argument("instance")
    p.set_defaults(func=cmd_classify)

    gen = sub.add_parser("generate", help="emit instance files")
    gsub = gen.add_subparsers(dest="generator", required=True)

    p = gsub.add_parser("clique", help="clique reduction from an edge list")
    p.add_argument("--edges", required=True, help="edge-list file")
    p.add_argument("--clique-size", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate_clique)

    p = gsub.add_parser(
        "hard-maximal", help="cardinality reduction to the maximal problem"
    )
    p.add_argument("--instance", required=True, help="source instance file")
    p.add_argument("--p", type=int, required=True, help="target cardinality")
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate_hard_maximal)

    p = gsub.add_parser(
        "independent-set", help="independence reduction from an edge list"
    )
    p.add_argument("--edges", required=True)
    p.add_argument(
        "--kind",
        choices=[ProblemKind.SSGW.value, ProblemKind.MAXIMAL_SSGW.value],
        default=ProblemKind.SSGW.value,
    )
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate_independent_set)

    p = gsub.add_parser("subset-sum", help="plain subset sum as a star")
    p.add_argument("--values", required=True, help="comma-separated integers")
    p.add_argument("--budget", type=int, required=True)
    p.add_argument(
        "--kind", choices=[k.value for k in ProblemKind], default=ProblemKind.SSG.value
    )
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate_subset_sum)

    p = gsub.add_parser("random", help="seeded random instance")
    p.add_argument(
        "--graph-class",
        choices=[c.value for c in GraphClass],
        default=GraphClass.DAG.value,
    )
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--weight-max", type=int, default=10)
    p.add_argument(
        "--kind", choices=[k.value for k in ProblemKind], default=ProblemKind.SSG.value
    )
    p.add_argument("--arc-prob", type=float, default=gadgets.DEFAULT_ARC_PROB)
    p.add_argument("--budget", type=int, help="fixed budget")
    p.add_argument(
        "--budget-fraction", type=float, default=0.5, help="fraction of total weight"
    )
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate_random)

    p = sub.add_parser("bench", help="approximation-quality benchmark (CSV)")
    p.add_argument(
        "--classes",
        default="dag",
        help="comma-separated graph classes (default: dag)",
    )
    p.add_argument("--sizes", default="8,10,12", help="comma-separated node counts")
    p.add_argument("--seeds", default="0,1,2", help="comma-separated seeds")
    p.add_argument(
        "--kinds",
        default="ssg,maximal-ssg",
        help="comma-separated kinds (strong-closure kinds only)",
    )
    p.add_argument("--k-list", default="0,1,2", help="comma-separated PTAS k values")
    p.add_argument("--out", help="CSV output path (default stdout)")
    p.set_defaults(func=cmd_bench)

    return parser


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_out(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


# ---------------------------------------------------------------------------
# solve
# ---------------------------------------------------------------------------


def _solve_tree_dp(inst: WeightedInstance) -> Solution:
    if inst.kind is ProblemKind.SSG:
        return exact.solve_ssg_tree(inst)
    if inst.kind is ProblemKind.MAXIMAL_SSG:
        return exact.solve_maximal_ssg_tree(inst)
    if inst.kind is ProblemKind.SSGW:
        return exact.solve_ssgw_rooted_tree(inst)
    raise exact.SolverError(f"no tree DP for kind {inst.kind.value}")


def _solve_ptas(inst: WeightedInstance, k: int) -> Solution:
    if inst.kind is ProblemKind.SSG:
        return approx.ptas_ssg(inst, k).solution
    if inst.kind is ProblemKind.MAXIMAL_SSG:
        return approx.ptas_maximal_ssg(inst, k).solution
    raise exact.SolverError(
        f"approximation scheme covers the strong-closure kinds, not {inst.kind.value}"
    )


def _solve_auto(inst: WeightedInstance, k: int) -> Solution:
    for attempt in (
        _solve_tree_dp,
        lambda i: exact.solve_tournament(i),
        lambda i: exact.solve_balanced_degree_two(i),
        lambda i: _solve_ptas(i, k),
        lambda i: exact.brute_force(i),
    ):
        try:
            sol = attempt(inst)
        except exact.CapExceeded:
            raise
        except exact.SolverError:
            continue
        if sol is None:
            raise exact.SolverError("instance admits no feasible solution")
        return sol
    raise exact.SolverError("no applicable solver for this instance")


def cmd_solve(args) -> int:
    inst, labels = formats.parse_instance(_read(args.instance))
    if args.k < 0:
        raise exact.SolverError("k must be nonnegative")
    if args.algorithm == "auto":
        sol = _solve_auto(inst, args.k)
    elif args.algorithm == "brute":
        sol = exact.brute_force(inst)
        if sol is None:
            raise exact.SolverError("instance admits no feasible solution")
    elif args.algorithm == "tree-dp":
        sol = _solve_tree_dp(inst)
    elif args.algorithm == "tournament":
        sol = exact.solve_tournament(inst)
    elif args.algorithm == "eulerian":
        sol = exact.solve_balanced_degree_two(inst)
    else:
        sol = _solve_ptas(inst, args.k)
    report = evaluate(inst, sol.selected)
    flags = formats.SolutionFlags(
        feasible=report.feasible,
        closure=report.satisfies_closure,
        budget=report.satisfies_budget,
        maximality=report.satisfies_maximality,
    )
    _write_out(formats.emit_solution(sol, labels, flags), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# check
# ---------------------------------------------------------------------------


def cmd_check(args) -> int:
    inst, labels = formats.parse_instance(_read(args.instance))
    selected_labels, declared_weight, _ = formats.parse_solution(_read(args.solution))
    index = {label: i for i, label in enumerate(labels)}
    try:
        selected = {index[label] for label in selected_labels}
    except KeyError as exc:
        raise formats.ParseError(f"solution selects unknown node {exc.args[0]!r}")
    report = evaluate(inst, selected)
    lines = []
    if report.satisfies_closure:
        lines.append("closure ok")
    else:
        w = report.witness
        if isinstance(w, tuple):
            lines.append(f"closure violated witness=arc {labels[w[0]]} -> {labels[w[1]]}")
        else:
            lines.append(f"closure violated witness=node {labels[w]}")
    verdict = "ok" if report.satisfies_budget else "violated"
    lines.append(
        f"budget {verdict} weight={report.total_weight} budget={inst.budget}"
    )
    if not inst.kind.is_maximal:
        lines.append("maximality na")
    elif report.satisfies_maximality is None:
        lines.append("maximality skipped")
    elif report.satisfies_maximality:
        lines.append("maximality ok")
    else:
        lines.append(f"maximality violated witness=node {labels[report.witness]}")
    if declared_weight != report.total_weight:
        lines.append(
            f"declared-weight mismatch declared={declared_weight}"
            f" actual={report.total_weight}"
        )
    feasible = report.feasible and declared_weight == report.total_weight
    lines.append(f"feasible {str(feasible).lower()}")
    print("\n".join(lines))
    return EXIT_OK if feasible else EXIT_INTERNAL


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------


def cmd_classify(args) -> int:
    inst, _labels = formats.parse_instance(_read(args.instance))
    g = inst.graph
    print(f"class {classify(g).value}")
    print(f"nodes {g.n}")
    print(f"arcs {len(g.arcs)}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# generate
# ---------------------------------------------------------------------------


def cmd_generate_clique(args) -> int:
    graph, _labels = formats.parse_edge_list(_read(args.edges))
    spec = gadgets.CliqueGadgetSpec(graph, args.clique_size)
    inst, labels = gadgets.clique_to_ssg(spec)
    text = (
        f"# clique reduction: hit the budget exactly iff a clique of size"
        f" {args.clique_size} exists\n" + formats.emit_instance(inst, labels)
    )
    _write_out(text, args.out)
    return EXIT_OK


def cmd_generate_hard_maximal(args) -> int:
    src, _labels = formats.parse_instance(_read(args.instance))
    if src.kind is not ProblemKind.SSG:
        raise InstanceError("source instance must use the ssg kind")
    spec = gadgets.MaximalGadgetSpec(src.graph, src.weights, args.p, src.budget)
    inst, labels, threshold = gadgets.cardinality_to_maximal(spec)
    text = (
        f"# cardinality reduction: decision threshold q = {threshold}\n"
        + formats.emit_instance(inst, labels)
    )
    _write_out(text, args.out)
    return EXIT_OK


def cmd_generate_independent_set(args) -> int:
    graph, _labels = formats.parse_edge_list(_read(args.edges))
    spec = gadgets.ISGadgetSpec(graph)
    inst, labels = gadgets.graph_to_ssgw(spec, ProblemKind(args.kind))
    _write_out(formats.emit_instance(inst, labels), args.out)
    return EXIT_OK


def cmd_generate_subset_sum(args) -> int:
    try:
        values = [int(tok) for tok in args.values.split(",") if tok.strip()]
    except ValueError:
        raise formats.ParseError(f"bad values list {args.values!r}")
    inst, labels = gadgets.subset_sum_to_tree(
        values, args.budget, ProblemKind(args.kind)
    )
    _write_out(formats.emit_instance(inst, labels), args.out)
    return EXIT_OK


def cmd_generate_random(args) -> int:
    budget_rule = (
        ("fixed", args.budget)
        if args.budget is not None
        else ("fraction", args.budget_fraction)
    )
    inst = gadgets.random_instance(
        GraphClass(args.graph_class),
        args.n,
        weight_max=args.weight_max,
        budget_rule=budget_rule,
        seed=args.seed,
        kind=ProblemKind(args.kind),
        arc_prob=args.arc_prob,
    )
    labels = [f"v{i}" for i in range(inst.graph.n)]
    _write_out(formats.emit_instance(inst, labels), args.out)
    return EXIT_OK


# ---------------------------------------------------------------------------
# bench
# ---------------------------------------------------------------------------

_CSV_COLUMNS = [
    "instance-id",
    "class",
    "n",
    "kind",
    "algorithm",
    "k",
    "achieved-weight",
    "optimal-weight",
    "ratio",
    "elapsed-ms",
]


def _csv_ints(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip()]


def cmd_bench(args) -> int:
    classes = [GraphClass(tok) for tok in args.classes.split(",") if tok.strip()]
    sizes = _csv_ints(args.sizes)
    seeds = _csv_ints(args.seeds)
    kinds = [ProblemKind(tok) for tok in args.kinds.split(",") if tok.strip()]
    k_list = _csv_ints(args.k_list)
    for kind in kinds:
        if kind.is_weak:
            raise InstanceError("bench covers the strong-closure kinds only")
    rows = []
    worst: dict[tuple[str, int], float] = {}
    for cls in classes:
        for n in sizes:
            for seed in seeds:
                for kind in kinds:
                    inst = gadgets.random_instance(cls, n, seed=seed, kind=kind)
                    iid = f"{cls.value}-n{n}-s{seed}-{kind.value}"
                    optimal: Optional[int] = None
                    if n <= exact.DEFAULT_BRUTE_CAP:
                        opt_sol = exact.brute_force(inst)
                        if opt_sol is not None:
                            optimal = opt_sol.weight
                    for k in k_list:
                        start = time.perf_counter()
                        sol = _solve_ptas(inst, k)
                        elapsed_ms = (time.perf_counter() - start) * 1000.0
                        ratio = ""
                        if optimal is not None:
                            if optimal == sol.weight:
                                r = 1.0
                            elif optimal == 0:
                                r = float("inf")
                            else:
                                r = sol.weight / optimal
                            ratio = f"{r:.6f}"
                            key = ("ptas", k)
                            badness = max(r, 1.0 / r) if r > 0 else float("inf")
                            prev = worst.get(key)
                            if prev is None or badness > max(prev, 1.0 / prev):
                                worst[key] = r
                        rows.append(
                            {
                                "instance-id": iid,
                                "class": cls.value,
                                "n": n,
                                "kind": kind.value,
                                "algorithm": "ptas",
                                "k": k,
                                "achieved-weight": sol.weight,
                                "optimal-weight": "" if optimal is None else optimal,
                                "ratio": ratio,
                                "elapsed-ms": f"{elapsed_ms:.3f}",
                            }
                        )
    for (algorithm, k), r in sorted(worst.items()):
        rows.append(
            {
                "instance-id": f"summary-{algorithm}-k{k}",
                "class": "",
                "n": "",
                "kind": "",
                "algorithm": algorithm,
                "k": k,
                "achieved-weight": "",
                "optimal-weight": "",
                "ratio": f"{r:.6f}",
                "elapsed-ms": "",
            }
        )
    rows.sort(key=lambda row: str(row["instance-id"]))
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=_CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    _write_out(buf.getvalue(), args.out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
