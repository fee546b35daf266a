"""Command-line front end: kernelize graphs, solve exactly, check, bench."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from pathlib import Path

from .exact import solve_exact
from .generators import PLANTED, UNIFORM, GenSpec, generate
from .graphio import DIMACS, EDGE_LIST, GraphFormatError, read_graph, write_graph
from .model import KERNEL, Instance, ProblemKind
from .report import append_csv, build_report, render_figures
from .verify import decide, kernelize

TRACE_SCHEMA = 1

_PROBLEMS = {p.value: p for p in ProblemKind}
_PROBLEMS.update(
    {
        "cluster-deletion": ProblemKind.CLUSTER_DELETION,
        "strong-triadic-closure": ProblemKind.STRONG_TRIADIC_CLOSURE,
        "trivially-perfect-completion": ProblemKind.TP_COMPLETION,
        "split-deletion": ProblemKind.SPLIT_DELETION,
        "split-completion": ProblemKind.SPLIT_COMPLETION,
        "pseudo-split-del": ProblemKind.PSEUDO_SPLIT_DELETION,
        "pseudo-split-comp": ProblemKind.PSEUDO_SPLIT_COMPLETION,
    }
)


def _problem(name: str) -> ProblemKind:
    try:
        return _PROBLEMS[name]
    except KeyError:
        raise argparse.ArgumentTypeError(
            f"unknown problem {name!r}; choose from {sorted(_PROBLEMS)}"
        ) from None


def _default_seed() -> int:
    return int(os.environ.get("KERNELKIT_SEED", "0"))


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kernelkit",
        description="Kernelization for edge modification toward cluster, "
        "trivially perfect, split, and pseudo-split graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p):
        p.add_argument("problem", type=_problem, help="problem name, e.g. split-del")
        p.add_argument("input", help="graph file (edge list or DIMACS)")
        p.add_argument("--format", choices=[EDGE_LIST, DIMACS], default=None)

    p_kern = sub.add_parser("kernelize", help="reduce an instance to a kernel")
    add_io(p_kern)
    p_kern.add_argument("--k", type=int, required=True)
    p_kern.add_argument("--out", default=None, help="output directory")
    p_kern.add_argument("--trace", action="store_true", help="write the JSON trace")
    p_kern.add_argument("--seed", type=int, default=None)

    p_exact = sub.add_parser("exact", help="solve an instance exactly")
    add_io(p_exact)
    p_exact.add_argument("--cap", type=int, required=True)

    p_check = sub.add_parser("check", help="kernelize, solve the kernel, lift")
    add_io(p_check)
    p_check.add_argument("--k", type=int, required=True)

    p_bench = sub.add_parser("bench", help="sweep generator specs into a CSV table")
    p_bench.add_argument("specfile", help="JSON file with a 'specs' array")
    p_bench.add_argument("--csv", default="bench.csv")
    p_bench.add_argument("--seed", type=int, default=None)
    p_bench.add_argument(
        "--no-plot", action="store_true", help="skip the companion figures"
    )
    return parser


class _CliError(Exception):
    pass


def _load(args) -> tuple:
    try:
        return read_graph(args.input, args.format)
    except FileNotFoundError:
        raise _CliError(f"cannot read {args.input}") from None
    except GraphFormatError as exc:
        raise _CliError(str(exc)) from None


def _trace_json(inst: Instance, outcome) -> dict:
    return {
        "schema": TRACE_SCHEMA,
        "problem": inst.problem.value,
        "n": inst.graph.n,
        "m": inst.graph.m,
        "k": inst.k,
        "verdict": outcome.verdict,
        "steps": [step.to_json() for step in outcome.trace],
        "lift": [list(e) for e in outcome.lift],
    }


def _cmd_kernelize(args) -> int:
    g, fmt = _load(args)
    inst = Instance(g, args.k, args.problem)
    start = time.perf_counter()
    outcome = kernelize(inst)
    millis = (time.perf_counter() - start) * 1000.0
    seed = args.seed if args.seed is not None else _default_seed()
    report = build_report(
        inst, outcome, millis, seed=seed, config={"input": str(args.input)}
    )
    out_dir = Path(args.out) if args.out else Path(args.input).parent
    out_dir.mkdir(parents=True, exist_ok=True)
    stem = Path(args.input).stem
    if outcome.verdict == KERNEL:
        kernel_path = out_dir / f"{stem}.kernel.{fmt}"
        write_graph(kernel_path, outcome.instance.graph, fmt)
        labels_note = {"kernel_labels": list(outcome.instance.graph.labels)}
        report.config.update(labels_note)
    if args.trace:
        (out_dir / f"{stem}.trace.json").write_text(
            json.dumps(_trace_json(inst, outcome), indent=2) + "\n"
        )
    (out_dir / f"{stem}.report.json").write_text(report.to_json())
    kernel_n = report.n_kernel if report.n_kernel is not None else "-"
    print(f"{inst.problem.value}: {outcome.verdict} (kernel n={kernel_n}, k={report.k_kernel})")
    return 0


def _cmd_exact(args) -> int:
    g, _ = _load(args)
    result = solve_exact(args.problem, g, args.cap)
    if result.exhausted:
        print(f"opt > {args.cap}")
        return 0
    witness = sorted(g.label_pair(u, v) for u, v in result.witness)
    print(f"opt {result.opt}")
    print("witness " + " ".join(f"{a}-{b}" for a, b in witness))
    return 0


def _cmd_check(args) -> int:
    g, _ = _load(args)
    inst = Instance(g, args.k, args.problem)
    outcome = kernelize(inst)
    verdict, certificate = decide(inst, outcome)
    print(f"verdict {'yes' if verdict else 'no'} (pipeline: {outcome.verdict})")
    if certificate is not None:
        edges = " ".join(f"{a}-{b}" for a, b in sorted(certificate))
        print(f"solution [{len(certificate)} edges] {edges}")
    return 0


def _cmd_bench(args) -> int:
    try:
        payload = json.loads(Path(args.specfile).read_text())
    except FileNotFoundError:
        print(f"error: cannot read {args.specfile}", file=sys.stderr)
        return 1
    except json.JSONDecodeError as exc:
        print(f"error: {args.specfile}: {exc}", file=sys.stderr)
        return 1
    base_seed = args.seed if args.seed is not None else _default_seed()
    reports = []
    for entry in payload.get("specs", []):
        problem = _problem(entry["problem"])
        count = int(entry.get("count", 1))
        family = entry.get("family", PLANTED)
        if family not in (PLANTED, UNIFORM):
            print(f"error: unknown family {family!r}", file=sys.stderr)
            return 1
        for i in range(count):
            seed = int(entry.get("seed", base_seed)) + i
            spec = GenSpec(seed, int(entry["n"]), int(entry["k"]), problem, family)
            inst = generate(spec)
            start = time.perf_counter()
            outcome = kernelize(inst)
            millis = (time.perf_counter() - start) * 1000.0
            reports.append(
                build_report(inst, outcome, millis, seed=seed, config={"family": family})
            )
    append_csv(args.csv, reports)
    if not args.no_plot:
        render_figures(reports, Path(args.csv).parent)
    print(f"bench: {len(reports)} rows -> {args.csv}")
    return 0


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    if getattr(args, "k", None) is not None and args.k < 0:
        print("error: --k must be nonnegative", file=sys.stderr)
        return 2
    if getattr(args, "cap", None) is not None and args.cap < 0:
        print("error: --cap must be nonnegative", file=sys.stderr)
        return 2
    commands = {
        "kernelize": _cmd_kernelize,
        "exact": _cmd_exact,
        "check": _cmd_check,
        "bench": _cmd_bench,
    }
    try:
        return commands[args.command](args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
