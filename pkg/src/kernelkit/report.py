"""Run reports, the benchmark CSV table, and its companion figures."""

from __future__ import annotations

import csv
import json
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .bounds import kernel_vertex_bound
from .model import KERNEL, Instance, KernelOutcome

CSV_HEADER = [
    "problem",
    "n",
    "m",
    "k",
    "outcome",
    "n_kernel",
    "m_kernel",
    "k_kernel",
    "bound",
    "ok",
    "millis",
]

_GADGET_RULES = ("merge-marked", "attach-clique-gadget")


@dataclass
class RunReport:
    problem: str
    n: int
    m: int
    k: int
    outcome: str
    n_kernel: int | None = None
    m_kernel: int | None = None
    k_kernel: int | None = None
    gadget_vertices: int = 0
    bound: int = 0
    bound_ok: bool = True
    rule_counts: dict = field(default_factory=dict)
    millis: float = 0.0
    seed: int | None = None
    config: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=False) + "\n"


def build_report(
    inst: Instance, outcome: KernelOutcome, millis: float, seed=None, config=None
) -> RunReport:
    report = RunReport(
        problem=inst.problem.value,
        n=inst.graph.n,
        m=inst.graph.m,
        k=inst.k,
        outcome=outcome.verdict,
        bound=kernel_vertex_bound(inst.problem, inst.k),
        rule_counts=outcome.rule_counts(),
        millis=round(millis, 3),
        seed=seed,
        config=dict(config or {}),
    )
    if outcome.verdict == KERNEL:
        sub = outcome.instance
        report.n_kernel = sub.graph.n
        report.m_kernel = sub.graph.m
        report.k_kernel = sub.k
        gadget = 0
        for step in outcome.trace:
            if step.rule == "merge-marked":
                gadget += len(step.data["fresh"])
            elif step.rule == "attach-clique-gadget":
                gadget += step.data["t"]
        report.gadget_vertices = gadget
        report.bound_ok = sub.graph.n <= report.bound
    return report


def csv_row(report: RunReport) -> list:
    blank = ""
    return [
        report.problem,
        report.n,
        report.m,
        report.k,
        report.outcome,
        report.n_kernel if report.n_kernel is not None else blank,
        report.m_kernel if report.m_kernel is not None else blank,
        report.k_kernel if report.k_kernel is not None else blank,
        report.bound,
        int(report.bound_ok),
        report.millis,
    ]


def append_csv(path, reports) -> None:
    path = Path(path)
    fresh = not path.exists()
    with path.open("a", newline="") as handle:
        writer = csv.writer(handle)
        if fresh:
            writer.writerow(CSV_HEADER)
        for report in reports:
            writer.writerow(csv_row(report))


def render_figures(reports, out_dir) -> list[Path]:
    """One scatter per problem: kernel size against k with the bound curve."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    from .model import ProblemKind

    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    by_problem: dict[str, list[RunReport]] = {}
    for report in reports:
        by_problem.setdefault(report.problem, []).append(report)
    written = []
    for problem, rows in sorted(by_problem.items()):
        fig, ax = plt.subplots(figsize=(5.0, 3.4))
        kernel_rows = [r for r in rows if r.n_kernel is not None]
        if kernel_rows:
            ax.scatter(
                [r.k for r in kernel_rows],
                [r.n_kernel for r in kernel_rows],
                s=18,
                label="kernel vertices",
            )
        ks = sorted({r.k for r in rows})
        kind = ProblemKind(problem)
        ax.plot(
            ks,
            [kernel_vertex_bound(kind, k) for k in ks],
            "k--",
            linewidth=1,
            label="size bound",
        )
        ax.set_xlabel("k")
        ax.set_ylabel("vertices")
        ax.set_title(problem)
        ax.legend(fontsize=8)
        fig.tight_layout()
        target = out_dir / f"bench_{problem}.png"
        fig.savefig(target, dpi=150)
        plt.close(fig)
        written.append(target)
    return written
