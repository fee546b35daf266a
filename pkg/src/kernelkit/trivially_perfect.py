"""Kernelization for trivially perfect completion.

Two reductions: force a missing edge that is a completion candidate of
more than ``k`` path/cycle occurrences, and drop any vertex outside
every induced P4 and C4.  Exhausting both leaves at most ``2k^2 + 2k``
vertices in a yes-instance.
"""

from __future__ import annotations

from .graph import Graph
from .model import (
    KERNEL,
    TRIVIAL_NO,
    TRIVIAL_YES,
    Instance,
    KernelOutcome,
    ProblemKind,
    ReductionStep,
)
from .obstructions import Kind, candidate_multiplicities, vertex_in_obstruction
from .exact import is_trivially_perfect

RULE_FORCED_EDGE = "forced-edge"
RULE_UNOBSTRUCTED_VERTEX = "unobstructed-vertex"


def find_forced_edge(g: Graph, k: int) -> tuple[tuple[int, int], int] | None:
    """Non-edge that is a candidate of at least k+1 occurrences, lowest first."""
    counts = candidate_multiplicities(g)
    hits = sorted(
        (g.label_pair(u, v), (u, v), c)
        for (u, v), c in counts.items()
        if c >= k + 1
    )
    if not hits:
        return None
    _, edge, count = hits[0]
    return edge, count


def find_unobstructed_vertex(g: Graph) -> int | None:
    best = None
    for v in range(g.n):
        if best is not None and g.labels[v] >= g.labels[best]:
            continue
        if not vertex_in_obstruction(g, v, (Kind.P4, Kind.C4)):
            best = v
    return best


def kernelize_tp_completion(inst: Instance) -> KernelOutcome:
    if inst.problem is not ProblemKind.TP_COMPLETION:
        raise ValueError(f"unsupported problem {inst.problem}")
    if inst.k < 0:
        raise ValueError("budget must be nonnegative at entry")
    g, k = inst.graph, inst.k
    trace: list[ReductionStep] = []
    lift: list[tuple[int, int]] = []
    while True:
        changed = False
        while True:
            hit = find_forced_edge(g, k)
            if hit is None:
                break
            (u, v), count = hit
            pair = g.label_pair(u, v)
            trace.append(
                ReductionStep(
                    RULE_FORCED_EDGE,
                    {"edge": list(pair), "multiplicity": count, "k_delta": -1},
                )
            )
            lift.append(pair)
            g = g.add_edges([(u, v)])
            k -= 1
            changed = True
            if k < 0:
                return KernelOutcome(TRIVIAL_NO, trace=tuple(trace), lift=tuple(lift))
        while True:
            v = find_unobstructed_vertex(g)
            if v is None:
                break
            trace.append(ReductionStep(RULE_UNOBSTRUCTED_VERTEX, {"v": g.labels[v]}))
            g = g.delete_vertices([v])
            changed = True
        if not changed:
            break
    if is_trivially_perfect(g):
        return KernelOutcome(TRIVIAL_YES, trace=tuple(trace), lift=tuple(lift))
    if g.n > 2 * k * k + 2 * k:
        return KernelOutcome(TRIVIAL_NO, trace=tuple(trace), lift=tuple(lift))
    return KernelOutcome(
        KERNEL,
        instance=Instance(g, k, inst.problem),
        trace=tuple(trace),
        lift=tuple(lift),
    )


def _minimalize(g: Graph, edges: set[tuple[int, int]]) -> set[tuple[int, int]]:
    # drop additions while the completion stays trivially perfect,
    # lowest label pair first, restart after each drop
    while True:
        for e in sorted(edges):
            trial = edges - {e}
            if is_trivially_perfect(g.add_edges_by_labels(trial)):
                edges = trial
                break
        else:
            return edges


def lift_tp_solution(
    inst: Instance, outcome: KernelOutcome, kernel_witness: frozenset
) -> frozenset:
    """Map a kernel completion back through the trace to the input graph.

    Forced-edge steps contribute their edge verbatim.  A vertex removal
    is undone by first minimalizing the running solution against the
    reduced graph; a minimal completion of the reduced graph is also one
    of the graph the vertex was removed from.
    """
    stages = [inst.graph]
    for step in outcome.trace:
        g = stages[-1]
        if step.rule == RULE_FORCED_EDGE:
            stages.append(g.add_edges_by_labels([tuple(step.data["edge"])]))
        elif step.rule == RULE_UNOBSTRUCTED_VERTEX:
            stages.append(g.delete_labels([step.data["v"]]))
        else:
            raise ValueError(f"unexpected rule {step.rule}")
    solution = set(kernel_witness)
    for i in range(len(outcome.trace) - 1, -1, -1):
        step = outcome.trace[i]
        if step.rule == RULE_FORCED_EDGE:
            solution.add(tuple(step.data["edge"]))
        else:
            solution = _minimalize(stages[i + 1], solution)
    return frozenset(solution)
