"""Kernelization for cluster edge deletion and strong triadic closure.

Both problems share one reduction: a simplicial vertex whose closed
neighborhood has boundary degree at most its own degree is collapsed
together with that neighborhood, paying the boundary edges.  For the
deletion problem the boundary edges are forced deletions; for strong
triadic closure they are the forced weak edges.  The surviving graph is
a kernel once it has at most ``2k`` vertices.
"""

from __future__ import annotations

from .graph import Graph, bits
from .model import (
    KERNEL,
    TRIVIAL_NO,
    TRIVIAL_YES,
    Instance,
    KernelOutcome,
    ProblemKind,
    ReductionStep,
)
from .obstructions import Kind, first_obstruction

RULE_SIMPLICIAL_NEIGHBORHOOD = "simplicial-neighborhood"

_PROBLEMS = (ProblemKind.CLUSTER_DELETION, ProblemKind.STRONG_TRIADIC_CLOSURE)


def find_collapsible_vertex(g: Graph) -> int | None:
    """Lowest-label simplicial vertex whose neighborhood is cheap to cut off."""
    best = None
    for v in range(g.n):
        if not g.is_simplicial(v):
            continue
        closed = g.rows[v] | (1 << v)
        boundary = sum((g.rows[u] & ~closed).bit_count() for u in bits(closed))
        if boundary <= g.degree(v):
            if best is None or g.labels[v] < g.labels[best]:
                best = v
    return best


def apply_collapse(g: Graph, v: int) -> tuple[Graph, ReductionStep, list[tuple[int, int]]]:
    closed = g.rows[v] | (1 << v)
    cut = []
    for u in bits(closed):
        for w in bits(g.rows[u] & ~closed):
            cut.append(g.label_pair(u, w))
    cut = sorted(set(cut))
    removed = sorted(g.labels[u] for u in bits(closed))
    step = ReductionStep(
        RULE_SIMPLICIAL_NEIGHBORHOOD,
        {
            "v": g.labels[v],
            "removed": removed,
            "cut_edges": [list(e) for e in cut],
            "k_delta": -len(cut),
        },
    )
    return g.delete_vertices(bits(closed)), step, cut


def kernelize_cluster_family(inst: Instance) -> KernelOutcome:
    """2k-vertex kernel for cluster deletion and strong triadic closure."""
    if inst.problem not in _PROBLEMS:
        raise ValueError(f"unsupported problem {inst.problem}")
    if inst.k < 0:
        raise ValueError("budget must be nonnegative at entry")
    g, k = inst.graph, inst.k
    trace: list[ReductionStep] = []
    lift: list[tuple[int, int]] = []
    while True:
        if k < 0:
            return KernelOutcome(TRIVIAL_NO, trace=tuple(trace), lift=tuple(lift))
        v = find_collapsible_vertex(g)
        if v is None:
            break
        g, step, cut = apply_collapse(g, v)
        k -= len(cut)
        trace.append(step)
        lift.extend(cut)
    if first_obstruction(g, (Kind.P3,)) is None:
        return KernelOutcome(TRIVIAL_YES, trace=tuple(trace), lift=tuple(lift))
    if g.n > 2 * k:
        return KernelOutcome(TRIVIAL_NO, trace=tuple(trace), lift=tuple(lift))
    return KernelOutcome(
        KERNEL,
        instance=Instance(g, k, inst.problem),
        trace=tuple(trace),
        lift=tuple(lift),
    )


def lift_cluster_solution(
    inst: Instance, outcome: KernelOutcome, kernel_witness: frozenset
) -> frozenset:
    """Kernel solution plus the forced cut edges, as original-label pairs."""
    return frozenset(kernel_witness) | frozenset(outcome.lift)
