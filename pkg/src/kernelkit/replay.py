"""Deterministic re-application of reduction traces.

Every trace step carries enough data (in original labels) to reproduce
its graph transformation, so replaying a trace on the input graph must
rebuild the kernel graph bit-exactly.  The lift machinery reuses the
same replay to reconstruct intermediate stages.
"""

from __future__ import annotations

from .graph import Graph
from .model import KernelOutcome, ReductionStep
from . import cluster as _cluster
from . import split as _split
from . import trivially_perfect as _tp


def apply_step(
    g: Graph, i0: frozenset[int], step: ReductionStep
) -> tuple[Graph, frozenset[int]]:
    """Apply one step; returns the next graph and marked-label set."""
    rule = step.rule
    data = step.data
    if rule == _cluster.RULE_SIMPLICIAL_NEIGHBORHOOD:
        return g.delete_labels(data["removed"]), i0
    if rule == _tp.RULE_FORCED_EDGE:
        return g.add_edges_by_labels([tuple(data["edge"])]), i0
    if rule == _tp.RULE_UNOBSTRUCTED_VERTEX:
        return g.delete_labels([data["v"]]), i0
    if rule in (_split.RULE_MODULATOR, _split.RULE_SIZE_GATE, _split.RULE_SIMPLICIAL_YES):
        return g, i0
    if rule == _split.RULE_MARK_SIMPLICIAL:
        return g, i0 | {data["v"]}
    if rule == _split.RULE_MARK_FAR:
        return g, i0 | set(data["marked"])
    if rule == _split.RULE_DELETE_CVERTEX:
        return g.delete_labels([data["v"]]), i0 | set(data["marked"])
    if rule == _split.RULE_I0_EDGES:
        return g.remove_edges_by_labels(tuple(e) for e in data["edges"]), i0
    if rule == _split.RULE_MERGE:
        fresh = list(data["fresh"])
        adjacency: list[list[int]] = [[] for _ in fresh]
        for x, nbrs in data["attach"]:
            for j in range(len(nbrs)):
                adjacency[j].append(x)
        new_g = g.delete_labels(data["old"]).add_vertices(fresh, adjacency)
        return new_g, frozenset(fresh)
    if rule == _split.RULE_SAFE_VERTEX:
        return g.delete_labels([data["v"]]), i0
    if rule == _split.RULE_CLEANUP:
        fresh = list(data["labels"])
        targets = sorted(lab for lab in g.labels if lab not in i0)
        adjacency = [targets + fresh[:j] for j in range(len(fresh))]
        return g.add_vertices(fresh, adjacency), frozenset()
    if rule == _split.RULE_COMPLEMENT:
        return g.complement(), i0
    raise ValueError(f"unknown rule {rule!r}")


def replay_stages(
    g: Graph, trace: tuple[ReductionStep, ...]
) -> list[tuple[Graph, frozenset[int]]]:
    """All intermediate (graph, marks) states, input first."""
    stages = [(g, frozenset())]
    for step in trace:
        stages.append(apply_step(*stages[-1], step))
    return stages


def replay(g: Graph, trace: tuple[ReductionStep, ...]) -> Graph:
    return replay_stages(g, trace)[-1][0]


def replay_matches(input_graph: Graph, outcome: KernelOutcome) -> bool:
    """Does re-applying the trace reproduce the kernel graph bit-exactly?"""
    if not outcome.is_kernel:
        return True
    return replay(input_graph, outcome.trace) == outcome.instance.graph
