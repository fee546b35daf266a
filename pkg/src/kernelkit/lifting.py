"""Mapping kernel solutions of the split family back to input solutions.

The kernel witness induces a valid partition of the kernel graph; that
partition is walked backward through the trace, one inverse per rule.
Each stage's deletion set is recomputed from the partition, so the walk
only needs to restore partition validity and never grows the budget
beyond the forced deletions recorded in the trace.
"""

from __future__ import annotations

from itertools import permutations

from .exact import pseudo_split_partition, split_partition
from .graph import Graph, bits
from .model import Instance, KernelOutcome, ProblemKind, ReductionStep
from .replay import replay_stages
from .split import (
    PSEUDO_PROFILE,
    SPLIT_PROFILE,
    RULE_CLEANUP,
    RULE_COMPLEMENT,
    RULE_DELETE_CVERTEX,
    RULE_I0_EDGES,
    RULE_MARK_FAR,
    RULE_MARK_SIMPLICIAL,
    RULE_MERGE,
    RULE_MODULATOR,
    RULE_SAFE_VERTEX,
    RULE_SIMPLICIAL_YES,
    RULE_SIZE_GATE,
)


def find_spanning_c5(g: Graph, s_labels) -> list[int] | None:
    """A 5-cycle through all of ``s_labels`` using edges of ``g``, if any."""
    idx = g.label_index
    ids = sorted(idx[lab] for lab in s_labels)
    if len(ids) != 5:
        return None
    a = ids[0]
    for perm in permutations(ids[1:]):
        if perm[0] > perm[-1]:
            continue
        order = [a, *perm]
        if all(g.has_edge(order[i], order[(i + 1) % 5]) for i in range(5)):
            return [g.labels[v] for v in order]
    return None


def required_edges(g: Graph, C: set, I: set, S: set) -> set[tuple[int, int]]:
    """Deletions forced by a partition: inner-I edges, S-I edges, S chords."""
    i_mask = g.mask_of_labels(I)
    edges = {g.label_pair(u, w) for u, w in g.edges_within(i_mask)}
    if S:
        s_mask = g.mask_of_labels(S)
        for u in bits(s_mask):
            for w in bits(g.rows[u] & i_mask):
                edges.add(g.label_pair(u, w))
        cycle = find_spanning_c5(g, S)
        assert cycle is not None, "partition lost its spanning cycle"
        cyc = {
            (a, b) if a < b else (b, a)
            for a, b in ((cycle[i], cycle[(i + 1) % 5]) for i in range(5))
        }
        for u, w in g.edges_within(s_mask):
            pair = g.label_pair(u, w)
            if pair not in cyc:
                edges.add(pair)
    return edges


def partition_valid(g: Graph, C: set, I: set, S: set, i0=frozenset()) -> bool:
    labels = set(g.labels)
    if (C | I | S) != labels or len(C) + len(I) + len(S) != len(labels):
        return False
    if not set(i0) <= I:
        return False
    idx = g.label_index
    if not g.is_clique(idx[lab] for lab in C):
        return False
    if S:
        if len(S) != 5 or find_spanning_c5(g, S) is None:
            return False
        s_mask = g.mask_of_labels(S)
        for lab in C:
            if (g.rows[idx[lab]] & s_mask) != s_mask:
                return False
    return True


def _normalize_to_split(C: set, I: set, S: set, g: Graph):
    """Trade the C5 module for a split partition of equal or smaller cost."""
    cycle = find_spanning_c5(g, S)
    assert cycle is not None
    idx = g.label_index
    cyc_pairs = {frozenset((cycle[i], cycle[(i + 1) % 5])) for i in range(5)}
    s_mask = g.mask_of_labels(S)
    # a chord makes a triangle with two consecutive cycle vertices: keep it
    for u, w in sorted(g.edges_within(s_mask)):
        pu, pw = g.labels[u], g.labels[w]
        if frozenset((pu, pw)) in cyc_pairs:
            continue
        pos = {lab: i for i, lab in enumerate(cycle)}
        i, j = pos[pu], pos[pw]
        start = i if (j - i) % 5 == 2 else j
        rot = [cycle[(start + t) % 5] for t in range(5)]
        return C | {rot[0], rot[1], rot[2]}, I | {rot[3], rot[4]}, set()
    # an independent vertex in a triangle with a cycle edge frees that edge
    for ulabel in sorted(I):
        u = idx[ulabel]
        for i in range(5):
            a, b = cycle[i], cycle[(i + 1) % 5]
            if g.has_edge(u, idx[a]) and g.has_edge(u, idx[b]):
                rest = {cycle[(i + 2) % 5], cycle[(i + 3) % 5], cycle[(i + 4) % 5]}
                return C | {a, b}, I | rest, set()
    return None


def _undo_safe_vertex(vlabel: int, C: set, I: set, S: set, g_before: Graph, g_after: Graph):
    v = g_before.label_index[vlabel]

    def try_place(C, I, S):
        cs_mask = g_before.mask_of_labels(C | S)
        if (g_before.rows[v] & cs_mask) == cs_mask:
            return C | {vlabel}, I, S
        is_mask = g_before.mask_of_labels(I | S)
        if (g_before.rows[v] & is_mask) == 0:
            return C, I | {vlabel}, S
        return None

    placed = try_place(C, I, S)
    if placed is None and S:
        norm = _normalize_to_split(C, I, S, g_after)
        if norm is not None:
            placed = try_place(*norm)
    if placed is None:
        raise RuntimeError(f"safe-vertex inverse found no placement for {vlabel}")
    return placed


def _inverse_step(
    step: ReductionStep, C: set, I: set, S: set, g_before: Graph, g_after: Graph
):
    """Returns the pre-step partition and the budget delta of the step."""
    rule = step.rule
    data = step.data
    if rule in (
        RULE_MODULATOR,
        RULE_MARK_SIMPLICIAL,
        RULE_MARK_FAR,
        RULE_SIZE_GATE,
        RULE_SIMPLICIAL_YES,
    ):
        return C, I, S, 0
    if rule == RULE_DELETE_CVERTEX:
        return C | {data["v"]}, I, S, 0
    if rule == RULE_I0_EDGES:
        return C, I, S, len(data["edges"])
    if rule == RULE_MERGE:
        fresh = set(data["fresh"])
        assert fresh <= I, "merged marks strayed off the independent side"
        return C, (I - fresh) | set(data["old"]), S, 0
    if rule == RULE_SAFE_VERTEX:
        C2, I2, S2 = _undo_safe_vertex(data["v"], C, I, S, g_before, g_after)
        return C2, I2, S2, 0
    if rule == RULE_CLEANUP:
        gadget = set(data["labels"])
        i0 = frozenset(data["i0"])
        candidates = []
        if not (S & gadget):
            candidates.append((C - gadget, I - gadget, set(S)))
        candidates.append((C - gadget, (I | S) - gadget, set()))
        for cand in candidates:
            if partition_valid(g_before, *cand, i0):
                return (*cand, 0)
        raise RuntimeError("gadget removal produced no valid partition")
    raise ValueError(f"unknown rule {rule!r}")


def lift_split_family_solution(
    inst: Instance, outcome: KernelOutcome, kernel_witness: frozenset
) -> frozenset:
    """Input-level solution built from a kernel witness (label pairs)."""
    problem = inst.problem
    profile = (
        PSEUDO_PROFILE
        if problem
        in (ProblemKind.PSEUDO_SPLIT_DELETION, ProblemKind.PSEUDO_SPLIT_COMPLETION)
        else SPLIT_PROFILE
    )
    steps = list(outcome.trace)
    if problem.is_completion:
        assert steps[0].rule == RULE_COMPLEMENT and steps[-1].rule == RULE_COMPLEMENT
        core = steps[1:-1]
        base = inst.graph.complement()
    else:
        core = steps
        base = inst.graph
    stages = replay_stages(base, tuple(core))
    kernel_graph = stages[-1][0]
    h = kernel_graph.remove_edges_by_labels(kernel_witness)

    if profile.pseudo:
        parts = pseudo_split_partition(h)
        assert parts is not None, "kernel witness does not solve the kernel"
        C = {h.labels[v] for v in parts[0]}
        I = {h.labels[v] for v in parts[1]}
        S = {h.labels[v] for v in parts[2]}
    else:
        parts = split_partition(h)
        assert parts is not None, "kernel witness does not solve the kernel"
        C = {h.labels[v] for v in parts[0]}
        I = {h.labels[v] for v in parts[1]}
        S: set[int] = set()

    budget = outcome.instance.k
    for i in range(len(core) - 1, -1, -1):
        step = core[i]
        g_before, i0_before = stages[i]
        C, I, S, delta = _inverse_step(step, C, I, S, g_before, stages[i + 1][0])
        budget += delta
        assert partition_valid(g_before, C, I, S, i0_before), step.rule
        cost = len(required_edges(g_before, C, I, S))
        assert cost <= budget, (step.rule, cost, budget)
    return frozenset(required_edges(stages[0][0], C, I, S))
