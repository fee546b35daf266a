"""Annotated-state kernelization shared by split and pseudo-split problems.

The deletion pipeline keeps a partition of the vertices into a
modulator remnant M, a clique side C_M, an independent side I_M, and a
marked set I0 of vertices that must sit on the independent side of any
witnessing partition.  Rules mark, delete, or rebuild vertices; a final
clique gadget removes the marks.  Completion variants run the same
pipeline on the complement.  All bookkeeping is in original labels so
traces survive vertex compaction.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bounds import cleanup_clique_size
from .exact import split_partition
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
from .obstructions import (
    Kind,
    Obstruction,
    first_obstruction,
    in_i0_centered_p3,
    no_c4_c5_through,
    vertex_in_obstruction,
)

RULE_MODULATOR = "modulator"
RULE_MARK_SIMPLICIAL = "mark-simplicial"
RULE_SIMPLICIAL_YES = "simplicial-yes"
RULE_MARK_FAR = "mark-far-from-clique"
RULE_DELETE_CVERTEX = "delete-c-vertex"
RULE_I0_EDGES = "delete-marked-edges"
RULE_MERGE = "merge-marked"
RULE_SAFE_VERTEX = "delete-safe-vertex"
RULE_SIZE_GATE = "size-gate"
RULE_CLEANUP = "attach-clique-gadget"
RULE_COMPLEMENT = "complement"


@dataclass(frozen=True)
class PipelineProfile:
    """Thresholds distinguishing the split and pseudo-split pipelines."""

    deletion_problem: ProblemKind
    completion_problem: ProblemKind
    pseudo: bool

    def far_from_clique(self, k: int, nonneighbors: int) -> bool:
        # forcing needs the binomial form: x of the tracked clique pushed
        # to the independent side costs C(x, 2), so only x(x-1) > 2k pins
        # the vertex down (x*x > 2k alone mis-marks at the boundary); the
        # cycle-module variant tolerates one surviving cycle edge
        x = nonneighbors
        if self.pseudo:
            return x * (x - 1) > 2 * k + 2
        return x * (x - 1) > 2 * k

    def c_vertex(self, k: int, mixed: int, marked: int) -> bool:
        # mixed counts neighbors in I_M u I0, marked those in I0 alone; the
        # second trigger keeps the merged mark count within the kernel bound
        if self.pseudo:
            return mixed >= k + 4 or marked >= k + 3
        return mixed >= k + 2 or marked >= k + 1

    def merge_cap(self, k: int) -> int:
        return k + 2 if self.pseudo else k

    def gate_slack(self, k: int) -> int:
        return 3 * k + 5 if self.pseudo else k + 1

    def modulator_trivial_no(self, packing: list[Obstruction], k: int) -> bool:
        size = sum(len(obs.vertices) for obs in packing)
        if not self.pseudo:
            return size > 5 * k
        cycles = sum(1 for obs in packing if obs.kind is Kind.C5)
        others = len(packing) - cycles
        return size > 4 * k + 5 or others + 2 * max(cycles - 1, 0) > k


SPLIT_PROFILE = PipelineProfile(
    ProblemKind.SPLIT_DELETION, ProblemKind.SPLIT_COMPLETION, pseudo=False
)
PSEUDO_PROFILE = PipelineProfile(
    ProblemKind.PSEUDO_SPLIT_DELETION, ProblemKind.PSEUDO_SPLIT_COMPLETION, pseudo=True
)


def build_modulator(g: Graph) -> tuple[list[Obstruction], int]:
    """Greedy maximal packing of vertex-disjoint 2K2/C4/C5 occurrences.

    Returns the packing (vertex ids, canonical scan order) and the mask
    of vertices outside it; the graph induced on that mask is split.
    """
    packing = []
    allowed = g.full_mask
    while True:
        obs = first_obstruction(g, (Kind.TWO_K2, Kind.C4, Kind.C5), allowed=allowed)
        if obs is None:
            return packing, allowed
        packing.append(obs)
        for v in obs.vertices:
            allowed &= ~(1 << v)


class AnnotatedSplitState:
    """Working state of the pipeline; all sets hold original labels."""

    def __init__(self, graph: Graph, k: int, m, c_m, i_m):
        self.g = graph
        self.k = k
        self.m = set(m)
        self.c_m = set(c_m)
        self.i_m = set(i_m)
        self.i0: set[int] = set()
        self.next_label = max(graph.labels, default=-1) + 1

    def mask(self, labels) -> int:
        return self.g.mask_of_labels(labels)

    def mark(self, label: int) -> None:
        self.m.discard(label)
        self.c_m.discard(label)
        self.i_m.discard(label)
        self.i0.add(label)

    def delete_label(self, label: int) -> None:
        self.m.discard(label)
        self.c_m.discard(label)
        self.i_m.discard(label)
        self.i0.discard(label)
        self.g = self.g.delete_labels([label])

    def check_invariants(self, i0_independent: bool = False) -> None:
        parts = [self.m, self.c_m, self.i_m, self.i0]
        union = set().union(*parts)
        assert sum(len(p) for p in parts) == len(union) == self.g.n
        assert union == set(self.g.labels)
        idx = self.g.label_index
        assert self.g.is_clique(idx[lab] for lab in self.c_m)
        assert self.g.is_independent(idx[lab] for lab in self.i_m)
        if i0_independent:
            assert self.g.is_independent(idx[lab] for lab in self.i0)


# -- individual rules ----------------------------------------------------


def rule_mark_simplicial(state: AnnotatedSplitState, trace: list) -> tuple[bool, bool]:
    """Mark simplicial vertices; cheap ones certify a yes-instance.

    Returns (trivial_yes, changed).
    """
    changed = False
    while True:
        g = state.g
        i0_mask = state.mask(state.i0)
        best = None
        for v in range(g.n):
            if i0_mask >> v & 1:
                continue
            if not g.is_simplicial(v):
                continue
            if best is None or g.labels[v] < g.labels[best]:
                best = v
        if best is None:
            return False, changed
        v = best
        keep = g.full_mask & ~((g.rows[v] | 1 << v) & ~i0_mask)
        count = g.edge_count_within(keep)
        if count <= state.k:
            witness = sorted(g.label_pair(u, w) for u, w in g.edges_within(keep))
            trace.append(
                ReductionStep(
                    RULE_SIMPLICIAL_YES,
                    {"v": g.labels[v], "witness": [list(e) for e in witness]},
                )
            )
            return True, changed
        trace.append(ReductionStep(RULE_MARK_SIMPLICIAL, {"v": g.labels[v]}))
        state.mark(g.labels[v])
        changed = True


def rule_mark_far_from_clique(
    state: AnnotatedSplitState, trace: list, profile: PipelineProfile
) -> bool:
    g = state.g
    i0_mask = state.mask(state.i0)
    cm_mask = state.mask(state.c_m)
    marked = []
    for v in range(g.n):
        if i0_mask >> v & 1:
            continue
        nonneighbors = (cm_mask & ~g.rows[v] & ~(1 << v)).bit_count()
        if profile.far_from_clique(state.k, nonneighbors):
            marked.append(g.labels[v])
    if not marked:
        return False
    trace.append(ReductionStep(RULE_MARK_FAR, {"marked": sorted(marked)}))
    for lab in marked:
        state.mark(lab)
    return True


def rule_delete_c_vertices(
    state: AnnotatedSplitState, trace: list, profile: PipelineProfile
) -> bool:
    changed = False
    while True:
        g = state.g
        i0_mask = state.mask(state.i0)
        mixed_mask = state.mask(state.i_m) | i0_mask
        best = None
        for v in range(g.n):
            if i0_mask >> v & 1:
                continue
            mixed = (g.rows[v] & mixed_mask).bit_count()
            marked = (g.rows[v] & i0_mask).bit_count()
            if profile.c_vertex(state.k, mixed, marked):
                if best is None or g.labels[v] < g.labels[best]:
                    best = v
        if best is None:
            return changed
        v = best
        closed = g.rows[v] | (1 << v)
        newly = sorted(g.labels[u] for u in bits(g.full_mask & ~closed & ~i0_mask))
        trace.append(
            ReductionStep(RULE_DELETE_CVERTEX, {"v": g.labels[v], "marked": newly})
        )
        vlabel = g.labels[v]
        for lab in newly:
            state.mark(lab)
        state.delete_label(vlabel)
        changed = True


def rule_delete_marked_edges(
    state: AnnotatedSplitState, trace: list, lift: list
) -> bool:
    g = state.g
    i0_mask = state.mask(state.i0)
    edges = g.edges_within(i0_mask)
    if not edges:
        return False
    pairs = sorted(g.label_pair(u, w) for u, w in edges)
    trace.append(
        ReductionStep(
            RULE_I0_EDGES,
            {"edges": [list(e) for e in pairs], "k_delta": -len(pairs)},
        )
    )
    lift.extend(pairs)
    state.g = g.remove_edges(edges)
    state.k -= len(pairs)
    return True


def rule_merge_marked(
    state: AnnotatedSplitState, trace: list, profile: PipelineProfile
) -> bool:
    """Replace I0 by fresh marked vertices carrying the same edge counts.

    A no-op when the marked set is already in merged normal form, which
    keeps restart passes from churning fresh labels forever.
    """
    g = state.g
    if not state.i0:
        return False
    i0_mask = state.mask(state.i0)
    idx = g.label_index
    attach = []
    for v in range(g.n):
        if i0_mask >> v & 1:
            continue
        nbrs = g.rows[v] & i0_mask
        if nbrs:
            attach.append(
                (g.labels[v], sorted(g.labels[u] for u in bits(nbrs)))
            )
    attach.sort()
    p = max((len(nbrs) for _, nbrs in attach), default=0)
    if p > profile.merge_cap(state.k):
        # a vertex with this many marked neighbors is a forced clique
        # vertex; let the next pass delete it before merging
        return False
    i0_sorted = sorted(state.i0)
    if len(i0_sorted) == p:
        prefix_ok = all(nbrs == i0_sorted[: len(nbrs)] for _, nbrs in attach)
        if prefix_ok:
            return False
    fresh = list(range(state.next_label, state.next_label + p))
    state.next_label += p
    trace.append(
        ReductionStep(
            RULE_MERGE,
            {
                "old": i0_sorted,
                "fresh": fresh,
                "attach": [[x, nbrs] for x, nbrs in attach],
            },
        )
    )
    new_g = g.delete_labels(state.i0)
    adjacency: list[list[int]] = [[] for _ in fresh]
    for x, nbrs in attach:
        for j in range(len(nbrs)):
            adjacency[j].append(x)
    state.g = new_g.add_vertices(fresh, adjacency)
    state.i0 = set(fresh)
    return True


def is_safe_clique_vertex(g: Graph, v: int, i0_mask: int) -> bool:
    """No forbidden structure of the annotated instance passes through v.

    Besides plain 2K2s, marked-center P3s, and C4/C5s avoiding the marks,
    an edge at v opposite a nonadjacent vertex that has a marked neighbor
    is forbidden as well: once marks are re-encoded as pendants, that
    pair re-forms a 2K2 through v even when the marked vertex itself is
    adjacent to v's side, so deleting v could lower the optimum.
    """
    if vertex_in_obstruction(g, v, (Kind.TWO_K2,)):
        return False
    if in_i0_centered_p3(g, v, i0_mask):
        return False
    if not no_c4_c5_through(g, v, g.full_mask & ~i0_mask):
        return False
    anchored = 0
    for x in bits(g.full_mask & ~i0_mask):
        if g.rows[x] & i0_mask:
            anchored |= 1 << x
    for w in bits(g.rows[v] & ~i0_mask):
        blockers = anchored & ~g.rows[v] & ~g.rows[w] & ~(1 << v) & ~(1 << w)
        if blockers:
            return False
    return True


def rule_delete_safe_vertices(state: AnnotatedSplitState, trace: list) -> bool:
    changed = False
    while True:
        g = state.g
        i0_mask = state.mask(state.i0)
        idx = g.label_index
        found = None
        for lab in sorted(state.c_m):
            if is_safe_clique_vertex(g, idx[lab], i0_mask):
                found = lab
                break
        if found is None:
            return changed
        trace.append(ReductionStep(RULE_SAFE_VERTEX, {"v": found}))
        state.delete_label(found)
        changed = True


def rule_attach_clique_gadget(state: AnnotatedSplitState, trace: list) -> None:
    t = cleanup_clique_size(state.k)
    fresh = list(range(state.next_label, state.next_label + t))
    state.next_label += t
    i0_sorted = sorted(state.i0)
    targets = sorted(lab for lab in state.g.labels if lab not in state.i0)
    trace.append(
        ReductionStep(RULE_CLEANUP, {"labels": fresh, "t": t, "i0": i0_sorted})
    )
    adjacency = [targets + fresh[:j] for j in range(t)]
    state.g = state.g.add_vertices(fresh, adjacency)
    state.i0 = set()


# -- the pipeline --------------------------------------------------------


def run_deletion_pipeline(inst: Instance, profile: PipelineProfile) -> KernelOutcome:
    if inst.k < 0:
        raise ValueError("budget must be nonnegative at entry")
    g, k = inst.graph, inst.k
    trace: list[ReductionStep] = []
    lift: list[tuple[int, int]] = []

    packing, rest_mask = build_modulator(g)
    packing_labels = [
        {"kind": obs.kind.value, "vertices": [g.labels[v] for v in obs.vertices]}
        for obs in packing
    ]
    parts = split_partition(g, allowed=rest_mask)
    assert parts is not None, "graph minus a maximal packing must be split"
    c_m = sorted(g.labels[v] for v in parts[0])
    i_m = sorted(g.labels[v] for v in parts[1])
    trace.append(
        ReductionStep(
            RULE_MODULATOR, {"packing": packing_labels, "c_m": c_m, "i_m": i_m}
        )
    )
    if profile.modulator_trivial_no(packing, k):
        return KernelOutcome(TRIVIAL_NO, trace=tuple(trace), lift=tuple(lift))

    m_labels = [g.labels[v] for obs in packing for v in obs.vertices]
    state = AnnotatedSplitState(g, k, m_labels, c_m, i_m)
    if __debug__:
        state.check_invariants()

    while True:
        if state.k < 0:
            return KernelOutcome(TRIVIAL_NO, trace=tuple(trace), lift=tuple(lift))
        changed = False
        trivial_yes, fired = rule_mark_simplicial(state, trace)
        if trivial_yes:
            return KernelOutcome(TRIVIAL_YES, trace=tuple(trace), lift=tuple(lift))
        changed |= fired
        changed |= rule_mark_far_from_clique(state, trace, profile)
        changed |= rule_delete_c_vertices(state, trace, profile)
        changed |= rule_delete_marked_edges(state, trace, lift)
        if state.k < 0:
            continue
        # a merge that does real work restarts the loop: rebuilding the
        # marked side can change simpliciality elsewhere
        changed |= rule_merge_marked(state, trace, profile)
        changed |= rule_delete_safe_vertices(state, trace)
        if __debug__:
            state.check_invariants(i0_independent=True)
        if not changed:
            break

    slack = profile.gate_slack(state.k)
    s = len(state.c_m) + len(state.i_m) - slack
    fired = s >= 1 and s * s > 18 * state.k**3
    trace.append(
        ReductionStep(
            RULE_SIZE_GATE,
            {
                "m": len(state.m),
                "c_m": len(state.c_m),
                "i_m": len(state.i_m),
                "i0": len(state.i0),
                "k": state.k,
                "fired": fired,
            },
        )
    )
    if fired:
        return KernelOutcome(TRIVIAL_NO, trace=tuple(trace), lift=tuple(lift))

    rule_attach_clique_gadget(state, trace)
    return KernelOutcome(
        KERNEL,
        instance=Instance(state.g, state.k, profile.deletion_problem),
        trace=tuple(trace),
        lift=tuple(lift),
    )


def _wrap_completion(inst: Instance, profile: PipelineProfile) -> KernelOutcome:
    inner = run_deletion_pipeline(
        Instance(inst.graph.complement(), inst.k, profile.deletion_problem), profile
    )
    steps = (ReductionStep(RULE_COMPLEMENT, {}),) + inner.trace
    if inner.verdict != KERNEL:
        return KernelOutcome(inner.verdict, trace=steps, lift=inner.lift)
    steps = steps + (ReductionStep(RULE_COMPLEMENT, {}),)
    kernel_graph = inner.instance.graph.complement()
    return KernelOutcome(
        KERNEL,
        instance=Instance(kernel_graph, inner.instance.k, profile.completion_problem),
        trace=steps,
        lift=inner.lift,
    )


def kernelize_split_deletion(inst: Instance) -> KernelOutcome:
    if inst.problem is not ProblemKind.SPLIT_DELETION:
        raise ValueError(f"unsupported problem {inst.problem}")
    return run_deletion_pipeline(inst, SPLIT_PROFILE)


def kernelize_split_completion(inst: Instance) -> KernelOutcome:
    if inst.problem is not ProblemKind.SPLIT_COMPLETION:
        raise ValueError(f"unsupported problem {inst.problem}")
    return _wrap_completion(inst, SPLIT_PROFILE)
