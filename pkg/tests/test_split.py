from kernelkit import (
    Graph,
    Instance,
    KERNEL,
    Kind,
    ProblemKind,
    TRIVIAL_NO,
    TRIVIAL_YES,
    build_modulator,
    ceil_sqrt,
    completion_edge_bound_factor,
    decide,
    induces_kind,
    kernel_vertex_bound,
    kernelize,
    replay_matches,
    solve_exact,
    split_partition,
)
from kernelkit.split import (
    SPLIT_PROFILE,
    AnnotatedSplitState,
    rule_attach_clique_gadget,
    rule_delete_c_vertices,
    rule_delete_marked_edges,
    rule_delete_safe_vertices,
    rule_mark_far_from_clique,
    rule_mark_simplicial,
    rule_merge_marked,
)

from _corpus import random_graphs

SD = ProblemKind.SPLIT_DELETION
SC = ProblemKind.SPLIT_COMPLETION

TWO_K2 = Graph(4, [(0, 1), (2, 3)])
C4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
C5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])


def fresh_state(g, k):
    packing, rest = build_modulator(g)
    parts = split_partition(g, allowed=rest)
    m = [g.labels[v] for obs in packing for v in obs.vertices]
    c_m = [g.labels[v] for v in parts[0]]
    i_m = [g.labels[v] for v in parts[1]]
    return AnnotatedSplitState(g, k, m, c_m, i_m)


def test_build_modulator_examples():
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    packing, rest = build_modulator(star)
    assert packing == [] and rest == star.full_mask

    packing, _ = build_modulator(TWO_K2)
    assert len(packing) == 1 and packing[0].kind is Kind.TWO_K2

    two_c4 = Graph(8, [(0, 1), (1, 2), (2, 3), (0, 3), (4, 5), (5, 6), (6, 7), (4, 7)])
    packing, rest = build_modulator(two_c4)
    assert len(packing) == 2 and rest == 0
    used = [set(o.vertices) for o in packing]
    assert used[0].isdisjoint(used[1])


def test_modulator_packing_is_maximal_and_disjoint():
    for g in random_graphs(83, 80, n_max=9):
        packing, rest = build_modulator(g)
        seen = set()
        for obs in packing:
            assert induces_kind(g, obs.kind, obs.vertices)
            assert seen.isdisjoint(obs.vertices)
            seen.update(obs.vertices)
        assert split_partition(g, allowed=rest) is not None


def test_rule_simplicial_examples():
    state = fresh_state(TWO_K2, 1)
    trivial, _ = rule_mark_simplicial(state, [])
    assert trivial  # |E(G - {0,1})| = 1 <= k

    state = fresh_state(TWO_K2, 0)
    trace = []
    trivial, changed = rule_mark_simplicial(state, trace)
    assert not trivial and changed
    assert trace[0].data["v"] == 0
    assert state.i0 == {0, 1, 2, 3}

    state = fresh_state(C4, 3)
    trivial, changed = rule_mark_simplicial(state, [])
    assert not trivial and not changed  # no simplicial vertex in a C4


def test_rule_decided_vertices_examples():
    # k=0: u nonadjacent to the whole clique side gets marked
    g = Graph(4, [(0, 1), (0, 2), (1, 2)])
    state = fresh_state(g, 0)
    assert state.c_m == {0, 1, 2}
    changed = rule_mark_far_from_clique(state, [], SPLIT_PROFILE)
    assert changed and 3 in state.i0

    # k=0: a center with two marked leaves is a forced clique vertex
    g = Graph(3, [(0, 1), (0, 2)])
    state = fresh_state(g, 0)
    state.mark(1)
    state.mark(2)
    trace = []
    changed = rule_delete_c_vertices(state, trace, SPLIT_PROFILE)
    assert changed
    assert trace[0].data["v"] == 0
    assert 0 not in state.g.labels


def test_rule_marked_edges_examples():
    g = Graph(3, [(0, 1), (1, 2)])
    state = fresh_state(g, 2)
    state.mark(0)
    state.mark(1)
    lift = []
    assert rule_delete_marked_edges(state, [], lift)
    assert state.k == 1 and lift == [(0, 1)]
    assert not rule_delete_marked_edges(state, [], lift)


def test_rule_merge_examples():
    # two marks seen only by x: already the merged shape, so a no-op,
    # and the merged result is (trivially) isomorphic to the state
    g = Graph(3, [(0, 1), (0, 2)])
    state = fresh_state(g, 2)
    state.mark(1)
    state.mark(2)
    assert not rule_merge_marked(state, [], SPLIT_PROFILE)
    assert state.i0 == {1, 2}
    assert state.g.degree(state.g.label_index[0]) == 2

    state = fresh_state(Graph(2, [(0, 1)]), 1)
    assert not rule_merge_marked(state, [], SPLIT_PROFILE)  # empty marked set

    # x attached to the later mark only: not nested, so the merge rewires
    g = Graph(3, [(0, 2)])
    state = fresh_state(g, 1)
    state.mark(1)
    state.mark(2)
    assert rule_merge_marked(state, [], SPLIT_PROFILE)
    assert state.i0 == {3}  # p = 1 fresh mark
    gi = state.g.label_index
    assert state.g.has_edge(gi[0], gi[3])

    # nested attachment counts: x sees three marks, y sees one (the last)
    g = Graph(6, [(0, 2), (0, 3), (0, 4), (1, 4), (0, 1)])
    state = fresh_state(g, 3)
    for lab in (2, 3, 4):
        state.mark(lab)
    assert rule_merge_marked(state, [], SPLIT_PROFILE)
    assert state.i0 == {6, 7, 8}
    gi = state.g.label_index
    assert state.g.degree(gi[0]) >= 3
    assert (state.g.rows[gi[1]] & state.g.mask_of_labels(state.i0)).bit_count() == 1
    # degree profile toward the marks is preserved
    assert (state.g.rows[gi[0]] & state.g.mask_of_labels(state.i0)).bit_count() == 3


def test_rule_safe_vertex_empties_complete_graph():
    k4 = Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    state = AnnotatedSplitState(k4, 0, [], list(range(4)), [])
    assert rule_delete_safe_vertices(state, [])
    assert state.g.n == 0

    # a clique vertex on a marked-free C4 stays put
    state = fresh_state(C4, 1)
    state.c_m = {0}
    state.m = {1, 2, 3}
    assert not rule_delete_safe_vertices(state, [])


def test_cleanup_gadget_sizes():
    for k, expected in [(0, 2), (1, 3), (2, 3), (8, 5)]:
        g = Graph(2, [(0, 1)])
        state = fresh_state(g, k)
        trace = []
        rule_attach_clique_gadget(state, trace)
        assert trace[0].data["t"] == expected
        assert expected * (expected - 1) // 2 > k


def test_kernelize_examples():
    assert kernelize(Instance(TWO_K2, 1, SD)).verdict == TRIVIAL_YES
    assert kernelize(Instance(C4, 0, SD)).verdict == TRIVIAL_NO
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert kernelize(Instance(star, 0, SD)).verdict == TRIVIAL_YES
    # completion wrappers
    assert decide(Instance(C4, 0, SC))[0] is False
    assert decide(Instance(TWO_K2, 1, SC))[0] is True
    k4 = Graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert decide(Instance(k4, 0, SC))[0] is True


def test_equivalence_and_lift_random():
    for i, g in enumerate(random_graphs(89, 150, n_max=9)):
        k = i % 5
        for problem in (SD, SC):
            inst = Instance(g, k, problem)
            out = kernelize(inst)
            verdict, cert = decide(inst, out)
            assert verdict == (not solve_exact(problem, g, k).exhausted)
            assert replay_matches(g, out)


def test_kernel_vertex_and_edge_bounds():
    kernels = 0
    for i, g in enumerate(random_graphs(97, 200, n_max=10)):
        k = i % 5
        for problem in (SD, SC):
            out = kernelize(Instance(g, k, problem))
            if out.verdict != KERNEL:
                continue
            kernels += 1
            kernel = out.instance.graph
            assert kernel.n <= kernel_vertex_bound(problem, k)
            if problem is SC:
                factor = completion_edge_bound_factor(k)
                assert kernel.m <= factor * kernel.n
    assert kernels > 30


def test_valid_partition_lemma():
    # any clique side C of a witnessing partition overlaps the tracked
    # sides in a controlled way; the clique-side overlap bound is the
    # proof-exact form C(x, 2) <= k (the square-root reading is loose by
    # one vertex at the boundary, e.g. one stray clique vertex at k = 0)
    for i, g in enumerate(random_graphs(101, 80, n_max=8)):
        k = i % 4
        if solve_exact(SD, g, k).exhausted:
            continue
        packing, rest = build_modulator(g)
        parts = split_partition(g, allowed=rest)
        c_m = parts[0]
        i_m = parts[1]
        for mask in range(1 << g.n):
            clique = {v for v in range(g.n) if mask >> v & 1}
            if not g.is_clique(clique):
                continue
            rest_set = set(range(g.n)) - clique
            if g.edge_count_within(g.mask_of(rest_set)) > k:
                continue
            assert len(i_m & clique) <= 1
            x = len(c_m & rest_set)
            assert x * (x - 1) <= 2 * k
            assert x <= ceil_sqrt(2 * k) + 1


def test_reduced_state_bounds_from_trace():
    for i, g in enumerate(random_graphs(103, 150, n_max=9)):
        k = i % 5
        if solve_exact(SD, g, k).exhausted:
            continue
        out = kernelize(Instance(g, k, SD))
        gates = [s for s in out.trace if s.rule == "size-gate"]
        if not gates:
            continue
        data = gates[0].data
        kk = data["k"]
        assert not data["fired"]
        assert data["c_m"] ** 2 <= (3 * kk * ceil_sqrt(2 * kk)) ** 2 or data[
            "c_m"
        ] <= 3 * kk * ceil_sqrt(2 * kk)
        assert data["i_m"] <= kk + 1
        assert data["i0"] <= kk
        assert data["m"] <= 5 * k
