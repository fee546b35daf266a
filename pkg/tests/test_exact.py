import pytest

from kernelkit import (
    Graph,
    GraphClass,
    ProblemKind,
    minimal_tp_completion,
    example_graph,
    recognize,
    sed,
    solve_exact,
    stc_feasible,
    valid_solution,
)

from _corpus import all_graphs_up_to, random_graphs
from _oracles import (
    cluster_deletion_opt,
    is_tp_by_universal_recursion,
    pseudo_split_deletion_opt,
    split_deletion_opt,
    stc_opt,
    tp_completion_opt,
)

P3 = Graph(3, [(0, 1), (1, 2)])
C4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
C5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
P4 = Graph(4, [(0, 1), (1, 2), (2, 3)])


def test_solve_exact_examples():
    assert solve_exact(ProblemKind.CLUSTER_DELETION, P3, 2).opt == 1
    fig4 = example_graph("fig4")
    assert solve_exact(ProblemKind.PSEUDO_SPLIT_DELETION, fig4, 3).opt == 2
    assert solve_exact(ProblemKind.SPLIT_DELETION, C5, 3).opt == 2


def test_exhausted_flag():
    result = solve_exact(ProblemKind.CLUSTER_DELETION, P3, 0)
    assert result.exhausted and result.opt is None and result.witness is None
    with pytest.raises(ValueError):
        solve_exact(ProblemKind.CLUSTER_DELETION, P3, -1)


def test_sed_examples():
    assert sed(C5, 3).opt == 2
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert sed(star, 2).opt == 0
    fig4 = example_graph("fig4")
    value = sed(fig4, 5).opt
    assert value == split_deletion_opt(fig4)
    opt = pseudo_split_deletion_opt(fig4)
    assert opt <= value <= opt + 2


def test_witnesses_are_valid_and_deterministic():
    problems = list(ProblemKind)
    for i, g in enumerate(random_graphs(23, 80, n_max=8)):
        problem = problems[i % len(problems)]
        first = solve_exact(problem, g, 4)
        second = solve_exact(problem, g, 4)
        assert first == second
        if not first.exhausted:
            assert valid_solution(problem, g, first.witness)
            assert len(first.witness) == first.opt


def test_witnesses_pass_recognizers_exhaustive_to_seven():
    from _corpus import atlas_graphs

    for problem in ProblemKind:
        for g in atlas_graphs(7):
            cap = max(g.m, g.n * g.n)
            result = solve_exact(problem, g, cap)
            assert result.opt is not None
            assert valid_solution(problem, g, result.witness)


def test_witnesses_pass_recognizers_random_eight():
    problems = list(ProblemKind)
    for i, g in enumerate(random_graphs(139, 70, n_max=8)):
        problem = problems[i % len(problems)]
        result = solve_exact(problem, g, max(g.m, g.n * g.n))
        assert result.opt is not None
        assert valid_solution(problem, g, result.witness)


def test_opt_matches_bruteforce_exhaustive_small():
    for g in all_graphs_up_to(4):
        cap = max(g.m, g.n * g.n)
        assert solve_exact(ProblemKind.CLUSTER_DELETION, g, cap).opt == cluster_deletion_opt(g)
        assert solve_exact(ProblemKind.SPLIT_DELETION, g, cap).opt == split_deletion_opt(g)
        assert solve_exact(ProblemKind.PSEUDO_SPLIT_DELETION, g, cap).opt == pseudo_split_deletion_opt(g)
        assert solve_exact(ProblemKind.TP_COMPLETION, g, cap).opt == tp_completion_opt(g)
        assert solve_exact(ProblemKind.STRONG_TRIADIC_CLOSURE, g, cap).opt == stc_opt(g)


def test_opt_matches_bruteforce_random():
    for i, g in enumerate(random_graphs(29, 40, n_max=7)):
        cap = g.n * g.n
        assert solve_exact(ProblemKind.CLUSTER_DELETION, g, cap).opt == cluster_deletion_opt(g)
        assert solve_exact(ProblemKind.SPLIT_DELETION, g, cap).opt == split_deletion_opt(g)
        assert solve_exact(ProblemKind.PSEUDO_SPLIT_DELETION, g, cap).opt == pseudo_split_deletion_opt(g)
        if i % 4 == 0 and g.m <= 12:
            assert solve_exact(ProblemKind.STRONG_TRIADIC_CLOSURE, g, cap).opt == stc_opt(g)
        if i % 4 == 1 and g.n <= 6:
            assert solve_exact(ProblemKind.TP_COMPLETION, g, cap).opt == tp_completion_opt(g)


def test_completion_equals_deletion_on_complement():
    pairs = [
        (ProblemKind.SPLIT_COMPLETION, ProblemKind.SPLIT_DELETION),
        (ProblemKind.PSEUDO_SPLIT_COMPLETION, ProblemKind.PSEUDO_SPLIT_DELETION),
    ]
    for g in random_graphs(31, 60, n_max=8):
        for completion, deletion in pairs:
            a = solve_exact(completion, g, 4)
            b = solve_exact(deletion, g.complement(), 4)
            assert a.exhausted == b.exhausted
            if not a.exhausted:
                assert a.opt == b.opt


def test_stc_at_most_cluster_deletion():
    for g in random_graphs(37, 60, n_max=8):
        cap = g.m
        stc = solve_exact(ProblemKind.STRONG_TRIADIC_CLOSURE, g, cap).opt
        cd = solve_exact(ProblemKind.CLUSTER_DELETION, g, cap).opt
        assert stc <= cd
        # every cluster deletion witness is an stc solution
        witness = solve_exact(ProblemKind.CLUSTER_DELETION, g, cap).witness
        assert stc_feasible(g, witness)


def test_recognize_examples():
    rec = recognize(GraphClass.PSEUDO_SPLIT, C5)
    assert rec.member
    assert rec.clique == frozenset() and rec.independent == frozenset()
    assert rec.c5_module == frozenset(range(5))
    assert not recognize(GraphClass.SPLIT, C5).member
    assert not recognize(GraphClass.TRIVIALLY_PERFECT, P4).member
    assert recognize(GraphClass.CLUSTER, Graph(3, [(0, 1)])).member


def test_recognize_tp_matches_universal_recursion():
    for g in random_graphs(41, 120, n_max=8):
        assert recognize(GraphClass.TRIVIALLY_PERFECT, g).member == (
            is_tp_by_universal_recursion(g)
        )


def test_split_partition_witnesses():
    for g in random_graphs(43, 120, n_max=8):
        rec = recognize(GraphClass.SPLIT, g)
        if rec.member:
            assert g.is_clique(rec.clique)
            assert g.is_independent(rec.independent)
            assert rec.clique | rec.independent == frozenset(range(g.n))


def test_minimal_tp_completion_examples():
    seed = [(0, 2), (0, 3), (1, 3)]
    done = minimal_tp_completion(P4, seed)
    added = done.m - P4.m
    assert added <= 2
    assert is_tp_by_universal_recursion(done)
    # single-edge drops all break the class: minimality
    for e in done.edges():
        if e not in P4.edges():
            assert not is_tp_by_universal_recursion(done.remove_edges([e]))

    tp = Graph(3, [(0, 1), (0, 2)])
    assert minimal_tp_completion(tp, []) == tp

    k4_minus = minimal_tp_completion(C4, [(0, 2), (1, 3)])
    assert k4_minus.m == 5
    assert is_tp_by_universal_recursion(k4_minus)


def test_minimal_tp_completion_rejects_bad_seed():
    with pytest.raises(ValueError):
        minimal_tp_completion(P4, [(0, 1)])  # already an edge
    with pytest.raises(ValueError):
        minimal_tp_completion(P4, [(0, 3)])  # not trivially perfect with seed
