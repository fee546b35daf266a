from kernelkit import (
    Graph,
    Instance,
    KERNEL,
    ProblemKind,
    TRIVIAL_NO,
    TRIVIAL_YES,
    decide,
    is_trivially_perfect,
    kernelize,
    minimal_tp_completion,
    replay_matches,
    solve_exact,
)
from kernelkit.trivially_perfect import find_forced_edge, find_unobstructed_vertex

from _corpus import all_graphs_up_to, random_graphs

TPC = ProblemKind.TP_COMPLETION

P4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
C4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
K3 = Graph(3, [(0, 1), (0, 2), (1, 2)])
STAR = Graph(4, [(0, 1), (0, 2), (0, 3)])
FAN = Graph(5, [(0, 1), (1, 2), (2, 3), (2, 4)])  # u-a, a-v, v-b1, v-b2


def test_unobstructed_vertex_examples():
    assert find_unobstructed_vertex(STAR) == 0
    assert find_unobstructed_vertex(P4) is None
    lonely = Graph(5, [(0, 1), (1, 2), (2, 3)])
    assert find_unobstructed_vertex(lonely) == 4


def test_forced_edge_examples():
    hit = find_forced_edge(FAN, 1)
    assert hit is not None
    (u, v), count = hit
    assert {u, v} == {0, 2} and count == 2
    assert find_forced_edge(P4, 1) is None
    assert find_forced_edge(K3, 0) is None


def test_kernelize_examples():
    out = kernelize(Instance(C4, 1, TPC))
    verdict, _ = decide(Instance(C4, 1, TPC), out)
    assert verdict is True
    assert kernelize(Instance(P4, 0, TPC)).verdict == TRIVIAL_NO
    assert kernelize(Instance(K3, 0, TPC)).verdict == TRIVIAL_YES
    out = kernelize(Instance(STAR, 0, TPC))
    assert out.verdict == TRIVIAL_YES
    assert len(out.trace) == 4  # the whole star dissolves vertex by vertex


def test_forced_edge_drives_fan():
    out = kernelize(Instance(FAN, 1, TPC))
    assert out.verdict == TRIVIAL_YES
    assert out.trace[0].rule == "forced-edge"
    assert out.trace[0].data["edge"] == [0, 2]


def test_kernel_size_bound():
    from kernelkit import candidate_pairs

    for i, g in enumerate(random_graphs(67, 150, n_max=9)):
        k = i % 4
        out = kernelize(Instance(g, k, TPC))
        if out.verdict == KERNEL:
            kk = out.instance.k
            kernel = out.instance.graph
            assert kernel.n <= 2 * kk * kk + 2 * kk
            assert replay_matches(g, out)
            # every kernel vertex is an endpoint of a completion candidate
            endpoints = set()
            for pair in candidate_pairs(kernel):
                for a, b in pair.edges:
                    endpoints.add(a)
                    endpoints.add(b)
            assert endpoints == set(range(kernel.n))


def test_equivalence_and_lift_random():
    for i, g in enumerate(random_graphs(71, 150, n_max=8)):
        k = i % 4
        inst = Instance(g, k, TPC)
        verdict, cert = decide(inst)
        assert verdict == (not solve_exact(TPC, g, k).exhausted)
        if cert is not None:
            assert is_trivially_perfect(g.add_edges_by_labels(cert))
            assert len(cert) <= k


def test_removal_stability_for_unobstructed_vertices():
    checked = 0
    for g in all_graphs_up_to(5):
        v = find_unobstructed_vertex(g)
        if v is None:
            continue
        cap = g.n * g.n
        whole = solve_exact(TPC, g, cap).opt
        reduced = solve_exact(TPC, g.delete_vertices([v]), cap).opt
        assert whole == reduced
        checked += 1
    assert checked > 100


def test_modules_survive_minimal_completions(rng):
    for g in list(random_graphs(73, 40, n_max=7)):
        non_edges = [
            (u, v)
            for u in range(g.n)
            for v in range(u + 1, g.n)
            if not g.has_edge(u, v)
        ]
        completed = minimal_tp_completion(g, non_edges)
        modules = [
            comb
            for size in range(2, g.n + 1)
            for comb in __import__("itertools").combinations(range(g.n), size)
            if g.is_module(comb)
        ]
        for module in modules:
            assert completed.is_module(module)
        for u, v in g.true_twins():
            assert (u, v) in completed.true_twins()


def test_nested_neighborhoods_survive_minimal_completions():
    for g in list(random_graphs(79, 40, n_max=7)):
        non_edges = [
            (u, v)
            for u in range(g.n)
            for v in range(u + 1, g.n)
            if not g.has_edge(u, v)
        ]
        done = minimal_tp_completion(g, non_edges)
        for u in range(g.n):
            for v in range(g.n):
                if u == v:
                    continue
                if g.closed_mask(u) | g.closed_mask(v) == g.closed_mask(v):
                    assert (
                        done.closed_mask(u) | done.closed_mask(v)
                        == done.closed_mask(v)
                    )
