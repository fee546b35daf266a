from hypothesis import given, settings

from kernelkit import (
    Graph,
    Kind,
    c4_c5_avoiding,
    candidate_multiplicity,
    candidate_pairs,
    enumerate_obstructions,
    first_obstruction,
    i0_centered_p3s,
    induces_kind,
    is_cluster,
    is_trivially_perfect,
    example_graph,
    pseudo_split_partition,
    split_partition,
    vertex_in_obstruction,
)

from _corpus import all_graphs_up_to, random_graphs
from _oracles import naive_obstructions
from conftest import graphs

ALL_KINDS = (Kind.P3, Kind.P4, Kind.C4, Kind.C5, Kind.TWO_K2)

C4 = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
C5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)])
P4 = Graph(4, [(0, 1), (1, 2), (2, 3)])
STAR = Graph(4, [(0, 1), (0, 2), (0, 3)])


def test_enumerate_examples():
    assert enumerate_obstructions(C4, (Kind.C4,)) == [
        (Kind.C4, (0, 1, 2, 3))
    ]
    assert enumerate_obstructions(C5, (Kind.TWO_K2, Kind.C4)) == []
    fig4 = example_graph("fig4")
    hits = enumerate_obstructions(fig4, (Kind.C4,))
    assert [set(o.vertices) for o in hits] == [{0, 1, 2, 3}]


def test_vertex_in_obstruction_examples():
    assert not vertex_in_obstruction(STAR, 0, (Kind.P4, Kind.C4))
    assert vertex_in_obstruction(P4, 0, (Kind.P4, Kind.C4))
    fig4 = example_graph("fig4")
    assert not vertex_in_obstruction(fig4, 5, (Kind.TWO_K2, Kind.C4))
    assert vertex_in_obstruction(fig4, 0, (Kind.C4,))


def test_candidate_pairs_examples():
    pairs = candidate_pairs(P4)
    assert len(pairs) == 1
    assert pairs[0].edges == ((0, 2), (1, 3))
    k3 = Graph(3, [(0, 1), (0, 2), (1, 2)])
    assert candidate_pairs(k3) == []
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (2, 4)])  # u-a, a-v, v-b1, v-b2
    assert candidate_multiplicity(g, (0, 2)) == 2
    assert candidate_multiplicity(g, (2, 0)) == 2
    assert candidate_multiplicity(g, (0, 1)) == 0  # an edge is never a candidate


def test_i0_centered_examples():
    p3 = Graph(3, [(0, 1), (1, 2)])
    hits = i0_centered_p3s(p3, [1])
    assert [o.vertices for o in hits] == [(1, 0, 2)]
    assert i0_centered_p3s(p3, [0]) == []
    assert not c4_c5_avoiding(C4, 0, [])
    assert c4_c5_avoiding(C4, 0, [2])


def test_canonical_tuples_realize_their_kind():
    for g in random_graphs(11, 60, n_max=8):
        for obs in enumerate_obstructions(g, ALL_KINDS):
            assert induces_kind(g, obs.kind, obs.vertices)


def test_enumeration_matches_naive_scan_exhaustive():
    for g in all_graphs_up_to(5):
        mine = {(o.kind, o.vertices) for o in enumerate_obstructions(g, ALL_KINDS)}
        assert mine == naive_obstructions(g, ALL_KINDS)


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=7))
def test_enumeration_matches_naive_scan_random(g):
    mine = {(o.kind, o.vertices) for o in enumerate_obstructions(g, ALL_KINDS)}
    assert mine == naive_obstructions(g, ALL_KINDS)


def test_enumeration_matches_naive_scan_eight_vertices():
    for g in random_graphs(137, 40, n_max=8):
        mine = {(o.kind, o.vertices) for o in enumerate_obstructions(g, ALL_KINDS)}
        assert mine == naive_obstructions(g, ALL_KINDS)


def test_enumeration_sorted_and_limit():
    for g in random_graphs(13, 30, n_max=8):
        full = enumerate_obstructions(g, ALL_KINDS)
        assert [o.vertices for o in full] == sorted(o.vertices for o in full)
        assert enumerate_obstructions(g, ALL_KINDS, limit=3) == full[:3]
        head = first_obstruction(g, ALL_KINDS)
        assert head == (full[0] if full else None)


def test_vertex_membership_matches_enumeration():
    for g in random_graphs(17, 60, n_max=8):
        by_vertex = {v: False for v in range(g.n)}
        for obs in enumerate_obstructions(g, ALL_KINDS):
            for v in obs.vertices:
                by_vertex[v] = True
        for v in range(g.n):
            assert vertex_in_obstruction(g, v, ALL_KINDS) == by_vertex[v]


def test_class_characterizations_match_recognizers():
    for g in random_graphs(19, 120, n_max=8):
        assert is_cluster(g) == (not enumerate_obstructions(g, (Kind.P3,)))
        assert is_trivially_perfect(g) == (
            not enumerate_obstructions(g, (Kind.P4, Kind.C4))
        )
        assert (split_partition(g) is not None) == (
            not enumerate_obstructions(g, (Kind.TWO_K2, Kind.C4, Kind.C5))
        )
        assert (pseudo_split_partition(g) is not None) == (
            not enumerate_obstructions(g, (Kind.TWO_K2, Kind.C4))
        )
