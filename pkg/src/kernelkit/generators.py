"""Seeded instance generators: planted yes-instances, random graphs, and
the two worked example graphs used throughout the test suite."""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .exact import is_cluster, is_trivially_perfect, pseudo_split_partition, split_partition
from .graph import Graph
from .model import GraphClass, Instance, ProblemKind, TARGET_CLASS

PLANTED = "planted"
UNIFORM = "uniform-random"

_RESAMPLE_CAP = 100


@dataclass(frozen=True)
class GenSpec:
    seed: int
    n: int
    k: int
    problem: ProblemKind
    family: str = PLANTED


def uniform_random(seed: int, n: int, edge_prob: float) -> Graph:
    if not 0.0 <= edge_prob <= 1.0:
        raise ValueError(f"edge probability {edge_prob} out of [0, 1]")
    rng = random.Random(seed)
    edges = [e for e in combinations(range(n), 2) if rng.random() < edge_prob]
    return Graph(n, edges)


def _random_cluster(rng: random.Random, n: int) -> Graph:
    verts = list(range(n))
    rng.shuffle(verts)
    edges = []
    i = 0
    while i < n:
        size = rng.randint(1, max(1, n - i))
        block = verts[i : i + size]
        edges.extend(combinations(sorted(block), 2))
        i += size
    return Graph(n, edges)


def _random_trivially_perfect(rng: random.Random, n: int) -> Graph:
    # grow by either adding a universal vertex or splitting into two parts
    def build(count: int) -> list[tuple[int, int]]:
        if count <= 1:
            return []
        if count == 2 or rng.random() < 0.6:
            inner = build(count - 1)
            return inner + [(count - 1, v) for v in range(count - 1)]
        left = rng.randint(1, count - 1)
        right_edges = build(count - left)
        return build(left) + [(u + left, v + left) for u, v in right_edges]

    return Graph(n, build(n))


def _random_split_like(rng: random.Random, n: int, with_c5: bool) -> Graph:
    verts = list(range(n))
    rng.shuffle(verts)
    edges = []
    s: list[int] = []
    if with_c5 and n >= 5:
        s = verts[:5]
        edges.extend((s[i], s[(i + 1) % 5]) for i in range(5))
        verts = verts[5:]
    c_size = rng.randint(0, len(verts))
    clique, indep = verts[:c_size], verts[c_size:]
    edges.extend(combinations(sorted(clique), 2))
    for u in clique:
        edges.extend((u, w) for w in s)
        for w in indep:
            if rng.random() < 0.5:
                edges.append((u, w))
    return Graph(n, [(min(u, v), max(u, v)) for u, v in edges])


def _in_target_class(problem: ProblemKind, g: Graph) -> bool:
    cls = TARGET_CLASS.get(problem, GraphClass.CLUSTER)
    if cls is GraphClass.CLUSTER:
        return is_cluster(g)
    if cls is GraphClass.TRIVIALLY_PERFECT:
        return is_trivially_perfect(g)
    if cls is GraphClass.SPLIT:
        return split_partition(g) is not None
    return pseudo_split_partition(g) is not None


def _base_member(rng: random.Random, problem: ProblemKind, n: int) -> Graph:
    cls = TARGET_CLASS.get(problem)
    if cls is GraphClass.TRIVIALLY_PERFECT:
        return _random_trivially_perfect(rng, n)
    if cls is GraphClass.SPLIT:
        return _random_split_like(rng, n, with_c5=False)
    if cls is GraphClass.PSEUDO_SPLIT:
        return _random_split_like(rng, n, with_c5=rng.random() < 0.5)
    return _random_cluster(rng, n)


def plant(spec: GenSpec) -> Instance:
    """A member of the target class perturbed by exactly k legal edits.

    Deletion targets get k additions, completion targets k deletions, so
    the planted instance always has optimum at most k.  Perturbations
    that leave the graph inside the class are resampled a bounded number
    of times to keep the parameter meaningful; if a base draw has no room
    for k edits, the base is redrawn a bounded number of times before giving up.
    """
    rng = random.Random(spec.seed)
    problem, n, k = spec.problem, spec.n, spec.k
    adding = not problem.is_completion
    for _ in range(_RESAMPLE_CAP):
        g = _base_member(rng, problem, n)
        feasible = True
        for _ in range(k):
            pool = (
                [e for e in combinations(range(n), 2) if not g.has_edge(*e)]
                if adding
                else g.edges()
            )
            if not pool:
                feasible = False
                break
            choice = rng.choice(pool)
            for _ in range(_RESAMPLE_CAP):
                trial = g.add_edges([choice]) if adding else g.remove_edges([choice])
                if not _in_target_class(problem, trial):
                    break
                choice = rng.choice(pool)
            g = g.add_edges([choice]) if adding else g.remove_edges([choice])
        if feasible:
            return Instance(g, k, problem)
    raise ValueError(f"cannot place {spec.k} perturbations in spec {spec}")


def generate(spec: GenSpec) -> Instance:
    if spec.family == PLANTED:
        return plant(spec)
    if spec.family == UNIFORM:
        prob = 0.2 + 0.6 * random.Random(spec.seed ^ 0x5EED).random()
        return Instance(uniform_random(spec.seed, spec.n, prob), spec.k, spec.problem)
    raise ValueError(f"unknown family {spec.family!r}")


def example_graph(name: str) -> Graph:
    """The two named example graphs: a clique-plus-near-matching pattern
    (fig3) and the five-cycle with a pendant path closure (fig4)."""
    if name == "fig3":
        edges = list(combinations(range(4), 2))
        edges += [(i, 4 + j) for i in range(4) for j in range(4) if i != j]
        return Graph(8, edges)
    if name == "fig4":
        return Graph(6, [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (0, 1), (0, 3)])
    raise ValueError(f"unknown figure {name!r}")
