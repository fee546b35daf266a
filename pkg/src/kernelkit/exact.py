"""Exact solvers and recognizers used as ground truth for the kernelizers.

The solver runs iterative deepening over obstruction branching: each
forbidden structure pins down a short list of edits at least one of
which every solution must contain.  Obstructions are branched in
canonical order and edits in lexicographic order, so witnesses are
deterministic.  A vertex-disjoint packing lower bound and a
transposition table keep no-instances cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import Graph, bits
from .model import GraphClass, ProblemKind
from .obstructions import (
    Kind,
    Obstruction,
    c5s,
    first_obstruction,
)


@dataclass(frozen=True)
class ExactResult:
    opt: Optional[int]
    witness: Optional[tuple[tuple[int, int], ...]]
    exhausted: bool


# -- recognizers --------------------------------------------------------


def is_cluster(g: Graph) -> bool:
    """Cluster graphs are exactly the P3-free graphs."""
    return first_obstruction(g, (Kind.P3,)) is None


def is_trivially_perfect(g: Graph) -> bool:
    return first_obstruction(g, (Kind.P4, Kind.C4)) is None


def split_partition(
    g: Graph, allowed: int | None = None
) -> Optional[tuple[frozenset[int], frozenset[int]]]:
    """A clique/independent partition of the (masked) graph, or None.

    Constructed from the degree sequence: with degrees sorted
    non-increasingly, the largest prefix whose i-th degree is at least
    i-1 is the clique side of every split graph.
    """
    full = g.full_mask if allowed is None else allowed
    verts = list(bits(full))
    if first_obstruction(g, (Kind.TWO_K2, Kind.C4, Kind.C5), allowed=full) is not None:
        return None
    deg = {v: (g.rows[v] & full).bit_count() for v in verts}
    order = sorted(verts, key=lambda v: (-deg[v], v))
    m = 0
    for i, v in enumerate(order, start=1):
        if deg[v] >= i - 1:
            m = i
        else:
            break
    clique = frozenset(order[:m])
    independent = frozenset(order[m:])
    if not g.is_clique(clique) or not g.is_independent(independent):
        raise RuntimeError("degree-sequence split partition failed on a split graph")
    return clique, independent


def pseudo_split_partition(
    g: Graph,
) -> Optional[tuple[frozenset[int], frozenset[int], frozenset[int]]]:
    """Partition into clique, independent set, and an optional C5 module."""
    if first_obstruction(g, (Kind.TWO_K2, Kind.C4)) is not None:
        return None
    cycle = next(c5s(g), None)
    if cycle is None:
        parts = split_partition(g)
        assert parts is not None
        return parts[0], parts[1], frozenset()
    s_mask = g.mask_of(cycle)
    clique, independent = set(), set()
    for v in range(g.n):
        if s_mask >> v & 1:
            continue
        common = g.rows[v] & s_mask
        if common == s_mask:
            clique.add(v)
        elif common == 0:
            independent.add(v)
        else:
            raise RuntimeError("C5 is not a module in a 2K2/C4-free graph")
    if not g.is_clique(clique) or not g.is_independent(independent):
        raise RuntimeError("pseudo-split side sets are not clique/independent")
    return frozenset(clique), frozenset(independent), frozenset(cycle)


@dataclass(frozen=True)
class Recognition:
    member: bool
    clique: Optional[frozenset[int]] = None
    independent: Optional[frozenset[int]] = None
    c5_module: Optional[frozenset[int]] = None


def recognize(cls: GraphClass, g: Graph) -> Recognition:
    if cls is GraphClass.CLUSTER:
        return Recognition(is_cluster(g))
    if cls is GraphClass.TRIVIALLY_PERFECT:
        return Recognition(is_trivially_perfect(g))
    if cls is GraphClass.SPLIT:
        parts = split_partition(g)
        if parts is None:
            return Recognition(False)
        return Recognition(True, parts[0], parts[1], frozenset())
    if cls is GraphClass.PSEUDO_SPLIT:
        parts = pseudo_split_partition(g)
        if parts is None:
            return Recognition(False)
        return Recognition(True, parts[0], parts[1], parts[2])
    raise ValueError(f"unknown class {cls}")


def stc_feasible(g: Graph, weak: Iterable[tuple[int, int]]) -> bool:
    """Do the weak edges certify a strong triadic closure of ``g``?

    Requires weak to be a subset of E(g); the strong graph may keep a P3
    only when the two ends are adjacent in ``g`` itself.
    """
    weak = list(weak)
    for u, v in weak:
        if not g.has_edge(u, v):
            return False
    strong = g.remove_edges(weak)
    return _first_stc_violation(strong, g.rows) is None


def valid_solution(
    problem: ProblemKind, g: Graph, edges: Iterable[tuple[int, int]]
) -> bool:
    """Does the edge set solve the instance's graph (budget not checked)?"""
    edges = list(edges)
    if problem is ProblemKind.STRONG_TRIADIC_CLOSURE:
        return stc_feasible(g, edges)
    if problem.is_completion:
        if any(g.has_edge(u, v) for u, v in edges):
            return False
        modified = g.add_edges(edges)
    else:
        if not all(g.has_edge(u, v) for u, v in edges):
            return False
        modified = g.remove_edges(edges)
    cls = {
        ProblemKind.CLUSTER_DELETION: GraphClass.CLUSTER,
        ProblemKind.TP_COMPLETION: GraphClass.TRIVIALLY_PERFECT,
        ProblemKind.SPLIT_DELETION: GraphClass.SPLIT,
        ProblemKind.SPLIT_COMPLETION: GraphClass.SPLIT,
        ProblemKind.PSEUDO_SPLIT_DELETION: GraphClass.PSEUDO_SPLIT,
        ProblemKind.PSEUDO_SPLIT_COMPLETION: GraphClass.PSEUDO_SPLIT,
    }[problem]
    return recognize(cls, modified).member


# -- branching ----------------------------------------------------------

_DELETION_KINDS = {
    ProblemKind.CLUSTER_DELETION: (Kind.P3,),
    ProblemKind.SPLIT_DELETION: (Kind.TWO_K2, Kind.C4, Kind.C5),
    ProblemKind.PSEUDO_SPLIT_DELETION: (Kind.TWO_K2, Kind.C4),
}
_COMPLETION_KINDS = {
    ProblemKind.TP_COMPLETION: (Kind.P4, Kind.C4),
    ProblemKind.SPLIT_COMPLETION: (Kind.TWO_K2, Kind.C4, Kind.C5),
    ProblemKind.PSEUDO_SPLIT_COMPLETION: (Kind.TWO_K2, Kind.C4),
}


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


def _deletion_edits(obs: Obstruction) -> list[tuple[int, int]]:
    vs = obs.vertices
    if obs.kind is Kind.P3:
        x, b, y = vs
        edits = [_pair(x, b), _pair(b, y)]
    elif obs.kind is Kind.TWO_K2:
        a, b, c, d = vs
        edits = [_pair(a, b), _pair(c, d)]
    elif obs.kind is Kind.C4:
        a, b, c, d = vs
        edits = [_pair(a, b), _pair(b, c), _pair(c, d), _pair(a, d)]
    elif obs.kind is Kind.C5:
        a, b, c, d, e = vs
        edits = [_pair(a, b), _pair(b, c), _pair(c, d), _pair(d, e), _pair(a, e)]
    else:
        raise ValueError(f"no deletion branch for {obs.kind}")
    return sorted(edits)


def _completion_edits(obs: Obstruction) -> list[tuple[int, int]]:
    vs = obs.vertices
    if obs.kind is Kind.P4:
        x, y, z, w = vs
        edits = [_pair(x, z), _pair(y, w)]
    elif obs.kind is Kind.C4:
        a, b, c, d = vs
        edits = [_pair(a, c), _pair(b, d)]
    elif obs.kind is Kind.TWO_K2:
        a, b, c, d = vs
        edits = [_pair(a, c), _pair(a, d), _pair(b, c), _pair(b, d)]
    elif obs.kind is Kind.C5:
        a, b, c, d, e = vs
        edits = [_pair(a, c), _pair(a, d), _pair(b, d), _pair(b, e), _pair(c, e)]
    else:
        raise ValueError(f"no completion branch for {obs.kind}")
    return sorted(edits)


def _first_stc_violation(
    strong: Graph, orig_rows, allowed: int | None = None
) -> Optional[tuple[int, int, int]]:
    """Minimum P3 of the strong graph whose missing end pair is no input edge."""
    rows = strong.rows
    full = strong.full_mask if allowed is None else allowed
    for x in bits(full):
        for b in bits(rows[x] & full):
            ys = rows[b] & full & ~orig_rows[x] & ~(1 << x) & (-1 << (x + 1))
            for y in bits(ys):
                return (x, b, y)
    return None


class _Branching:
    """Problem-specific branching hooks shared by search and lower bound."""

    def __init__(self, problem: ProblemKind, g: Graph):
        self.problem = problem
        self.orig_rows = g.rows

    def first(self, g: Graph, allowed: int | None = None) -> Optional[Obstruction]:
        if self.problem is ProblemKind.STRONG_TRIADIC_CLOSURE:
            tup = _first_stc_violation(g, self.orig_rows, allowed)
            return None if tup is None else Obstruction(Kind.P3, tup)
        kinds = _DELETION_KINDS.get(self.problem) or _COMPLETION_KINDS[self.problem]
        return first_obstruction(g, kinds, allowed=allowed)

    def edits(self, obs: Obstruction) -> list[tuple[int, int]]:
        if self.problem is ProblemKind.STRONG_TRIADIC_CLOSURE:
            x, b, y = obs.vertices
            return sorted([_pair(x, b), _pair(b, y)])
        if self.problem.is_completion:
            return _completion_edits(obs)
        return _deletion_edits(obs)

    def apply(self, g: Graph, edit: tuple[int, int]) -> Graph:
        if self.problem.is_completion:
            return g.add_edges([edit])
        return g.remove_edges([edit])

    def packing_bound(self, g: Graph, stop_above: int) -> int:
        """Count vertex-disjoint obstructions greedily; each costs >= 1 edit."""
        count = 0
        allowed = g.full_mask
        while count <= stop_above:
            obs = self.first(g, allowed)
            if obs is None:
                break
            count += 1
            for v in obs.vertices:
                allowed &= ~(1 << v)
        return count


def _search(ctx: _Branching, g: Graph, budget: int, memo: dict):
    obs = ctx.first(g)
    if obs is None:
        return frozenset()
    if budget == 0:
        return None
    key = g.rows
    if memo.get(key, -1) >= budget:
        return None
    if budget >= 3 and ctx.packing_bound(g, budget) > budget:
        memo[key] = budget
        return None
    for edit in ctx.edits(obs):
        sub = _search(ctx, ctx.apply(g, edit), budget - 1, memo)
        if sub is not None:
            return sub | {edit}
    memo[key] = budget
    return None


def solve_exact(problem: ProblemKind, g: Graph, cap: int) -> ExactResult:
    """Minimum modification set of size at most ``cap``, or exhausted."""
    if cap < 0:
        raise ValueError(f"cap must be nonnegative, got {cap}")
    ctx = _Branching(problem, g)
    start = ctx.packing_bound(g, cap)
    if start > cap:
        return ExactResult(None, None, True)
    memo: dict = {}
    for budget in range(start, cap + 1):
        found = _search(ctx, g, budget, memo)
        if found is not None:
            witness = tuple(sorted(found))
            assert len(witness) == budget
            return ExactResult(budget, witness, False)
    return ExactResult(None, None, True)


def sed(g: Graph, cap: int) -> ExactResult:
    """Smallest edge set whose deletion leaves a split graph."""
    return solve_exact(ProblemKind.SPLIT_DELETION, g, cap)


# -- minimal trivially perfect completions ------------------------------


def _tp_restricted_search(g: Graph, budget: int, pool: frozenset, memo: dict):
    """Complete ``g`` with at most ``budget`` additions drawn from ``pool``."""
    obs = first_obstruction(g, (Kind.P4, Kind.C4))
    if obs is None:
        return frozenset()
    if budget == 0:
        return None
    key = g.rows
    if memo.get(key, -1) >= budget:
        return None
    for edit in _completion_edits(obs):
        if edit not in pool:
            continue
        sub = _tp_restricted_search(g.add_edges([edit]), budget - 1, pool, memo)
        if sub is not None:
            return sub | {edit}
    memo[key] = budget
    return None


def minimal_tp_completion(g: Graph, seed: Iterable[tuple[int, int]]) -> Graph:
    """A minimal trivially perfect completion using only seed edges.

    ``g`` plus the seed must already be trivially perfect.  The result
    adds a minimum subset of the seed that completes the graph; being
    minimum it is in particular minimal, and the deterministic branching
    makes the choice reproducible.  (Greedy one-at-a-time edge dropping
    is not enough here: completions of this class are not sandwich
    monotone, so a drop-scan can stall on a non-minimal edge set.)
    """
    kept = frozenset((u, v) if u < v else (v, u) for u, v in seed)
    for u, v in kept:
        if g.has_edge(u, v):
            raise ValueError(f"seed edge ({u},{v}) already present")
    if not is_trivially_perfect(g.add_edges(kept)):
        raise ValueError("graph plus seed is not trivially perfect")
    memo: dict = {}
    for budget in range(len(kept) + 1):
        found = _tp_restricted_search(g, budget, kept, memo)
        if found is not None:
            return g.add_edges(found)
    raise AssertionError("seed completes the graph, search must succeed")
