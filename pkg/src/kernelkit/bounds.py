"""Integer-exact radical thresholds and kernel size bounds.

All comparisons against square roots are evaluated by squaring, so no
verdict ever depends on floating point.
"""

from __future__ import annotations

from math import isqrt

from .model import ProblemKind


def ceil_sqrt(x: int) -> int:
    if x < 0:
        raise ValueError("negative radicand")
    r = isqrt(x)
    return r if r * r == x else r + 1


def exceeds_sqrt(count: int, radicand: int) -> bool:
    """count > sqrt(radicand), evaluated exactly."""
    return count >= 1 and count * count > radicand


def cleanup_clique_size(k: int) -> int:
    """Gadget clique size: smallest convenient t with C(t,2) > k."""
    return max(2, ceil_sqrt(2 * k) + 1)


def kernel_vertex_bound(problem: ProblemKind, k: int) -> int:
    """Vertex bound of the emitted kernel, radicals rounded up."""
    r = ceil_sqrt(2 * k)
    if problem in (ProblemKind.CLUSTER_DELETION, ProblemKind.STRONG_TRIADIC_CLOSURE):
        return 2 * k
    if problem is ProblemKind.TP_COMPLETION:
        return 2 * k * k + 2 * k
    if problem in (ProblemKind.SPLIT_DELETION, ProblemKind.SPLIT_COMPLETION):
        return 5 * k + k + (3 * k * r + r + 1) + k + 1
    if problem in (
        ProblemKind.PSEUDO_SPLIT_DELETION,
        ProblemKind.PSEUDO_SPLIT_COMPLETION,
    ):
        return (4 * k + 5) + (k + 2) + (3 * k * r + 2 * k + 2 + r + 1) + (k + 3)
    raise ValueError(f"no bound for {problem}")


def completion_edge_bound_factor(k: int) -> int:
    """Per-vertex factor bounding the edges of split completion kernels."""
    return 6 * k + ceil_sqrt(2 * k) + 3
