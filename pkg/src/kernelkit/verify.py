"""Kernelizer dispatch and end-to-end resolution with certificates."""

from __future__ import annotations

from typing import Optional

from .cluster import kernelize_cluster_family, lift_cluster_solution
from .exact import solve_exact, valid_solution
from .lifting import lift_split_family_solution
from .model import (
    TRIVIAL_NO,
    TRIVIAL_YES,
    Instance,
    KernelOutcome,
    ProblemKind,
)
from .pseudo_split import (
    kernelize_pseudo_split_completion,
    kernelize_pseudo_split_deletion,
)
from .split import kernelize_split_completion, kernelize_split_deletion
from .trivially_perfect import kernelize_tp_completion, lift_tp_solution

_KERNELIZERS = {
    ProblemKind.CLUSTER_DELETION: kernelize_cluster_family,
    ProblemKind.STRONG_TRIADIC_CLOSURE: kernelize_cluster_family,
    ProblemKind.TP_COMPLETION: kernelize_tp_completion,
    ProblemKind.SPLIT_DELETION: kernelize_split_deletion,
    ProblemKind.SPLIT_COMPLETION: kernelize_split_completion,
    ProblemKind.PSEUDO_SPLIT_DELETION: kernelize_pseudo_split_deletion,
    ProblemKind.PSEUDO_SPLIT_COMPLETION: kernelize_pseudo_split_completion,
}


def kernelize(inst: Instance) -> KernelOutcome:
    """Run the reduction pipeline matching the instance's problem."""
    return _KERNELIZERS[inst.problem](inst)


def lift_solution(
    inst: Instance, outcome: KernelOutcome, kernel_witness: frozenset
) -> frozenset:
    """Map a kernel solution (label pairs) to an input solution."""
    problem = inst.problem
    if problem in (ProblemKind.CLUSTER_DELETION, ProblemKind.STRONG_TRIADIC_CLOSURE):
        return lift_cluster_solution(inst, outcome, kernel_witness)
    if problem is ProblemKind.TP_COMPLETION:
        return lift_tp_solution(inst, outcome, kernel_witness)
    return lift_split_family_solution(inst, outcome, kernel_witness)


def certificate_valid(inst: Instance, pairs) -> bool:
    """Size within budget and the modification lands in the target class."""
    pairs = list(pairs)
    if len(pairs) > inst.k:
        return False
    idx = inst.graph.label_index
    id_pairs = [(idx[a], idx[b]) for a, b in pairs]
    return valid_solution(inst.problem, inst.graph, id_pairs)


def decide(
    inst: Instance, outcome: Optional[KernelOutcome] = None
) -> tuple[bool, Optional[frozenset]]:
    """Kernelize, resolve the kernel exactly, and certify yes answers.

    Returns the verdict and, for a yes resolved through a kernel, the
    lifted input-level solution (validated before returning).
    """
    if outcome is None:
        outcome = kernelize(inst)
    if outcome.verdict == TRIVIAL_YES:
        return True, None
    if outcome.verdict == TRIVIAL_NO:
        return False, None
    sub = outcome.instance
    result = solve_exact(sub.problem, sub.graph, sub.k)
    if result.exhausted:
        return False, None
    witness = frozenset(sub.graph.label_pair(u, v) for u, v in result.witness)
    certificate = lift_solution(inst, outcome, witness)
    if not certificate_valid(inst, certificate):
        raise RuntimeError(
            f"lifted certificate failed validation for {inst.problem.value}"
        )
    return True, certificate
