"""Kernelization for pseudo-split edge deletion and completion.

Reuses the annotated split pipeline with relaxed thresholds (the target
class tolerates one C5 module) and a modulator gate that also accounts
for the fact that at most one packed C5 can survive unmodified.
"""

from __future__ import annotations

from .model import Instance, KernelOutcome, ProblemKind
from .obstructions import Kind, Obstruction
from .split import (
    PSEUDO_PROFILE,
    _wrap_completion,
    run_deletion_pipeline,
)


def modulator_gate(packing: list[Obstruction], k: int) -> bool:
    """True when the packing alone certifies a no-instance."""
    return PSEUDO_PROFILE.modulator_trivial_no(packing, k)


def packing_cost(packing: list[Obstruction]) -> int:
    """Minimum edits the packing forces: one per 2K2/C4, two per extra C5."""
    cycles = sum(1 for obs in packing if obs.kind is Kind.C5)
    others = len(packing) - cycles
    return others + 2 * max(cycles - 1, 0)


def kernelize_pseudo_split_deletion(inst: Instance) -> KernelOutcome:
    if inst.problem is not ProblemKind.PSEUDO_SPLIT_DELETION:
        raise ValueError(f"unsupported problem {inst.problem}")
    return run_deletion_pipeline(inst, PSEUDO_PROFILE)


def kernelize_pseudo_split_completion(inst: Instance) -> KernelOutcome:
    if inst.problem is not ProblemKind.PSEUDO_SPLIT_COMPLETION:
        raise ValueError(f"unsupported problem {inst.problem}")
    return _wrap_completion(inst, PSEUDO_PROFILE)
