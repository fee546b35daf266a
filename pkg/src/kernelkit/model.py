"""Problem kinds, instances, reduction steps, and kernelization outcomes."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Mapping, Optional

from .graph import Graph


class ProblemKind(str, Enum):
    CLUSTER_DELETION = "cluster-del"
    STRONG_TRIADIC_CLOSURE = "stc"
    TP_COMPLETION = "tpc"
    SPLIT_DELETION = "split-del"
    SPLIT_COMPLETION = "split-comp"
    PSEUDO_SPLIT_DELETION = "pseudo-del"
    PSEUDO_SPLIT_COMPLETION = "pseudo-comp"

    @property
    def is_completion(self) -> bool:
        return self in (
            ProblemKind.TP_COMPLETION,
            ProblemKind.SPLIT_COMPLETION,
            ProblemKind.PSEUDO_SPLIT_COMPLETION,
        )


class GraphClass(str, Enum):
    CLUSTER = "cluster"
    TRIVIALLY_PERFECT = "trivially-perfect"
    SPLIT = "split"
    PSEUDO_SPLIT = "pseudo-split"


TARGET_CLASS = {
    ProblemKind.CLUSTER_DELETION: GraphClass.CLUSTER,
    ProblemKind.TP_COMPLETION: GraphClass.TRIVIALLY_PERFECT,
    ProblemKind.SPLIT_DELETION: GraphClass.SPLIT,
    ProblemKind.SPLIT_COMPLETION: GraphClass.SPLIT,
    ProblemKind.PSEUDO_SPLIT_DELETION: GraphClass.PSEUDO_SPLIT,
    ProblemKind.PSEUDO_SPLIT_COMPLETION: GraphClass.PSEUDO_SPLIT,
}


@dataclass(frozen=True)
class Instance:
    """One unit of work: a graph, an edge budget, and the problem kind."""

    graph: Graph
    k: int
    problem: ProblemKind


@dataclass(frozen=True, eq=True)
class ReductionStep:
    rule: str
    data: Mapping[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"rule": self.rule, **self.data}


TRIVIAL_YES = "trivial-yes"
TRIVIAL_NO = "trivial-no"
KERNEL = "kernel"


@dataclass(frozen=True, eq=True)
class KernelOutcome:
    """Result of a kernelization run.

    ``instance`` is set only for the kernel verdict; ``lift`` holds the
    forced modifications (original-label edge pairs) accumulated by the
    rules, which together with the trace map a kernel solution back to a
    solution of the input.
    """

    verdict: str
    instance: Optional[Instance] = None
    trace: tuple[ReductionStep, ...] = ()
    lift: tuple[tuple[int, int], ...] = ()

    @property
    def is_kernel(self) -> bool:
        return self.verdict == KERNEL

    def rule_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for step in self.trace:
            counts[step.rule] = counts.get(step.rule, 0) + 1
        return counts
