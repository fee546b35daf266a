"""Kernelization toolkit for edge modification problems.

Reduces instances of cluster edge deletion, strong triadic closure,
trivially perfect completion, and split / pseudo-split edge deletion and
completion to small equivalent kernels, with exact desk-scale solvers to
certify every verdict.
"""

from .bounds import ceil_sqrt, completion_edge_bound_factor, kernel_vertex_bound
from .cluster import kernelize_cluster_family
from .exact import (
    ExactResult,
    is_cluster,
    is_trivially_perfect,
    minimal_tp_completion,
    pseudo_split_partition,
    recognize,
    sed,
    solve_exact,
    split_partition,
    stc_feasible,
    valid_solution,
)
from .generators import GenSpec, example_graph, generate, plant, uniform_random
from .graph import Graph, bits
from .model import (
    KERNEL,
    TRIVIAL_NO,
    TRIVIAL_YES,
    GraphClass,
    Instance,
    KernelOutcome,
    ProblemKind,
    ReductionStep,
)
from .obstructions import (
    CandidatePair,
    Kind,
    Obstruction,
    c4_c5_avoiding,
    candidate_multiplicity,
    candidate_pairs,
    enumerate_obstructions,
    first_obstruction,
    i0_centered_p3s,
    induces_kind,
    vertex_in_obstruction,
)
from .pseudo_split import (
    kernelize_pseudo_split_completion,
    kernelize_pseudo_split_deletion,
    modulator_gate,
)
from .replay import replay, replay_matches
from .split import (
    build_modulator,
    kernelize_split_completion,
    kernelize_split_deletion,
)
from .trivially_perfect import kernelize_tp_completion
from .verify import certificate_valid, decide, kernelize, lift_solution

__all__ = [
    "CandidatePair",
    "ExactResult",
    "GenSpec",
    "Graph",
    "GraphClass",
    "Instance",
    "KERNEL",
    "KernelOutcome",
    "Kind",
    "Obstruction",
    "ProblemKind",
    "ReductionStep",
    "TRIVIAL_NO",
    "TRIVIAL_YES",
    "bits",
    "build_modulator",
    "c4_c5_avoiding",
    "candidate_multiplicity",
    "candidate_pairs",
    "ceil_sqrt",
    "certificate_valid",
    "completion_edge_bound_factor",
    "decide",
    "enumerate_obstructions",
    "example_graph",
    "first_obstruction",
    "generate",
    "i0_centered_p3s",
    "induces_kind",
    "is_cluster",
    "is_trivially_perfect",
    "kernel_vertex_bound",
    "kernelize",
    "kernelize_cluster_family",
    "kernelize_pseudo_split_completion",
    "kernelize_pseudo_split_deletion",
    "kernelize_split_completion",
    "kernelize_split_deletion",
    "kernelize_tp_completion",
    "lift_solution",
    "minimal_tp_completion",
    "modulator_gate",
    "plant",
    "pseudo_split_partition",
    "recognize",
    "replay",
    "replay_matches",
    "sed",
    "solve_exact",
    "split_partition",
    "stc_feasible",
    "uniform_random",
    "valid_solution",
    "vertex_in_obstruction",
]
