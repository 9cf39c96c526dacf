"""Exact crossing numbers of small graphs with verifiable drawing certificates."""

from .audit import AuditReport, DualGraphH, audit_all, build_h, h_lower_bound
from .drawing import (
    CrossingConfig,
    DrawingCertificate,
    clean_edges,
    crossing_counts,
    is_planar,
    planarize,
    regions,
    subdrawing,
    validate_certificate,
)
from .graph import GPParams, Graph, Partition, build_gp, check_observation1, p103_partition
from .kernel import IMPLEMENTATION as KERNEL
from .solver import (
    Decision,
    SearchBudget,
    SolveResult,
    Status,
    brute_force_oracle,
    crossing_number,
    decide_cr_le,
    euler_lower_bound,
)
from .symmetry import automorphism_group, graph_isomorphic

__all__ = [
    "AuditReport", "CrossingConfig", "Decision", "DrawingCertificate", "DualGraphH", "GPParams", "Graph",
    "KERNEL", "Partition", "SearchBudget", "SolveResult", "Status", "audit_all", "automorphism_group",
    "brute_force_oracle", "build_gp", "build_h", "check_observation1", "clean_edges", "crossing_counts",
    "crossing_number", "decide_cr_le", "euler_lower_bound", "graph_isomorphic", "h_lower_bound", "is_planar",
    "p103_partition", "planarize", "regions", "subdrawing", "validate_certificate",
]
