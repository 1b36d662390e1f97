"""Completing neighbourhood blocks to a design, or proving it cannot be done."""
from .algorithms import (
    ALGORITHMS,
    CoverInstance,
    SearchOutcome,
    Status,
    algorithm_a,
    algorithm_b,
    algorithm_c,
    algorithm_d,
    cover_instance,
    exact_cover,
    triple_partitions,
)
from .batch import BatchRecord, BatchReport, batch, parse_pipeline
from .candidates import CandidateSet, candidate_blocks
from .certificate import check_weight_certificate, weight_certificate
from .cover import BudgetExceeded, ExactCover
from .randgraph import random_regular_girth5

__all__ = [
    "ALGORITHMS", "BatchRecord", "BatchReport", "BudgetExceeded", "CandidateSet", "CoverInstance",
    "ExactCover", "SearchOutcome", "Status", "algorithm_a", "algorithm_b", "algorithm_c",
    "algorithm_d", "batch", "candidate_blocks", "cover_instance", "exact_cover", "parse_pipeline",
    "random_regular_girth5", "triple_partitions", "weight_certificate", "check_weight_certificate",
]
