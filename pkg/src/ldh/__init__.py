"""Locating-dominating sets in hypergraphs."""

from .analysis import (
    BoundsReport,
    LambdaCertificate,
    LDReport,
    Verdict,
    bounds,
    is_ld,
    iter_ld_sets,
    lambda_exact,
    minimum_ld_sets,
    verify_ld,
)
from .families import FamilySpec, OraclePrediction, construct_ld_set, generate, predicted_lambda
from .hypergraph import Hypergraph, StructureProfile, build, classify, degree, neighborhood
from .partitions import closed_twin_classes, coincident_partition, max_packing, natural_partition
from .textformat import parse_hypergraph, serialize
from .transforms import dual, is_hypertree, k_section, level_hypergraph, pendant_ld_set, primal_middle, reduce_sperner

__all__ = [
    "BoundsReport", "FamilySpec", "Hypergraph", "LDReport", "LambdaCertificate",
    "OraclePrediction", "StructureProfile", "Verdict", "bounds", "build", "classify",
    "closed_twin_classes", "coincident_partition", "construct_ld_set", "degree", "dual",
    "generate", "is_hypertree", "is_ld", "iter_ld_sets", "k_section", "lambda_exact", "level_hypergraph",
    "max_packing", "minimum_ld_sets", "natural_partition", "neighborhood", "parse_hypergraph",
    "pendant_ld_set", "predicted_lambda", "primal_middle", "reduce_sperner", "serialize", "verify_ld",
]
