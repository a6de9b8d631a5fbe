"""Pseudofactorization and isometric Hamming/hypercube embeddings of minimal
weighted graphs: construct, decompose, verify, count, and compare."""

from .graphs import (
    DisconnectedGraphError,
    GraphError,
    NotMinimalError,
    ProductGraph,
    Verdict,
    WeightedGraph,
    all_pairs_distances,
    cartesian_product,
    graph_from_json,
    graph_to_json,
    graph_to_json_str,
    is_minimal,
    minimalize,
)
from .relations import EdgeClassPartition, theta_classes, theta_expression, theta_related
from .pseudofactor import (
    PseudofactorError,
    Pseudofactorization,
    is_irreducible,
    project_path_lengths,
    pseudofactorize,
    verify_pseudofactorization,
)
from .embedding import (
    CoordClassPartition,
    EmbeddingError,
    EmbeddingMultiset,
    HammingEmbedding,
    canonical_partition,
    compose_embeddings,
    coord_diff,
    edge_coordinate_pairing,
    embedding_from_tsv,
    embedding_to_tsv,
    equivalent,
    extract_factor_embeddings,
    gamma_classes,
    parse_embedding_tsv,
    strip_constant_digits,
    to_multiset,
    verify_isometric,
)
from .solver import (
    CountResult,
    FactorCertificate,
    SolveLimits,
    SolveRequest,
    SolveResult,
    count_embeddings,
    enumerate_embedding_multisets,
    solve,
    solve_irreducible,
)

__version__ = "0.1.0"

__all__ = [
    "CoordClassPartition",
    "CountResult",
    "DisconnectedGraphError",
    "EdgeClassPartition",
    "EmbeddingError",
    "EmbeddingMultiset",
    "FactorCertificate",
    "GraphError",
    "HammingEmbedding",
    "NotMinimalError",
    "ProductGraph",
    "PseudofactorError",
    "Pseudofactorization",
    "SolveLimits",
    "SolveRequest",
    "SolveResult",
    "Verdict",
    "WeightedGraph",
    "all_pairs_distances",
    "canonical_partition",
    "cartesian_product",
    "compose_embeddings",
    "coord_diff",
    "count_embeddings",
    "edge_coordinate_pairing",
    "embedding_from_tsv",
    "embedding_to_tsv",
    "enumerate_embedding_multisets",
    "equivalent",
    "extract_factor_embeddings",
    "gamma_classes",
    "graph_from_json",
    "graph_to_json",
    "graph_to_json_str",
    "is_irreducible",
    "is_minimal",
    "minimalize",
    "parse_embedding_tsv",
    "project_path_lengths",
    "pseudofactorize",
    "solve",
    "solve_irreducible",
    "strip_constant_digits",
    "theta_classes",
    "theta_expression",
    "theta_related",
    "to_multiset",
    "verify_isometric",
    "verify_pseudofactorization",
]
