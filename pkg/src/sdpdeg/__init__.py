"""Exact computation of the algebraic degree of semidefinite programming.

The degree is computed by three independent exact algorithms (coefficient
extraction, a residue subset sum over sample points, and closed forms plus
duality) built on a reusable symmetric-polynomial kernel.  No floating
point is used anywhere.
"""

from .degree import (
    ConsistencyError,
    CrossCheckError,
    DegreeResult,
    InvalidTripleError,
    Method,
    PatakiBoundError,
    PatakiTriple,
    UnsupportedRankError,
    default_sample_points,
    delta,
    delta_closed,
    delta_residue,
    delta_theorem1,
    duality_partner,
    h_determinant,
    pairwise_sums,
    random_sample_points,
    valid_triples,
    validate_triple,
)
from .oracle import (
    RootedPolynomial,
    d_coefficient,
    doubly_symmetric_sum,
    is_doubly_symmetric,
    random_doubly_symmetric,
    residue_sum,
)
from .partitions import (
    Partition,
    as_index_set,
    enumerate_partitions,
    index_set_of,
    lambda_of,
)
from .polynomial import (
    SparsePolynomial,
    VariableSpace,
    complete_homogeneous,
    elementary_symmetric,
    pairwise_sum_forms,
    product_coefficient,
    x_space,
    xy_space,
)
from .schur import (
    bareiss_det,
    h_schur_expansion,
    is_symmetric,
    jacobi_trudi_h,
    pascal_minor_det,
    pieri_multiply,
    psi,
    schur_bialternant,
    schur_decompose,
)

__version__ = "0.1.0"

__all__ = [
    "ConsistencyError",
    "CrossCheckError",
    "DegreeResult",
    "InvalidTripleError",
    "Method",
    "Partition",
    "PatakiBoundError",
    "PatakiTriple",
    "RootedPolynomial",
    "SparsePolynomial",
    "UnsupportedRankError",
    "VariableSpace",
    "as_index_set",
    "bareiss_det",
    "complete_homogeneous",
    "d_coefficient",
    "default_sample_points",
    "delta",
    "delta_closed",
    "delta_residue",
    "delta_theorem1",
    "doubly_symmetric_sum",
    "duality_partner",
    "elementary_symmetric",
    "enumerate_partitions",
    "h_determinant",
    "h_schur_expansion",
    "index_set_of",
    "is_doubly_symmetric",
    "is_symmetric",
    "jacobi_trudi_h",
    "lambda_of",
    "pairwise_sum_forms",
    "pairwise_sums",
    "pascal_minor_det",
    "pieri_multiply",
    "product_coefficient",
    "psi",
    "random_doubly_symmetric",
    "random_sample_points",
    "residue_sum",
    "schur_bialternant",
    "schur_decompose",
    "valid_triples",
    "validate_triple",
    "x_space",
    "xy_space",
]
