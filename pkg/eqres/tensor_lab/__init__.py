"""Exact multilinear algebra over QQ for small ``n``."""

from .linmap import LinMap, matrix_rank, rank_of_vectors, same_span
from .maps import (
    coassociativity_paths,
    comult_ext,
    permute_factors,
    shuffle_terms,
    sort_sign,
    sym_product,
    verify_coassociativity,
    wedge_product,
)
from .schur import (
    Bracketing,
    PieriMode,
    SchurModule,
    columns_to_rows,
    highest_tableau,
    labeled_embedding,
    pieri_inclusion,
    schur_module,
    verify_sam,
)
from .spaces import (
    DEFAULT_BASIS_CAP,
    Factor,
    FactorKind,
    Tableau,
    TensorSpace,
    kostka,
    semistandard_tableaux,
)

__all__ = [
    "Bracketing",
    "DEFAULT_BASIS_CAP",
    "Factor",
    "FactorKind",
    "LinMap",
    "PieriMode",
    "SchurModule",
    "Tableau",
    "TensorSpace",
    "coassociativity_paths",
    "columns_to_rows",
    "comult_ext",
    "highest_tableau",
    "kostka",
    "labeled_embedding",
    "matrix_rank",
    "permute_factors",
    "pieri_inclusion",
    "rank_of_vectors",
    "same_span",
    "schur_module",
    "semistandard_tableaux",
    "shuffle_terms",
    "sort_sign",
    "sym_product",
    "verify_coassociativity",
    "verify_sam",
    "wedge_product",
]
