"""Exact-arithmetic invariants of stable module categories.

Integer linear algebra (Smith normal form, determinants), finitely generated
abelian groups, and the homotopy K-theory computations built on top of them:
algebra families reduced to Cartan data, shift matrices, cluster-category
phantom verdicts, and Quillen's K-groups of finite fields.
"""

from ._backend import backend_name
from .abelian import AbGroup, cokernel, direct_sum, kernel, mod_action_kernel_cokernel
from .algebras import (
    GradedAlgebraDescriptor,
    elem_abelian_group_algebra,
    exterior,
    from_document,
    from_file,
    nakayama,
    tensor,
    truncated_poly,
)
from .cluster import (
    ClusterReport,
    cluster_cone_matrix,
    parity_check,
    phantom_verdict,
    tau_inverse_matrix,
)
from .errors import (
    DimensionError,
    DomainError,
    InternalInconsistencyError,
    OracleGuardError,
    SchemaError,
    StablekhError,
)
from .ktheory import (
    FiniteFieldSpec,
    InvariantResult,
    SymbolicCone,
    k0_consistency,
    phantom_scan,
    quillen_k,
    stable_kh,
    symbolic_cone,
)
from .shiftmat import (
    KoszulColumn,
    ShiftMatrixSpec,
    build_shift_matrix,
    exterior_shift_matrix,
    koszul_column,
    verify_snf_factorization,
)
from .zmatrix import SNFResult, ZMatrix

__version__ = "0.1.0"

__all__ = [
    "AbGroup",
    "ClusterReport",
    "DimensionError",
    "DomainError",
    "FiniteFieldSpec",
    "GradedAlgebraDescriptor",
    "InternalInconsistencyError",
    "InvariantResult",
    "KoszulColumn",
    "OracleGuardError",
    "SNFResult",
    "SchemaError",
    "ShiftMatrixSpec",
    "StablekhError",
    "SymbolicCone",
    "ZMatrix",
    "__version__",
    "backend_name",
    "build_shift_matrix",
    "cluster_cone_matrix",
    "cokernel",
    "direct_sum",
    "elem_abelian_group_algebra",
    "exterior",
    "exterior_shift_matrix",
    "from_document",
    "from_file",
    "k0_consistency",
    "kernel",
    "koszul_column",
    "mod_action_kernel_cokernel",
    "nakayama",
    "parity_check",
    "phantom_scan",
    "phantom_verdict",
    "quillen_k",
    "stable_kh",
    "symbolic_cone",
    "tau_inverse_matrix",
    "tensor",
    "truncated_poly",
    "verify_snf_factorization",
]
