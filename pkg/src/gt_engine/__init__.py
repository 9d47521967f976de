"""Exact-arithmetic engine for degree-truncated noncommutative tensor algebras.

Provides sparse rational series arithmetic, the Hopf operations, BCH and
univariate series application, the contraction pairing with its units and
inverses, tensorial homotopy intersection forms, and the coaction/cobracket
on cyclic words computed along two independently implemented paths whose
sign conventions are fixed by an audit (see docs/sign_audit.md).
"""

from .cobracket import (
    FROZEN_CONVENTION,
    PRINTED_CONVENTION,
    AuditReport,
    SignAuditError,
    SignConvention,
    boundary_vanishing_defects,
    cojacobi_defect,
    delta_std,
    delta_std_series,
    mu_simple_loop,
    mu_std_closed,
    mu_std_pipeline,
    sign_audit,
)
from .cyclic import (
    CyclicBiSeries,
    CyclicSeries,
    CyclicTriSeries,
    TensorNecklaceSeries,
    alt,
    canonical_rotation,
    cyclic_project,
    cyclic_project2,
    project_first,
    project_second,
)
from .hopf import (
    GroupWord,
    PowerSeries1D,
    antipode,
    apply_series,
    bch,
    bernoulli,
    coproduct,
    coproduct_slot,
    counit,
    exp,
    exp_series,
    is_group_like,
    log,
    log1p_series,
    s_series,
    theta_std,
    z2_over_em1_series,
)
from .intersect import OmegaElement, k_tensor, kappa_std, rho_std, rho_theta, rho_theta_kernel
from .pairing import (
    embed,
    mt_genus0,
    mt_inverse,
    mt_product,
    mt_symplectic,
    mt_unit,
    omega_series,
    q_automorphism,
    theorem_y_lhs,
    theorem_y_rhs,
    x0_series,
    xi,
)
from .tensor import (
    GENUS0,
    SYMPLECTIC,
    AlgebraContext,
    MultiSeries,
    TensorSeries,
    add,
    concat_product,
    filtration_degree,
    genus0_context,
    multi_product,
    outer,
    symplectic_context,
)

__all__ = [
    "AlgebraContext",
    "AuditReport",
    "CyclicBiSeries",
    "CyclicSeries",
    "CyclicTriSeries",
    "FROZEN_CONVENTION",
    "GENUS0",
    "GroupWord",
    "MultiSeries",
    "OmegaElement",
    "PRINTED_CONVENTION",
    "PowerSeries1D",
    "SYMPLECTIC",
    "SignAuditError",
    "SignConvention",
    "TensorNecklaceSeries",
    "TensorSeries",
    "add",
    "alt",
    "antipode",
    "apply_series",
    "bch",
    "bernoulli",
    "boundary_vanishing_defects",
    "canonical_rotation",
    "cojacobi_defect",
    "concat_product",
    "coproduct",
    "coproduct_slot",
    "counit",
    "cyclic_project",
    "cyclic_project2",
    "delta_std",
    "delta_std_series",
    "embed",
    "exp",
    "exp_series",
    "filtration_degree",
    "genus0_context",
    "is_group_like",
    "k_tensor",
    "kappa_std",
    "log",
    "log1p_series",
    "mt_genus0",
    "mt_inverse",
    "mt_product",
    "mt_symplectic",
    "mt_unit",
    "mu_simple_loop",
    "mu_std_closed",
    "mu_std_pipeline",
    "multi_product",
    "omega_series",
    "outer",
    "project_first",
    "project_second",
    "q_automorphism",
    "rho_std",
    "rho_theta",
    "rho_theta_kernel",
    "s_series",
    "sign_audit",
    "symplectic_context",
    "theorem_y_lhs",
    "theorem_y_rhs",
    "theta_std",
    "x0_series",
    "xi",
    "z2_over_em1_series",
]

__version__ = "0.1.0"
