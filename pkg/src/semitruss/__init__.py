"""Workbench for finite two-operation distributive structures: Cayley-table
semigroups, semi-trusses and their lambda actions, semi-brace conversion,
set-theoretic Yang-Baxter maps, and exhaustive small-carrier censuses."""

from .census import (
    CensusRecord,
    TrussFilter,
    enumerate_semigroups,
    enumerate_semitrusses,
    run_census,
)
from .core import (
    CheckResult,
    FiniteBinaryOp,
    InverseStructure,
    StructureReport,
    chain_meet_semilattice,
    cyclic_group,
    idempotents,
    inverse_structure,
    is_associative,
    is_left_cancellative,
    left_compatible,
    left_identities,
    left_quotient,
    left_zero,
    right_zero,
    structure_report,
)
from .inverse import (
    InverseSemiTruss,
    check_heap_implications,
    check_induced_lambda_identities,
    check_order_inequalities,
    check_sigma_lambda_identities,
    check_ternary_law,
    derive_mu,
    inverse_semitruss,
    lambda_restricts_to_idempotents,
)
from .truss import (
    SemiTruss,
    SigmaData,
    check_action_laws,
    check_equivalence_laws,
    check_sigma_laws,
    derive_lambda,
    make_semitruss,
    sigma_from_idempotent,
    to_semibrace,
    verify_semibrace,
    verify_semitruss,
)
from .yang_baxter import (
    PairMap,
    build_yb_from_semibrace,
    build_yb_from_semitruss,
    is_bijective,
    verify_ybe,
)

__version__ = "0.1.0"

__all__ = [
    "CensusRecord",
    "CheckResult",
    "FiniteBinaryOp",
    "InverseSemiTruss",
    "InverseStructure",
    "PairMap",
    "SemiTruss",
    "SigmaData",
    "StructureReport",
    "TrussFilter",
    "build_yb_from_semibrace",
    "build_yb_from_semitruss",
    "chain_meet_semilattice",
    "check_action_laws",
    "check_equivalence_laws",
    "check_heap_implications",
    "check_induced_lambda_identities",
    "check_order_inequalities",
    "check_sigma_laws",
    "check_sigma_lambda_identities",
    "check_ternary_law",
    "cyclic_group",
    "derive_lambda",
    "derive_mu",
    "enumerate_semigroups",
    "enumerate_semitrusses",
    "idempotents",
    "inverse_semitruss",
    "inverse_structure",
    "is_associative",
    "is_bijective",
    "is_left_cancellative",
    "lambda_restricts_to_idempotents",
    "left_compatible",
    "left_identities",
    "left_quotient",
    "left_zero",
    "make_semitruss",
    "right_zero",
    "run_census",
    "sigma_from_idempotent",
    "structure_report",
    "to_semibrace",
    "verify_semibrace",
    "verify_semitruss",
    "verify_ybe",
]
