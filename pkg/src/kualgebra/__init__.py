"""Finite KU-algebras, KU-valued functions, cut sets and binary block codes."""
from .audit import AuditEntry, AuditReport, audit_propositions, evaluate_claim, recheck
from .codes import BlockCode, codeword_leq, export_hasse, generate_code, verify_order_isomorphism
from .core import (
    AxiomReport,
    KUAlgebra,
    OrderRelation,
    are_isomorphic,
    canonical_form,
    check_derived_identities,
    enumerate_algebras,
    enumerate_algebras_parallel,
    from_poset,
    gcd_algebra,
    infimum,
    is_ku_ideal,
    is_subalgebra,
    natural_order,
    verify_axioms,
)
from .function import (
    CutMatrix,
    KUFunction,
    ThetaPartition,
    cut_matrix,
    cut_set,
    infimum_representation,
    principal_downset,
    theta_partition,
)
from .reconstruct import (
    ReconstructionResult,
    exact_reconstructible,
    reconstruct,
    roundtrip_check,
    roundtrip_report,
)

__version__ = "0.1.0"
