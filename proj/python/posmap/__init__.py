"""Positivity analysis of linear maps between matrix algebras.

Maps are carried by their Choi matrices. The package decides complete
positivity exactly, k-positivity via a see-saw over Schmidt-class vectors,
and decomposability via projected ascent over PPT states. "Certified no"
verdicts always carry re-checkable witnesses; "heuristic yes" verdicts are
lower-bound evidence, not proofs.
"""

from posmap._core import (
    CMatrix,
    CpSplit,
    InvalidInput,
    LinMap,
    NegativeOfCpMap,
    NotSelfAdjoint,
    OptConfig,
    OptReport,
    OracleReport,
    PptOptReport,
    SchmidtVector,
    StateDensity,
    Verdict,
    WitnessCheck,
    WitnessInapplicable,
    __version__,
    analyze_json,
    apply_map,
    check_witness_preconditions,
    choi_from_json,
    compose,
    cone_norm,
    cp_split,
    extend_witness,
    functional_pair,
    gallery,
    gallery_names,
    is_completely_positive,
    is_decomposable,
    is_k_positive,
    is_positive,
    kpos_bruteforce_oracle,
    kron,
    map_from_choi,
    pairing,
    ppt_sup,
    random_cp_map,
    random_ppt_state,
    random_selfadjoint_map,
    random_separable_state,
    random_superpositive,
    sup_schmidt,
    tensor_id,
    transpose_compose,
    verify_split,
)

__all__ = [
    "CMatrix",
    "CpSplit",
    "InvalidInput",
    "LinMap",
    "NegativeOfCpMap",
    "NotSelfAdjoint",
    "OptConfig",
    "OptReport",
    "OracleReport",
    "PptOptReport",
    "SchmidtVector",
    "StateDensity",
    "Verdict",
    "WitnessCheck",
    "WitnessInapplicable",
    "__version__",
    "analyze_json",
    "apply_map",
    "check_witness_preconditions",
    "choi_from_json",
    "compose",
    "cone_norm",
    "cp_split",
    "extend_witness",
    "functional_pair",
    "gallery",
    "gallery_names",
    "is_completely_positive",
    "is_decomposable",
    "is_k_positive",
    "is_positive",
    "kpos_bruteforce_oracle",
    "kron",
    "map_from_choi",
    "pairing",
    "ppt_sup",
    "random_cp_map",
    "random_ppt_state",
    "random_selfadjoint_map",
    "random_separable_state",
    "random_superpositive",
    "sup_schmidt",
    "tensor_id",
    "transpose_compose",
    "verify_split",
]
