"""Nil-Hecke algebra: normal forms, membership, grading and verification routines."""

from .algebra import (
    NilHecke, NilHeckeElement, NotInNilHecke, nil_hecke,
    membership, nh_mul, grade, specialize, theta_word_invariance,
)
from .hbar_zero import phi2_failures, phi_image, phi_relation_failures, verify_phi2
from .morita import (
    GradedModuleSlice, ModuleReport, MoritaUnitNotFound, direct_sum,
    module_extension_check, morita_unit, regular_slice, swap_slice, sym_slice,
    verify_morita_unit,
)
from .theorems import (
    braid_failures, centrality_failures, defrel_failures, faithfulness_rank,
    invariant_polynomials, verify_th0,
)

__all__ = [
    "NilHecke", "NilHeckeElement", "NotInNilHecke", "nil_hecke",
    "membership", "nh_mul", "grade", "specialize", "theta_word_invariance",
    "phi_image", "verify_phi2", "phi_relation_failures", "phi2_failures",
    "GradedModuleSlice", "ModuleReport", "MoritaUnitNotFound", "direct_sum",
    "module_extension_check", "morita_unit", "regular_slice", "swap_slice",
    "sym_slice", "verify_morita_unit",
    "braid_failures", "centrality_failures", "defrel_failures",
    "faithfulness_rank", "invariant_polynomials", "verify_th0",
]
