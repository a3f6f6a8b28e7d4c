"""Finite permutation groups, fusion systems over their Sylow subgroups,
and checkers for nilpotency criteria of saturated fusion systems."""

from .permgroup import (
    CapExceededError,
    Caps,
    ContradictionError,
    GroupHom,
    Permutation,
    PermGroup,
    QuotientGroup,
    Subgroup,
    automorphism_group,
    caps,
    center,
    centralizer,
    characteristic_subgroups,
    commutator_subgroup,
    enumerate_subgroups,
    get_caps,
    isomorphic_to,
    isomorphism,
    load_group,
    nilpotency_data,
    normal_subgroups,
    normalizer,
    o_p,
    o_p_prime,
    parse_cycles,
    parse_group_text,
    quotient_group,
    semidirect_product,
    set_caps,
    sylow_subgroup,
    sylow_subgroups,
)
from .catalog import (
    CORPUS,
    make_fpf_example,
    make_named_group,
    parse_group_name,
    semidirect_case,
)
from .fusion import (
    FusionSystem,
    aut_f,
    check_saturation,
    f_conjugacy_classes,
    fullness_status,
    fusion_from_group,
    generate_fusion_system,
    hom_set,
    inner_fusion_system,
    n_phi,
    out_f,
)
from .analysis import (
    alperin_decompose,
    alperin_family,
    centric_radical_table,
    is_centric,
    is_normal_in_F,
    is_radical,
    is_weakly_closed,
    normalizer_fusion_system,
    quotient_fusion_system,
)
from .fsaut import (
    AutGroupU,
    FusionAut,
    fusion_preserving_automorphisms,
    induced_fusion_aut_from_group,
    induced_sharp,
    is_fpf_fusion_aut,
    is_T_automorphism_group,
)
from .theorems import (
    TheoremReport,
    check_lemma_semidirect,
    check_theorem_A,
    check_theorem_B,
    involves,
    is_H_free,
    is_nilpotent_fusion,
    model_group,
    sigma4_free,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "Caps",
    "ContradictionError",
    "GroupHom",
    "Permutation",
    "PermGroup",
    "QuotientGroup",
    "Subgroup",
    "automorphism_group",
    "caps",
    "center",
    "centralizer",
    "characteristic_subgroups",
    "commutator_subgroup",
    "enumerate_subgroups",
    "get_caps",
    "isomorphic_to",
    "isomorphism",
    "load_group",
    "nilpotency_data",
    "normal_subgroups",
    "normalizer",
    "o_p",
    "o_p_prime",
    "parse_cycles",
    "parse_group_text",
    "quotient_group",
    "semidirect_product",
    "set_caps",
    "sylow_subgroup",
    "sylow_subgroups",
    "CORPUS",
    "make_fpf_example",
    "make_named_group",
    "parse_group_name",
    "semidirect_case",
    "FusionSystem",
    "aut_f",
    "check_saturation",
    "f_conjugacy_classes",
    "fullness_status",
    "fusion_from_group",
    "generate_fusion_system",
    "hom_set",
    "inner_fusion_system",
    "n_phi",
    "out_f",
    "alperin_decompose",
    "alperin_family",
    "centric_radical_table",
    "is_centric",
    "is_normal_in_F",
    "is_radical",
    "is_weakly_closed",
    "normalizer_fusion_system",
    "quotient_fusion_system",
    "AutGroupU",
    "FusionAut",
    "fusion_preserving_automorphisms",
    "induced_fusion_aut_from_group",
    "induced_sharp",
    "is_fpf_fusion_aut",
    "is_T_automorphism_group",
    "TheoremReport",
    "check_lemma_semidirect",
    "check_theorem_A",
    "check_theorem_B",
    "involves",
    "is_H_free",
    "is_nilpotent_fusion",
    "model_group",
    "sigma4_free",
]
