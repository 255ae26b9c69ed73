"""Exact Bredon homology and equivariant K/KO-homology computations.

The package computes, in exact integer arithmetic, Bredon homology of
classifying spaces for proper actions with coefficients in representation
rings, and derives equivariant K- and KO-homology from it.  Built-in data
cover SL_3(Z) and GL_3(Z), Fuchsian groups of any signature, the Hecke-type
arithmetic groups PSL_2(Z[1/p]) and SL_2(Z[1/p]), and the K/KO-theory of the
reduced C*-algebras in the periodic case p = 11 mod 12.  User-supplied
Gamma-CW complexes are accepted through a small text format (`cwfile`).
"""

from .exactlinalg import (
    FinAbGroup,
    IntChainComplex,
    IntMatrix,
    SNFResult,
    all_homology,
    direct_sum,
    homology,
    smith_normal_form,
    tensor_z2,
    tor_z2,
)
from .groups import (
    CharacterTable,
    FiniteGroupData,
    GroupId,
    UnsupportedGroupError,
    all_tables_coincide,
    build_group,
    character_table,
    cyclic_fs_indicator,
    fs_indicator,
    parse_name,
)
from .reprings import (
    InductionMap,
    RepRing,
    cyclic_induction,
    degree_map,
    induction_from_trivial,
    rep_ring,
)
from .fuchsian import (
    MODULAR_SIGNATURE,
    Signature,
    bredon_closed_form,
    equivariant_k,
    hecke_bredon,
    hecke_signature,
    is_prime,
    parse_signature,
)
from .bredon import (
    DatumError,
    GammaCWDatum,
    GraphOfGroupsDatum,
    bredon_homology,
    expand,
    fuchsian_cocompact_datum,
    fuchsian_graph_of_groups,
    fuchsian_noncocompact_datum,
    lifted_fuchsian_datum,
    sl3_datum,
)
from .cwfile import CWFormatError, format_cw, parse_cw
from .ko_assembly import (
    KO_POINT,
    E2Page,
    GradedGroup,
    collapse_complex,
    ensure_ko_hypothesis,
    ko_e2_page,
    ko_from_bredon,
    kunneth_times_z2,
)
from .arithmetic_k import (
    class_count_psl,
    cstar_k_p11,
    cstar_ko_p11,
    maximal_subgroups,
    psl_zp_bredon,
    psl_zp_k,
    sl_zp_k,
)
from .verify import verify_all

__version__ = "0.1.0"

__all__ = [
    "CharacterTable",
    "CWFormatError",
    "DatumError",
    "E2Page",
    "FinAbGroup",
    "FiniteGroupData",
    "GammaCWDatum",
    "GradedGroup",
    "GraphOfGroupsDatum",
    "GroupId",
    "InductionMap",
    "IntChainComplex",
    "IntMatrix",
    "KO_POINT",
    "MODULAR_SIGNATURE",
    "RepRing",
    "Signature",
    "SNFResult",
    "UnsupportedGroupError",
    "all_homology",
    "all_tables_coincide",
    "bredon_closed_form",
    "bredon_homology",
    "build_group",
    "character_table",
    "class_count_psl",
    "collapse_complex",
    "cstar_k_p11",
    "cstar_ko_p11",
    "cyclic_fs_indicator",
    "cyclic_induction",
    "degree_map",
    "direct_sum",
    "ensure_ko_hypothesis",
    "equivariant_k",
    "expand",
    "format_cw",
    "fs_indicator",
    "fuchsian_cocompact_datum",
    "fuchsian_graph_of_groups",
    "fuchsian_noncocompact_datum",
    "hecke_bredon",
    "hecke_signature",
    "homology",
    "induction_from_trivial",
    "is_prime",
    "ko_e2_page",
    "ko_from_bredon",
    "kunneth_times_z2",
    "lifted_fuchsian_datum",
    "maximal_subgroups",
    "parse_cw",
    "parse_name",
    "parse_signature",
    "psl_zp_bredon",
    "psl_zp_k",
    "rep_ring",
    "sl_zp_k",
    "sl3_datum",
    "smith_normal_form",
    "tensor_z2",
    "tor_z2",
    "verify_all",
]
