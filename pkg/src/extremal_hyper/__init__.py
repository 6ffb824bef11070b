"""Degree bounds for uniform set families with a bounded matching number.

Exact combinatorial engines (matching, cover, shadow, shifting, sunflower
bases), the known extremal constructions, and a verification harness that
checks the bounds exhaustively at desk scale and by seeded sampling beyond.
"""

from .colexshadow import (binom, colex_compare, colex_initial_segment,
                          colex_rank, colex_unrank, complement_family,
                          cover_degree_bound, kk_min_shadow_size, shadow)
from .constructions import (SelfCheckError, certify, construct_Ai,
                            construct_G, construct_H1, construct_H2,
                            construct_cover_family)
from .matchcover import (CoverWitness, MatchingWitness, find_disjoint_members,
                         is_intersecting, matching_number,
                         max_matching_graph, vertex_cover_number)
from .setcore import (MAX_GROUND, DegreeSequence, Family, FamilyFormatError,
                      KSet, MixedFamily, SetFamily, degree, degree_sequence,
                      degree_vector, is_upward_closed, m_degree, ore_degree,
                      parse_family, serialize_family, upward_closure)
from .shifting import (ShiftPair, is_ell_shifted, shift, shift_steps,
                       shift_to_ell, trace, trace_degree_bound)
from .sunflower import (DeltaBase, Sunflower, delta_base, delta_system_exists,
                        f_bound, f_bound_derived, find_delta_system,
                        find_sunflower_with_kernel, upp1_degree_bound,
                        upp1_size_bound)
from .verify import (REPORT_VERSION, CheckBlock, FamilySampler,
                     VerificationReport, check_graph_lemma_str1,
                     check_graph_lemma_str2, exhaustive_graph_scan,
                     search_extremal, verify_base_lemmas,
                     verify_base_lemmas_sampled, verify_cor_ore,
                     verify_intersecting_structure_scan, verify_kk_exhaustive,
                     verify_lemma_cover, verify_lemma_ellshift,
                     verify_lemma_ellshift_sampled, verify_lemma_mdeg,
                     verify_thm_main, verify_thm_main2)

__version__ = "0.1.0"

__all__ = [
    "MAX_GROUND", "REPORT_VERSION", "__version__",
    "KSet", "SetFamily", "MixedFamily", "Family", "DegreeSequence",
    "FamilyFormatError", "parse_family", "serialize_family",
    "degree", "degree_vector", "degree_sequence", "m_degree", "ore_degree",
    "upward_closure", "is_upward_closed",
    "binom", "cover_degree_bound", "colex_compare", "colex_rank",
    "colex_unrank", "colex_initial_segment", "shadow", "kk_min_shadow_size",
    "complement_family",
    "MatchingWitness", "CoverWitness", "matching_number",
    "find_disjoint_members", "vertex_cover_number", "max_matching_graph",
    "is_intersecting",
    "ShiftPair", "shift", "shift_steps", "shift_to_ell", "is_ell_shifted",
    "trace", "trace_degree_bound",
    "Sunflower", "DeltaBase", "find_sunflower_with_kernel",
    "delta_system_exists", "find_delta_system", "delta_base",
    "f_bound", "f_bound_derived", "upp1_size_bound", "upp1_degree_bound",
    "SelfCheckError", "construct_Ai", "construct_G", "construct_H1",
    "construct_H2", "construct_cover_family", "certify",
    "CheckBlock", "VerificationReport", "FamilySampler",
    "verify_thm_main", "verify_thm_main2", "verify_cor_ore",
    "verify_lemma_ellshift", "verify_lemma_ellshift_sampled",
    "verify_lemma_mdeg", "verify_base_lemmas", "verify_base_lemmas_sampled",
    "check_graph_lemma_str1", "check_graph_lemma_str2",
    "exhaustive_graph_scan", "verify_intersecting_structure_scan",
    "verify_lemma_cover", "verify_kk_exhaustive", "search_extremal",
]
