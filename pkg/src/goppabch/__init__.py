"""Goppa and BCH codes whose minimum distance equals the designed distance."""

from .bch import BCHSpec, build_bch, cyclotomic_cosets, defining_set, goppa_bch_map
from .criterion import (CriterionWitness, MPolyRejected, SupportRejected, check_support,
                        derivative_construction, m_poly_check, ratios, weighted_construction)
from .families import FamilyReport, HypothesisError, run_family
from .field import GF, FieldTower, build_field, parse_element, parse_field_spec
from .goppa import GoppaSpec, build_code, full_support, goppa_spec, membership_congruence
from .linalg import DistanceResult, LinearCode, min_distance, null_space, rank, rref
from .poly import Poly, is_irreducible, is_irreducible_over_prime, parse_poly, roots_in_field

__all__ = [
    "BCHSpec", "CriterionWitness", "DistanceResult", "FamilyReport", "FieldTower", "GF",
    "GoppaSpec", "HypothesisError", "LinearCode", "MPolyRejected", "Poly", "SupportRejected",
    "build_bch", "build_code", "build_field", "check_support", "cyclotomic_cosets",
    "defining_set", "derivative_construction", "full_support", "goppa_bch_map", "goppa_spec",
    "is_irreducible", "is_irreducible_over_prime", "m_poly_check", "membership_congruence",
    "min_distance", "null_space", "parse_element", "parse_field_spec", "parse_poly", "rank",
    "ratios", "roots_in_field", "rref", "run_family", "weighted_construction",
]
