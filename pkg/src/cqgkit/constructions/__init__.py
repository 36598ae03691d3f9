"""Dual, opposite variants, bicrossproducts, quantum doubles, cocycle bismash
products and twists."""
from .double import double_pair, drinfeld_double
from .dual import dual, opposite_variants, structural_distance
from .linked import (CocycleLinkedPairData, StarLiftData, attach_star_lift,
                     check_bismash_gram_factorisation, check_star_lift, cocycle_bismash, double_as_linked_pair,
                     verify_cocycle_linked_pair, verify_singer_conditions)
from .matched import MatchedPairHopfData, bicrossproduct, verify_matched_pair
from .twist import bicharacter_cocycle, build_twist, twist_positivity, twist_product
