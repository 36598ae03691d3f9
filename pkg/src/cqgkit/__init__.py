"""Finite-dimensional Hopf *-algebras from structure constants: axiom checkers,
normal integrals, positivity of the Gram form, and the standard constructions."""
from .algebras import function_algebra, group_algebra, monoid_bialgebra, sweedler_algebra
from .errors import (CQGError, DimensionMismatch, InputError, NoSolution,
                     NotACocycle, NotAHopfAlgebra, NotASingerPair, NotConvolutionInvertible,
                     NotCosemisimple, NotHermitian, SingularGramForm, StarCompatFailed,
                     UnitarizationFailed)
from .groups import (ConditionsFailed, FiniteGroup, FormulaMismatch, GroupCocycleData,
                     MatchedPairGroups, build_group_bismash, cyclic_group, cyclic_square,
                     dihedral_group, generate_example, symmetric_group,
                     trivial_alpha_conditions, unimodular_conditions, verify_alpha,
                     verify_matched_pair_groups, verify_sigma_tau)
from .hopf import (FiniteBialgebra, FiniteHopfAlgebra, IntegralData, StarStructure,
                   check_integral, check_semisimple_identities, compute_integral,
                   solve_antipode, verify_bialgebra, verify_hopf)
from .numeric import DEFAULT_TOL, RootOfUnity, SparseTensor
from .report import VerificationReport, emit_report
from .star import gram_matrix, is_cqg, verify_star_hopf

__version__ = "0.1.0"
