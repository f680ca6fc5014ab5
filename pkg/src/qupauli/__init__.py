"""Exact algebra for the qudit Pauli group over Z_d."""
from .errors import (CapExceeded, DimensionMismatch, InvalidRelation, InvalidScaling,
                     NotAlternating, NotAUnit, NotInSpan, NotInvertible, NotNonCommuting,
                     NotPairs, NotSquare, OutOfRange, ParseError, QupauliError, RingMismatch,
                     ShapeMismatch, TooLarge)
from .groups import (GenSetDecomposition, IdentityGenerator, MinimalGeneratingSet, NearMinimal,
                     center_of_pairs, decompose_in_pair_basis, gram_schmidt_generating_set,
                     identity_subgroup_generator, is_full_group, minimal_generating_set,
                     near_minimal_generating_set, pair_group_order_bound, subgroup_order,
                     transform_generators)
from .kernels import BACKEND
from .normal_forms import asnf, hnf, kernel_generators, snf, snf_rank, solve_in_span
from .pauli import (PauliElement, comm_phase, commutation_matrix, format_pauli, parse_pauli,
                    parse_pauli_list, pauli_order, pmul, ppow, product, symplectic_matrix,
                    tensor)
from .relations import (PairCollection, Verdict, achieve_relation, example_max_pairs,
                        is_achievable_max_relation, jordan_wigner_compose, max_noncomm_set_single_qudit,
                        max_pairs_count, min_qudits_for_relation, permute_relation,
                        realize_commutation_matrix, scale_relation, verify_noncomm_set,
                        verify_pairs)
from .zmatrix import ExactMatrix, det, inverse, is_invertible, minors_gcd, parse_matrix
from .zring import (Dimension, ext_gcd, is_unit, normalizing_unit, order_mod, solve_congruence,
                    totients, unit_inverse)

__version__ = "0.1.0"
