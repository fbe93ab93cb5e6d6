"""Exact SU(n) representation theory in the Gelfand-Tsetlin basis.

Subpackages by theme:

  linalg     exact rational sparse matrices, kernels, Gram projections,
             certified norm brackets
  patterns   Gelfand-Tsetlin patterns, interlacing, norms, weights
  reps       generator matrices, structure-constant checks, dimensions,
             tensor products
  subgroups  block subgroups K_S, branching, isotypic projections,
             fixed vectors
  ortho      fixed-vector coefficients, closed-form overlaps,
             combinatorial identities, projection-product decay
  verify     the one-shot verification suite behind `gtkit verify`
"""

from .linalg import (GramForm, RankDeficiencyError, Rational, SparseMatrix,
                     gram_projection, kernel_basis, norm_bracket, parse_rat,
                     rat_str)
from .patterns import (enumerate_patterns, pattern_norm_sq, pattern_weight,
                       shift, sl_normalize, zero_weight_pattern,
                       zero_weight_patterns, zero_weight_tuples)
from .reps import (Irrep, check_rep, dimension, generator, gram_adjoint_ok,
                   irrep, matrix_Ekk, matrix_Epq, matrix_lower, matrix_raise,
                   tensor_decompose, weight_multiplicities)
from .subgroups import (IsotypicProjection, blocks_of, canonical_label,
                        commutation_family_ok, fixed_vectors,
                        isotypic_decomposition, isotypic_projection,
                        label_dim, named_subgroups, restrict_types,
                        trivial_label)
from .ortho import (BlockSupport, DecayRow, block_support,
                    comb_identity_check, coeff_closed_form, decay_csv,
                    decay_experiment, fixed_vector_coefficients,
                    identity1_check, overlap_sq, projection_product,
                    solve_fixed_vector, zero_tuple_norm_sq)

__version__ = "0.1.0"
