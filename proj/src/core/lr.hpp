#pragma once

// GL(3) tensor multiplicities (Littlewood-Richardson coefficients for
// partition labels) via the SU(3) bridge, plus an independent exhaustive
// tableau-counting oracle and the determinant-twist involution.

#include "core/types.hpp"

namespace su3 {

// Tensor multiplicity of W_nu in W_lambda (x) W_mu for weakly decreasing
// integer labels; 0 unless |lambda|+|mu| == |nu|. Throws std::domain_error
// when a label is not weakly decreasing.
i64 lr_coefficient(const GLTriple& g);

// Number of Littlewood-Richardson skew tableaux of shape nu/lambda and
// content mu (semistandard, reverse reading word a lattice word), counted by
// exhaustive backtracking. Labels must be partitions (throws otherwise);
// lambda not contained in nu reports 0.
i64 lr_tableau_oracle(const GLTriple& g);

// Tableau count for arbitrary weakly decreasing labels: shifts all three
// labels by multiples of (1,1,1) (tensoring with determinant powers) to
// reach partitions, then counts. 0 when the shifted nu is not a partition.
i64 lr_oracle_normalized(const GLTriple& g);

// (lambda, mu, nu) -> (lambda - d*1, mu + d*1, nu) with d = lambda3 - mu3.
// An involution preserving the tensor multiplicity.
GLTriple delta_involution(const GLTriple& g);

// Order of the group of linear symmetries of the LR function, with the
// generator of the extra factor described by delta_involution.
inline constexpr i64 kLRSymmetryOrder = 288;

}  // namespace su3
