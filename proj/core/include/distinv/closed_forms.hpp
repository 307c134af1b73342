#pragma once

#include "distinv/exact_linalg.hpp"
#include "distinv/matrix.hpp"

namespace distinv {

// Formula-only Smith normal forms for families with known invariant
// factors. Nothing here builds a matrix, so they serve as independent
// checks of snf().

/// K_n, n >= 2. L, Atr, Ddeg: (1, n, ..., n, 0) with n-2 copies of n.
/// Q, AtrPlus, DdegPlus: (1, n-2, ..., n-2, 2(n-1)(n-2)) with n-2 copies of n-2.
SnfResult snf_complete(MatrixKind kind, int n);

/// Star K_{m,1}, m >= 1.
/// DdegPlus: (1, ..., 1, 2m(m-1)).
/// Ddeg: (1, 3, ..., 3, 2m(m-1)) when 3 | 2m+1, else (1, 1, 3, ..., 3, 6m(m-1)).
SnfResult snf_star(MatrixKind kind, int leaves);

/// Distance matrix of any tree on n+1 vertices: (1, 1, 2, ..., 2, 2n) with
/// n-2 copies of 2. A tree on 2 vertices has SNF (1, 1).
SnfResult snf_tree_distance(int vertices);

/// (-1)^n n 2^(n-1) for a tree on n+1 vertices.
mpz_class tree_distance_determinant(int vertices);

}  // namespace distinv
