#pragma once

#include <optional>
#include <vector>

#include "maclab/scalar.hpp"

namespace maclab {

/// Dense row-major matrix over Q(u).
using Matrix = std::vector<std::vector<Scalar>>;

/// Row echelon form by exact Gaussian elimination; returns the rank.
int row_reduce(Matrix& m);
int rank(Matrix m);
/// Solution x of a x = b when a is square and invertible.
std::optional<std::vector<Scalar>> solve(Matrix a, std::vector<Scalar> b);
/// Basis of {x : a x = 0}.
std::vector<std::vector<Scalar>> nullspace(Matrix a, std::size_t cols);

}  // namespace maclab
