#pragma once

#include "gqs/rational.hpp"

#include <optional>
#include <vector>

namespace gqs {

using RatMatrix = std::vector<std::vector<Rat>>;
using RatVector = std::vector<Rat>;

// Solves A x = b exactly (A is m x n, column-indexed by unknowns).
// Returns nullopt if the system is inconsistent or underdetermined.
std::optional<RatVector> solve_linear(RatMatrix a, RatVector b);

int matrix_rank(RatMatrix a);

// Rank of a set of integer vectors (rows).
int int_rank(const std::vector<std::vector<int>>& rows);

} // namespace gqs
