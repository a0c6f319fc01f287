#pragma once

#include <optional>
#include <vector>

#include "pnev/rational.hpp"

namespace pnev {

using Matrix = std::vector<std::vector<Rational>>;

/// Rank over Q, by fraction-free (Bareiss) elimination.
int matrix_rank(Matrix m);

/// Solve A x = b exactly. Underdetermined systems get their free variables
/// pinned to zero; returns nullopt when inconsistent.
std::optional<std::vector<Rational>> solve_linear(Matrix a, std::vector<Rational> b);

/// Basis of the right nullspace of A.
std::vector<std::vector<Rational>> nullspace(Matrix a);

} // namespace pnev
