#pragma once

#include <vector>

#include "tauforge/poly.hpp"

namespace tauforge {

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Exact determinant of a square polynomial matrix (empty matrix -> 1).
///
/// Expands row by row over the set of columns already used, so each minor on the
/// leading rows is computed once. Division-free; cost is O(2^n n) Poly products.
Poly determinant(const PolyMatrix& m);

} // namespace tauforge
