#pragma once

#include <optional>
#include <vector>

#include "gspline/integer.hpp"

namespace gspline {

using IntMatrix = std::vector<std::vector<Int>>;

/// One integer solution of A c = b, or nullopt when none exists.
///
/// Column-style Hermite reduction: unimodular column operations bring A to
/// lower echelon form H = A U, then H y = b is solved by forward
/// substitution with exact divisibility checks and c = U y. Intermediate
/// values use arbitrary precision; the result must fit in Int (else Overflow).
std::optional<std::vector<Int>> solve_integer_system(const IntMatrix& a, const std::vector<Int>& b);

}  // namespace gspline
