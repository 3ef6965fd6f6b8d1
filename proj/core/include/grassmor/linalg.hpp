#pragma once

#include <vector>

#include "grassmor/poly_matrix.hpp"
#include "grassmor/rational.hpp"

namespace grassmor {

using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Exact rank by fraction-free elimination: a row update is
/// row_i <- pivot * row_i - row_i[k] * row_k, followed by division by the
/// row content. Rows whose pivot-column entry is zero are not touched, which
/// keeps the sparse DPhi matrices cheap.
long rank_fraction_free(IntegerMatrix m);

/// Clears denominators row by row and calls rank_fraction_free.
long rank(const RationalMatrix& m);

}  // namespace grassmor
