#pragma once

#include <cstddef>
#include <vector>

namespace sgf::detail {

// Rank over Q of an integer matrix, by Gaussian elimination in exact
// rational arithmetic.
std::size_t rational_rank(const std::vector<std::vector<long>>& rows, std::size_t columns);

}  // namespace sgf::detail
