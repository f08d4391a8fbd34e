#include "rational_rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>

namespace sgf::detail {

using Rational = boost::multiprecision::cpp_rational;

std::size_t rational_rank(const std::vector<std::vector<long>>& rows, std::size_t columns) {
  std::vector<std::vector<Rational>> m;
  m.reserve(rows.size());
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());

  std::size_t rank = 0;
  for (std::size_t col = 0; col < columns && rank < m.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      const Rational factor = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < columns; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

}  // namespace sgf::detail
