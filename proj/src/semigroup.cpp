#include "sgf/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "sgf/error.hpp"

namespace sgf {

namespace {

// Apery set of H with respect to its smallest generator, by Dijkstra on the
// residue graph mod a_1.
std::vector<Int> apery_by_shortest_paths(const std::vector<Int>& gens) {
  const Int m = gens.front();
  constexpr Int kInf = std::numeric_limits<Int>::max();
  std::vector<Int> dist(static_cast<std::size_t>(m), kInf);
  using Item = std::pair<Int, Int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (std::size_t j = 1; j < gens.size(); ++j) {
      const Int next = (r + gens[j]) % m;
      const Int nd = d + gens[j];
      if (nd < dist[static_cast<std::size_t>(next)]) {
        dist[static_cast<std::size_t>(next)] = nd;
        queue.emplace(nd, next);
      }
    }
  }
  return dist;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::initializer_list<Int> raw)
    : NumericalSemigroup(std::span<const Int>(raw.begin(), raw.size())) {}

NumericalSemigroup::NumericalSemigroup(std::span<const Int> raw, const SemigroupLimits& limits) {
  if (raw.empty()) throw Error(Errc::EmptyInput, "no generators given");
  Int g = 0;
  for (Int a : raw) {
    if (a <= 0) throw Error(Errc::NotNumerical, "generator " + std::to_string(a) + " is not positive");
    if (a > limits.max_generator) {
      throw Error(Errc::GeneratorTooLarge, "generator " + std::to_string(a) + " exceeds limit " +
                                               std::to_string(limits.max_generator));
    }
    g = std::gcd(g, a);
  }
  if (g != 1) throw Error(Errc::NotNumerical, "gcd of generators is " + std::to_string(g) + ", not 1");

  std::vector<Int> sorted(raw.begin(), raw.end());
  std::sort(sorted.begin(), sorted.end());

  // A candidate is redundant iff it lies in the monoid of the smaller kept ones.
  const Int top = sorted.back();
  std::vector<std::uint8_t> reach(static_cast<std::size_t>(top) + 1, 0);
  reach[0] = 1;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    const Int c = sorted[k];
    if (k > 0 && c == sorted[k - 1]) {
      removed_.push_back(c);
      continue;
    }
    if (reach[static_cast<std::size_t>(c)]) {
      removed_.push_back(c);
      continue;
    }
    generators_.push_back(c);
    for (Int x = c; x <= top; ++x) {
      if (reach[static_cast<std::size_t>(x - c)]) reach[static_cast<std::size_t>(x)] = 1;
    }
  }
  if (generators_.size() < 2) {
    throw Error(Errc::EmbeddingDimensionTooSmall, "semigroup is all of N (generated by 1)");
  }

  const auto apery = apery_by_shortest_paths(generators_);
  frobenius_ = *std::max_element(apery.begin(), apery.end()) - generators_.front();

  const Int table_len = frobenius_ + generators_.back() + 1;
  if (static_cast<std::size_t>(table_len) > limits.max_table) {
    throw Error(Errc::TableTooLarge, "membership table of length " + std::to_string(table_len) +
                                         " exceeds limit " + std::to_string(limits.max_table));
  }
  member_.assign(static_cast<std::size_t>(table_len), 0);
  member_[0] = 1;
  for (Int x = 1; x < table_len; ++x) {
    for (Int a : generators_) {
      if (a > x) break;
      if (member_[static_cast<std::size_t>(x - a)]) {
        member_[static_cast<std::size_t>(x)] = 1;
        break;
      }
    }
  }

  for (Int x = 1; x <= frobenius_; ++x) {
    if (!member_[static_cast<std::size_t>(x)]) gaps_.push_back(x);
  }
  for (Int gap : gaps_) {
    const bool pseudo = std::all_of(generators_.begin(), generators_.end(),
                                    [&](Int a) { return contains(gap + a); });
    if (pseudo) pf_.push_back(gap);
  }
}

std::vector<Int> NumericalSemigroup::apery_set(Int m) const {
  if (m <= 0 || !contains(m)) {
    throw Error(Errc::InvalidAperyBase, std::to_string(m) + " is not a positive member of H");
  }
  std::vector<Int> least(static_cast<std::size_t>(m), -1);
  Int found = 0;
  for (Int x = 0; found < m; ++x) {
    auto& slot = least[static_cast<std::size_t>(x % m)];
    if (slot < 0 && contains(x)) {
      slot = x;
      ++found;
    }
  }
  return least;
}

bool NumericalSemigroup::is_almost_symmetric() const noexcept {
  const std::size_t r = pf_.size();
  for (std::size_t i = 0; i + 1 < r; ++i) {
    // alpha_{i+1} + alpha_{r-1-i} in 1-based terms
    if (pf_[i] + pf_[r - 2 - i] != frobenius_) return false;
  }
  return true;
}

Int NumericalSemigroup::min_multiple_in_complement(std::size_t i) const {
  const Int ai = generators_.at(i);
  std::vector<Int> others;
  for (std::size_t j = 0; j < generators_.size(); ++j) {
    if (j != i) others.push_back(generators_[j]);
  }
  // l = min(others) always works, so the search is bounded by ai * min(others).
  const Int bound = ai * others.front();
  std::vector<std::uint8_t> reach(static_cast<std::size_t>(bound) + 1, 0);
  reach[0] = 1;
  for (Int x = 1; x <= bound; ++x) {
    for (Int b : others) {
      if (b > x) break;
      if (reach[static_cast<std::size_t>(x - b)]) {
        reach[static_cast<std::size_t>(x)] = 1;
        break;
      }
    }
    if (x % ai == 0 && reach[static_cast<std::size_t>(x)]) return x / ai;
  }
  return others.front();
}

bool submonoid_contains(std::span<const Int> gens, Int m) {
  if (m < 0) return false;
  if (m == 0) return true;
  std::vector<std::uint8_t> reach(static_cast<std::size_t>(m) + 1, 0);
  reach[0] = 1;
  for (Int x = 1; x <= m; ++x) {
    for (Int b : gens) {
      if (b > 0 && b <= x && reach[static_cast<std::size_t>(x - b)]) {
        reach[static_cast<std::size_t>(x)] = 1;
        break;
      }
    }
  }
  return reach[static_cast<std::size_t>(m)] != 0;
}

}  // namespace sgf
