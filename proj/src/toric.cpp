#include "sgf/toric.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "rational_rank.hpp"
#include "sgf/error.hpp"

namespace sgf {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

Int weighted_degree(const Monomial& m, const NumericalSemigroup& h) {
  const auto& a = h.generators();
  Int d = 0;
  for (std::size_t i = 0; i < a.size() && i < m.nvars(); ++i) d += Int{m[i]} * a[i];
  return d;
}

// Runs body(d) for d in [0, bound] and rethrows the first exception after
// the loop; OpenMP regions cannot propagate exceptions.
template <class Body>
void for_each_degree(Int bound, Execution execution, Body&& body) {
  if (execution == Execution::Serial) {
    for (Int d = 0; d <= bound; ++d) body(d);
    return;
  }
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (Int d = 0; d <= bound; ++d) {
    try {
      body(d);
    } catch (...) {
#pragma omp critical(sgf_degree_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

bool toric_membership(const Binomial& b, const NumericalSemigroup& h) {
  return weighted_degree(b.lead, h) == weighted_degree(b.tail, h);
}

std::vector<Monomial> fiber(const NumericalSemigroup& h, Int d, const FactorizationOptions& options) {
  std::vector<Monomial> out;
  for_each_factorization(h, d, [&](const Factorization& c) {
    out.emplace_back(c, h.generators());
    return true;
  }, options);
  return out;
}

DegreeGenerators fiber_generators(const NumericalSemigroup& h, Int d, const MonomialOrder& order,
                                  const FactorizationOptions& options) {
  DegreeGenerators out;
  out.degree = d;
  const auto monomials = fiber(h, d, options);
  out.fiber_size = monomials.size();
  if (monomials.size() <= 1) return out;

  const std::size_t n = h.embedding_dimension();
  DisjointSets sets(monomials.size());
  for (std::size_t var = 0; var < n; ++var) {
    std::size_t first = SIZE_MAX;
    for (std::size_t k = 0; k < monomials.size(); ++k) {
      if (monomials[k][var] == 0) continue;
      if (first == SIZE_MAX) {
        first = k;
      } else {
        sets.unite(first, k);
      }
    }
  }
  // Roots are the least index of each component, so they are the
  // representatives in fiber order.
  std::vector<std::size_t> roots;
  for (std::size_t k = 0; k < monomials.size(); ++k) {
    if (sets.find(k) == k) roots.push_back(k);
  }
  out.count = roots.size() - 1;
  for (std::size_t c = 1; c < roots.size(); ++c) {
    out.witnesses.push_back(*Binomial::make(monomials[roots[0]], monomials[roots[c]], order));
  }
  return out;
}

std::size_t minimal_generator_count_in_degree(const NumericalSemigroup& h, Int d) {
  return fiber_generators(h, d).count;
}

Int default_degree_bound(const NumericalSemigroup& h) {
  Int top = 0;
  for (std::size_t i = 0; i < h.embedding_dimension(); ++i) {
    top = std::max(top, h.min_multiple_in_complement(i) * h.generator(i));
  }
  return 2 * top;
}

std::vector<Binomial> MuResult::witnesses() const {
  std::vector<Binomial> out;
  for (const auto& level : by_degree) out.insert(out.end(), level.witnesses.begin(), level.witnesses.end());
  return out;
}

MuResult mu(const NumericalSemigroup& h, const MuOptions& options) {
  MuResult result;
  result.degree_bound = options.degree_bound.value_or(default_degree_bound(h));
  const Int bound = result.degree_bound;

  std::vector<DegreeGenerators> levels(static_cast<std::size_t>(bound) + 1);
  for_each_degree(bound, options.execution, [&](Int d) {
    levels[static_cast<std::size_t>(d)] = fiber_generators(h, d, options.order, options.factorization);
  });
  for (auto& level : levels) {
    if (level.count == 0) continue;
    result.total += level.count;
    result.by_degree.push_back(std::move(level));
  }

  if (options.verify) {
    const auto gens = result.witnesses();
    if (auto defect = toric_generation_defect(gens, h, options.pair_budget)) {
      throw BoundTooSmall(bound, *defect);
    }
  }
  return result;
}

std::vector<std::pair<Int, std::size_t>> mu_by_linear_algebra(const NumericalSemigroup& h, Int degree_bound,
                                                               Execution execution) {
  const auto& a = h.generators();
  const std::size_t n = a.size();
  std::vector<std::size_t> counts(static_cast<std::size_t>(degree_bound) + 1, 0);

  for_each_degree(degree_bound, execution, [&](Int d) {
    const auto top = fiber(h, d);
    if (top.size() <= 1) return;
    std::map<Monomial, std::size_t> column;
    for (std::size_t k = 0; k < top.size(); ++k) column.emplace(top[k], k);

    // (S_+ I)_d is spanned by x_i (u_0 - u_k) for u in the fiber of d - a_i.
    std::vector<std::vector<long>> rows;
    for (std::size_t i = 0; i < n; ++i) {
      const auto lower = fiber(h, d - a[i]);
      if (lower.size() <= 1) continue;
      const Monomial xi = Monomial::variable(n, i, 1, a);
      const std::size_t c0 = column.at(lower[0] * xi);
      for (std::size_t k = 1; k < lower.size(); ++k) {
        std::vector<long> row(top.size(), 0);
        row[c0] += 1;
        row[column.at(lower[k] * xi)] -= 1;
        rows.push_back(std::move(row));
      }
    }
    const std::size_t dim_i = top.size() - 1;
    const std::size_t dim_product = detail::rational_rank(rows, top.size());
    counts[static_cast<std::size_t>(d)] = dim_i - dim_product;
  });

  std::vector<std::pair<Int, std::size_t>> out;
  for (std::size_t d = 0; d < counts.size(); ++d) {
    if (counts[d] > 0) out.emplace_back(static_cast<Int>(d), counts[d]);
  }
  return out;
}

std::optional<Int> toric_generation_defect(std::span<const Binomial> gens, const NumericalSemigroup& h,
                                           std::size_t pair_budget) {
  const auto& a = h.generators();
  const std::size_t n = a.size();
  const Int last = a.back();
  GroebnerOptions options;
  options.order = MonomialOrder{TieBreak::RevLex};
  options.pair_budget = pair_budget;
  const GroebnerBasis basis = buchberger(gens, a, options);

  // k[H]/(t^{a_n}) has one basis element in each degree of Ap(H, a_n).
  auto expected = [&](Int d) { return (h.contains(d) && !h.contains(d - last)) ? 1 : 0; };

  auto by_degree = [](const Monomial& x, const Monomial& y) {
    return x.degree() != y.degree() ? x.degree() > y.degree() : y < x;
  };
  std::priority_queue<Monomial, std::vector<Monomial>, decltype(by_degree)> queue(by_degree);
  std::set<Monomial> seen;
  const Monomial one = Monomial::one(n);
  queue.push(one);
  seen.insert(one);
  Int current = -1;
  int count = 0;
  while (!queue.empty()) {
    Monomial m = queue.top();
    queue.pop();
    if (m.degree() != current) {
      current = m.degree();
      count = 0;
    }
    if (++count > expected(current)) return current;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      Monomial next = m * Monomial::variable(n, i, 1, a);
      if (basis.is_standard(next) && seen.insert(next).second) queue.push(std::move(next));
    }
  }
  return std::nullopt;
}

PresentationIdeal::PresentationIdeal(std::vector<Monomial> top, std::vector<std::size_t> bottom,
                                     std::vector<Int> weights)
    : top_(std::move(top)), bottom_(std::move(bottom)), weights_(std::move(weights)) {
  if (top_.empty()) throw Error(Errc::InvalidPresentation, "empty top row");
  if (top_.size() != bottom_.size() || top_.size() != weights_.size()) {
    throw Error(Errc::InvalidPresentation, "top row, bottom row and weights differ in length");
  }
  std::vector<bool> used(weights_.size(), false);
  for (std::size_t p = 0; p < bottom_.size(); ++p) {
    if (bottom_[p] >= weights_.size() || used[bottom_[p]]) {
      throw Error(Errc::InvalidPresentation, "bottom row is not a permutation of the variables");
    }
    used[bottom_[p]] = true;
    if (top_[p].nvars() != weights_.size()) {
      throw Error(Errc::InvalidPresentation, "top-row monomial has the wrong number of variables");
    }
  }
}

PresentationIdeal PresentationIdeal::from_top_row(std::vector<Monomial> top, std::span<const Int> weights) {
  std::vector<std::size_t> bottom(top.size());
  std::iota(bottom.begin(), bottom.end(), 0);
  return PresentationIdeal(std::move(top), std::move(bottom), std::vector<Int>(weights.begin(), weights.end()));
}

Monomial PresentationIdeal::bottom_variable(std::size_t p) const {
  return Monomial::variable(weights_.size(), bottom_.at(p), 1, weights_);
}

std::vector<Binomial> PresentationIdeal::minors(const MonomialOrder& order) const {
  std::vector<Binomial> out;
  for (std::size_t p = 0; p < top_.size(); ++p) {
    for (std::size_t q = p + 1; q < top_.size(); ++q) {
      auto b = Binomial::make(bottom_variable(p) * top_[q], bottom_variable(q) * top_[p], order);
      if (b) out.push_back(std::move(*b));
    }
  }
  return out;
}

bool PresentationIdeal::minors_balanced() const {
  const auto all = minors();
  return std::all_of(all.begin(), all.end(), [](const Binomial& b) { return b.balanced(); });
}

IdealEqualityReport ideal_equals_toric(const PresentationIdeal& p, const NumericalSemigroup& h,
                                       const MuResult& generators, const GroebnerOptions& options) {
  if (p.weights() != h.generators()) {
    throw Error(Errc::InvalidPresentation, "presentation weights differ from the semigroup generators");
  }
  IdealEqualityReport report;
  const auto minors = p.minors(options.order);
  report.minors_in_ideal =
      std::all_of(minors.begin(), minors.end(), [&](const Binomial& b) { return toric_membership(b, h); });
  if (!report.minors_in_ideal) {
    throw Error(Errc::InvalidPresentation, "a 2x2 minor is not homogeneous; it does not lie in I");
  }
  const GroebnerBasis basis = buchberger(minors, h.generators(), options);
  report.groebner_size = basis.size();
  report.equal = true;
  for (const auto& w : generators.witnesses()) {
    if (!basis.contains(w)) {
      report.equal = false;
      report.first_failure = w;
      break;
    }
  }
  const bool generates = !toric_generation_defect(minors, h, options.pair_budget).has_value();
  report.colength_agrees = generates == report.equal;
  return report;
}

IdealEqualityReport ideal_equals_toric(const PresentationIdeal& p, const NumericalSemigroup& h,
                                       const MuOptions& options) {
  GroebnerOptions gb{options.order, options.pair_budget};
  return ideal_equals_toric(p, h, mu(h, options), gb);
}

std::vector<int> hilbert_coefficients(const NumericalSemigroup& h, Int up_to) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::max<Int>(up_to, 0)) + 1);
  for (Int d = 0; d <= up_to; ++d) out.push_back(h.contains(d) ? 1 : 0);
  return out;
}

}  // namespace sgf
