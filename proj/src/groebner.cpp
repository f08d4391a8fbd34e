#include "sgf/groebner.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <utility>

#include "sgf/error.hpp"

namespace sgf {

namespace {

Monomial reduce_against(Monomial m, const std::vector<Binomial>& basis, std::size_t skip = SIZE_MAX) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip) continue;
      const auto& g = basis[k];
      if (g.lead.divides(m)) {
        m = (m / g.lead) * g.tail;
        changed = true;
        break;
      }
    }
  }
  return m;
}

}  // namespace

Monomial GroebnerBasis::normal_form(Monomial m) const { return reduce_against(std::move(m), elements_); }

bool GroebnerBasis::is_standard(const Monomial& m) const noexcept {
  return std::none_of(elements_.begin(), elements_.end(),
                      [&](const Binomial& g) { return g.lead.divides(m); });
}

GroebnerBasis buchberger(std::span<const Binomial> gens, std::span<const Int> weights,
                         const GroebnerOptions& options) {
  const MonomialOrder& order = options.order;
  std::vector<Binomial> basis;
  for (const auto& g : gens) {
    auto b = Binomial::make(g.lead, g.tail, order);
    if (b && std::find(basis.begin(), basis.end(), *b) == basis.end()) basis.push_back(std::move(*b));
  }

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }

  std::size_t examined = 0;
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (++examined > options.pair_budget) {
      throw Error(Errc::CompletionBudgetExceeded,
                  "S-pair budget of " + std::to_string(options.pair_budget) + " exhausted");
    }
    const Binomial& f = basis[i];
    const Binomial& g = basis[j];
    if (f.lead.coprime(g.lead)) continue;
    const Monomial l = lcm(f.lead, g.lead, weights);
    // S(f, g) = (l / g.lead) g.tail - (l / f.lead) f.tail
    Monomial u = reduce_against((l / f.lead) * f.tail, basis);
    Monomial v = reduce_against((l / g.lead) * g.tail, basis);
    auto s = Binomial::make(std::move(u), std::move(v), order);
    if (!s) continue;
    basis.push_back(std::move(*s));
    const std::size_t k = basis.size() - 1;
    for (std::size_t a = 0; a < k; ++a) pairs.emplace_back(a, k);
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<Binomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !basis[j].lead.divides(basis[i].lead)) continue;
      // Equal leads: keep the earliest.
      redundant = !(basis[j].lead == basis[i].lead) || j < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }

  for (auto& g : minimal) g.tail = reduce_against(g.tail, minimal);
  std::sort(minimal.begin(), minimal.end(),
            [&](const Binomial& a, const Binomial& b) { return order.less(a.lead, b.lead); });
  return GroebnerBasis(std::move(minimal), std::vector<Int>(weights.begin(), weights.end()), order);
}

bool ideal_contains(std::span<const Binomial> gens, const Binomial& b, std::span<const Int> weights,
                    const GroebnerOptions& options) {
  return buchberger(gens, weights, options).contains(b);
}

}  // namespace sgf
