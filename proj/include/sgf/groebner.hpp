#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sgf/monomial.hpp"

namespace sgf {

struct GroebnerOptions {
  MonomialOrder order{};
  // Maximum number of S-pairs examined before CompletionBudgetExceeded.
  std::size_t pair_budget = 100'000;
};

// Reduced Groebner basis of a pure-binomial ideal. S-polynomials and
// reductions of pure binomials stay pure binomials, so the basis does too,
// and the normal form of a monomial is again a monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<Binomial> elements, std::vector<Int> weights, MonomialOrder order)
      : elements_(std::move(elements)), weights_(std::move(weights)), order_(order) {}

  const std::vector<Binomial>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Int>& weights() const noexcept { return weights_; }
  const MonomialOrder& order() const noexcept { return order_; }

  Monomial normal_form(Monomial m) const;
  // u - v lies in the ideal iff NF(u) == NF(v).
  bool contains(const Binomial& b) const { return normal_form(b.lead) == normal_form(b.tail); }
  bool is_standard(const Monomial& m) const noexcept;

 private:
  std::vector<Binomial> elements_;
  std::vector<Int> weights_;
  MonomialOrder order_;
};

// Buchberger completion with the coprime-lead criterion, followed by
// minimalization and tail reduction. Generators are re-oriented under
// `options.order`; zero binomials are dropped. Throws
// CompletionBudgetExceeded when the pair budget runs out.
GroebnerBasis buchberger(std::span<const Binomial> gens, std::span<const Int> weights,
                         const GroebnerOptions& options = {});

bool ideal_contains(std::span<const Binomial> gens, const Binomial& b, std::span<const Int> weights,
                    const GroebnerOptions& options = {});

}  // namespace sgf
