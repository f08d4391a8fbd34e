#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sgf/execution.hpp"
#include "sgf/groebner.hpp"
#include "sgf/monomial.hpp"
#include "sgf/rfmatrix.hpp"
#include "sgf/semigroup.hpp"

namespace sgf {

// b lies in I = Ker phi iff both terms have the same weighted degree
// under deg x_i = a_i.
bool toric_membership(const Binomial& b, const NumericalSemigroup& h);

// All monomials of weighted degree d, in descending lexicographic order of
// exponents. Empty iff d is not in H.
std::vector<Monomial> fiber(const NumericalSemigroup& h, Int d, const FactorizationOptions& options = {});

struct DegreeGenerators {
  Int degree = 0;
  std::size_t fiber_size = 0;
  std::size_t count = 0;               // components - 1
  std::vector<Binomial> witnesses;     // one per extra component
};

// Fiber graph at degree d: monomials adjacent iff their supports meet.
// count = max(components - 1, 0); witnesses join the first component's
// representative to each other component's representative.
DegreeGenerators fiber_generators(const NumericalSemigroup& h, Int d, const MonomialOrder& order = {},
                                  const FactorizationOptions& options = {});

std::size_t minimal_generator_count_in_degree(const NumericalSemigroup& h, Int d);

// 2 * max_i (l'_i a_i) with l'_i = min{l > 0 | l a_i in H_i}.
Int default_degree_bound(const NumericalSemigroup& h);

struct MuOptions {
  std::optional<Int> degree_bound;
  MonomialOrder order{};
  std::size_t pair_budget = 100'000;
  FactorizationOptions factorization{};
  Execution execution = Execution::Parallel;
  // Check that the witnesses generate I; throw BoundTooSmall otherwise.
  bool verify = true;
};

struct MuResult {
  Int degree_bound = 0;
  std::size_t total = 0;
  std::vector<DegreeGenerators> by_degree;  // degrees with count > 0, ascending

  std::vector<Binomial> witnesses() const;
};

MuResult mu(const NumericalSemigroup& h, const MuOptions& options = {});

// Independent route: per degree, dim I_d - dim (S_+ I)_d by exact rational
// row reduction. Returns (degree, count) for every degree with count > 0.
std::vector<std::pair<Int, std::size_t>> mu_by_linear_algebra(const NumericalSemigroup& h, Int degree_bound,
                                                               Execution execution = Execution::Parallel);

// For binomials already known to lie in I: nullopt iff they generate I.
// Otherwise the least degree where S/(J + x_n) is larger than
// S/(I + x_n) = k[H]/(t^{a_n}). Uses weighted revlex, for which
// in(J + x_n) = in(J) + x_n.
std::optional<Int> toric_generation_defect(std::span<const Binomial> gens, const NumericalSemigroup& h,
                                           std::size_t pair_budget = 100'000);

// 2 x n matrix with monomial top row and variables on the bottom row.
// bottom[p] is the variable index under column p.
class PresentationIdeal {
 public:
  PresentationIdeal(std::vector<Monomial> top, std::vector<std::size_t> bottom, std::vector<Int> weights);
  // Bottom row x_1, ..., x_n.
  static PresentationIdeal from_top_row(std::vector<Monomial> top, std::span<const Int> weights);

  const std::vector<Monomial>& top() const noexcept { return top_; }
  const std::vector<std::size_t>& bottom() const noexcept { return bottom_; }
  const std::vector<Int>& weights() const noexcept { return weights_; }
  std::size_t columns() const noexcept { return top_.size(); }

  Monomial bottom_variable(std::size_t p) const;

  // x_{bottom[p]} f_q - x_{bottom[q]} f_p for p < q, skipping zero minors,
  // oriented by `order`.
  std::vector<Binomial> minors(const MonomialOrder& order = {}) const;
  bool minors_balanced() const;

 private:
  std::vector<Monomial> top_;
  std::vector<std::size_t> bottom_;
  std::vector<Int> weights_;
};

struct IdealEqualityReport {
  bool equal = false;
  bool minors_in_ideal = false;
  // Witness generator of I not in I_2 of the presentation.
  std::optional<Binomial> first_failure;
  std::size_t groebner_size = 0;
  // Independent colength criterion agrees with `equal`.
  bool colength_agrees = false;
};

IdealEqualityReport ideal_equals_toric(const PresentationIdeal& p, const NumericalSemigroup& h,
                                       const MuResult& generators, const GroebnerOptions& options = {});
IdealEqualityReport ideal_equals_toric(const PresentationIdeal& p, const NumericalSemigroup& h,
                                       const MuOptions& options = {});

// [d in H] for d = 0 ... up_to.
std::vector<int> hilbert_coefficients(const NumericalSemigroup& h, Int up_to);

}  // namespace sgf
