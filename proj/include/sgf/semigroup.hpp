#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sgf {

using Int = std::int64_t;

struct SemigroupLimits {
  Int max_generator = Int{1} << 20;
  // Upper bound on the membership table length f(H) + a_n + 1.
  std::size_t max_table = std::size_t{1} << 28;
};

// A numerical semigroup H = <a_1, ..., a_n> held by its unique minimal
// generating system. Immutable after construction; safe to share across
// threads.
class NumericalSemigroup {
 public:
  // Reduces `raw` to the minimal generating system. Throws EmptyInput,
  // NotNumerical (gcd != 1 or a non-positive entry), GeneratorTooLarge,
  // TableTooLarge, or EmbeddingDimensionTooSmall when H is all of N.
  explicit NumericalSemigroup(std::span<const Int> raw, const SemigroupLimits& limits = {});
  NumericalSemigroup(std::initializer_list<Int> raw);

  const std::vector<Int>& generators() const noexcept { return generators_; }
  std::size_t embedding_dimension() const noexcept { return generators_.size(); }
  Int generator(std::size_t i) const { return generators_.at(i); }

  // Entries of the raw input that were dropped as redundant.
  const std::vector<Int>& removed_generators() const noexcept { return removed_; }

  Int frobenius() const noexcept { return frobenius_; }
  const std::vector<Int>& gaps() const noexcept { return gaps_; }
  const std::vector<Int>& pseudo_frobenius() const noexcept { return pf_; }

  // Cohen-Macaulay type r(R) = #PF(H) and a-invariant a(R) = f(H).
  std::size_t type() const noexcept { return pf_.size(); }
  Int a_invariant() const noexcept { return frobenius_; }

  bool contains(Int m) const noexcept {
    if (m < 0) return false;
    if (m > frobenius_) return true;
    return member_[static_cast<std::size_t>(m)] != 0;
  }

  // Least element of H in each residue class mod m, indexed by residue.
  // Throws InvalidAperyBase unless m is a positive member.
  std::vector<Int> apery_set(Int m) const;

  // PF(H) = {alpha_1 < ... < alpha_r} with alpha_i + alpha_{r-i} = f(H).
  bool is_almost_symmetric() const noexcept;

  // min{l > 0 | l * a_i in <a_j : j != i>} for a 0-based generator index.
  Int min_multiple_in_complement(std::size_t i) const;

  // Membership table for 0 ... f(H) + a_n.
  std::span<const std::uint8_t> membership() const noexcept { return member_; }

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) noexcept {
    return a.generators_ == b.generators_;
  }

 private:
  std::vector<Int> generators_;
  std::vector<Int> removed_;
  std::vector<std::uint8_t> member_;
  Int frobenius_ = -1;
  std::vector<Int> gaps_;
  std::vector<Int> pf_;
};

// Membership of m in the monoid generated by `gens` (gcd may exceed 1).
// Linear in m; intended for desk-scale queries.
bool submonoid_contains(std::span<const Int> gens, Int m);

}  // namespace sgf
