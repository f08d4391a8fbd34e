#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sgf/semigroup.hpp"

namespace sgf {

using Exponent = std::int32_t;

// Monomial of S = k[x_1, ..., x_n] graded by deg x_i = a_i. The weighted
// degree is cached; products and quotients keep it in sync without the
// weights.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::vector<Exponent> exponents, std::span<const Int> weights);

  static Monomial one(std::size_t nvars);
  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power,
                           std::span<const Int> weights);

  const std::vector<Exponent>& exponents() const noexcept { return exps_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::size_t nvars() const noexcept { return exps_.size(); }
  Int degree() const noexcept { return degree_; }
  bool is_one() const noexcept;

  bool divides(const Monomial& other) const noexcept;
  // gcd == 1, i.e. disjoint supports.
  bool coprime(const Monomial& other) const noexcept;

  Monomial operator*(const Monomial& other) const;
  // Exact quotient; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps_ == b.exps_; }
  // Plain lexicographic comparison on exponents, for use as a container key.
  friend bool operator<(const Monomial& a, const Monomial& b) noexcept { return a.exps_ < b.exps_; }

 private:
  std::vector<Exponent> exps_;
  Int degree_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b, std::span<const Int> weights);

enum class TieBreak { Lex, RevLex };

// Weighted degree first, ties broken lexicographically or reverse
// lexicographically (x_n cheapest) on the exponent vectors.
struct MonomialOrder {
  TieBreak tiebreak = TieBreak::RevLex;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const noexcept;
  bool less(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) < 0; }
};

// Pure difference binomial lead - tail with lead > tail under the order it
// was built with.
struct Binomial {
  Monomial lead;
  Monomial tail;

  // Orients u - v; returns nullopt when u == v (the zero binomial).
  static std::optional<Binomial> make(Monomial u, Monomial v, const MonomialOrder& order);

  bool balanced() const noexcept { return lead.degree() == tail.degree(); }

  friend bool operator==(const Binomial&, const Binomial&) = default;
};

std::string to_string(const Monomial& m);
std::string to_string(const Binomial& b);

// Parses "x1^2*x3", "1", or "x1 x3^2" over variables x1..xn.
Monomial parse_monomial(std::string_view text, std::span<const Int> weights);
// Parses "u - v" into the difference of two monomials, oriented by `order`.
// Throws ParseError on malformed text or when u == v.
Binomial parse_binomial(std::string_view text, std::span<const Int> weights,
                        const MonomialOrder& order = {});

}  // namespace sgf
