#include "sgf/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <cassert>
#include <charconv>

#include "sgf/error.hpp"

namespace sgf {

Monomial::Monomial(std::vector<Exponent> exponents, std::span<const Int> weights)
    : exps_(std::move(exponents)) {
  assert(exps_.size() == weights.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) degree_ += Int{exps_[i]} * weights[i];
}

Monomial Monomial::one(std::size_t nvars) {
  Monomial m;
  m.exps_.assign(nvars, 0);
  return m;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power,
                            std::span<const Int> weights) {
  Monomial m = one(nvars);
  m.exps_.at(index) = power;
  m.degree_ = Int{power} * weights[index];
  return m;
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] += other.exps_[i];
  m.degree_ += other.degree_;
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  assert(other.divides(*this));
  Monomial m = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) m.exps_[i] -= other.exps_[i];
  m.degree_ -= other.degree_;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b, std::span<const Int> weights) {
  std::vector<Exponent> e(a.nvars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e), weights);
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const auto& x = a.exponents();
  const auto& y = b.exponents();
  if (tiebreak == TieBreak::Lex) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != y[i]) return x[i] <=> y[i];
    }
  } else {
    for (std::size_t i = x.size(); i-- > 0;) {
      if (x[i] != y[i]) return y[i] <=> x[i];
    }
  }
  return std::strong_ordering::equal;
}

std::optional<Binomial> Binomial::make(Monomial u, Monomial v, const MonomialOrder& order) {
  const auto c = order.compare(u, v);
  if (c == 0) return std::nullopt;
  if (c > 0) return Binomial{std::move(u), std::move(v)};
  return Binomial{std::move(v), std::move(u)};
}

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Binomial& b) { return to_string(b.lead) + " - " + to_string(b.tail); }

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_space();
    return pos == text.size();
  }
  bool eat(char c) {
    skip_space();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  long number() {
    skip_space();
    long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) throw Error(Errc::ParseError, "expected a number in '" + std::string(text) + "'");
    pos = static_cast<std::size_t>(ptr - text.data());
    return value;
  }
};

Monomial parse_product(Cursor& cur, std::span<const Int> weights) {
  std::vector<Exponent> exps(weights.size(), 0);
  bool any = false;
  while (true) {
    cur.skip_space();
    if (cur.pos < cur.text.size() && cur.text[cur.pos] == '1' && !any) {
      ++cur.pos;
      any = true;
    } else if (cur.eat('x')) {
      const long index = cur.number();
      if (index < 1 || static_cast<std::size_t>(index) > weights.size()) {
        throw Error(Errc::ParseError, "variable x" + std::to_string(index) + " out of range");
      }
      long power = 1;
      if (cur.eat('^')) power = cur.number();
      if (power < 0) throw Error(Errc::ParseError, "negative exponent");
      exps[static_cast<std::size_t>(index - 1)] += static_cast<Exponent>(power);
      any = true;
    } else {
      break;
    }
    cur.eat('*');
  }
  if (!any) throw Error(Errc::ParseError, "expected a monomial in '" + std::string(cur.text) + "'");
  return Monomial(std::move(exps), weights);
}

}  // namespace

Monomial parse_monomial(std::string_view text, std::span<const Int> weights) {
  Cursor cur{text};
  Monomial m = parse_product(cur, weights);
  if (!cur.done()) throw Error(Errc::ParseError, "trailing input in '" + std::string(text) + "'");
  return m;
}

Binomial parse_binomial(std::string_view text, std::span<const Int> weights, const MonomialOrder& order) {
  Cursor cur{text};
  Monomial u = parse_product(cur, weights);
  if (!cur.eat('-')) throw Error(Errc::ParseError, "expected 'u - v' in '" + std::string(text) + "'");
  Monomial v = parse_product(cur, weights);
  if (!cur.done()) throw Error(Errc::ParseError, "trailing input in '" + std::string(text) + "'");
  auto b = Binomial::make(std::move(u), std::move(v), order);
  if (!b) throw Error(Errc::ParseError, "binomial '" + std::string(text) + "' is zero");
  return *b;
}

}  // namespace sgf
