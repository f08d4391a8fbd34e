#include "sgf/en_complex.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sgf/error.hpp"

namespace sgf {

Polynomial multiply(const Polynomial& f, const Polynomial& g) {
  Polynomial out;
  for (const auto& [u, cu] : f) {
    for (const auto& [v, cv] : g) {
      auto [it, inserted] = out.try_emplace(u * v, 0);
      it->second += cu * cv;
      if (it->second == 0) out.erase(it);
    }
  }
  return out;
}

void add_to(Polynomial& acc, const Polynomial& f) {
  for (const auto& [m, c] : f) {
    auto [it, inserted] = acc.try_emplace(m, 0);
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries.begin(), entries.end(), [](const Polynomial& p) { return p.empty(); });
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out(a.rows, b.cols);
  for (std::size_t r = 0; r < a.rows; ++r) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const auto& left = a.at(r, k);
      if (left.empty()) continue;
      for (std::size_t c = 0; c < b.cols; ++c) {
        const auto& right = b.at(k, c);
        if (!right.empty()) add_to(out.at(r, c), multiply(left, right));
      }
    }
  }
  return out;
}

std::vector<Int> ComplexTerm::twists() const {
  std::vector<Int> out;
  out.reserve(degrees.size());
  for (Int d : degrees) out.push_back(-d);
  return out;
}

namespace {

// k-subsets of {0..n-1} in colex order.
std::vector<std::vector<std::size_t>> colex_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask[i]) s.push_back(i);
    }
    out.push_back(std::move(s));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
  });
  return out;
}

Polynomial signed_monomial(const Monomial& m, Int sign) { return Polynomial{{m, sign}}; }

std::size_t index_of(const ComplexTerm& term, const BasisLabel& label) {
  auto it = std::find(term.basis.begin(), term.basis.end(), label);
  return static_cast<std::size_t>(it - term.basis.begin());
}

}  // namespace

GradedComplex build_en_complex(const PresentationIdeal& p, const NumericalSemigroup& h) {
  const std::size_t n = p.columns();
  if (n < 3) {
    throw Error(Errc::EmbeddingDimensionTooSmall, "Eagon-Northcott construction requires n >= 3");
  }
  if (p.weights() != h.generators()) {
    throw Error(Errc::InvalidPresentation, "presentation weights differ from the semigroup generators");
  }
  GradedComplex c;
  c.variable_weights = p.weights();
  for (std::size_t col = 0; col < n; ++col) {
    c.weights.push_back(p.weights()[p.bottom()[col]]);
    c.top_degrees.push_back(p.top()[col].degree());
  }
  c.alpha = c.top_degrees[0] - c.weights[0];
  for (std::size_t col = 1; col < n; ++col) {
    if (c.top_degrees[col] - c.weights[col] != c.alpha) {
      throw Error(Errc::NotEquidegree, "deg f_i - a_i is not constant across columns");
    }
  }
  c.total_degree = std::accumulate(c.top_degrees.begin(), c.top_degrees.end(), Int{0});

  ComplexTerm c0;
  c0.basis.push_back(BasisLabel{{}, 0});
  c0.degrees.push_back(0);
  c.terms.push_back(std::move(c0));
  for (std::size_t q = 1; q < n; ++q) {
    ComplexTerm term;
    for (auto& lambda : colex_subsets(n, q + 1)) {
      Int sum = 0;
      for (std::size_t i : lambda) sum += c.top_degrees[i];
      for (std::size_t ell = 0; ell < q; ++ell) {
        term.basis.push_back(BasisLabel{lambda, ell});
        term.degrees.push_back(sum - static_cast<Int>(ell + 1) * c.alpha);
      }
    }
    c.terms.push_back(std::move(term));
  }

  // d_1(T_i T_j) = f_i x_j - f_j x_i
  {
    const auto& c1 = c.terms[1];
    PolyMatrix d1(1, c1.rank());
    for (std::size_t col = 0; col < c1.rank(); ++col) {
      const std::size_t i = c1.basis[col].lambda[0];
      const std::size_t j = c1.basis[col].lambda[1];
      Polynomial entry = signed_monomial(p.top()[i] * p.bottom_variable(j), 1);
      add_to(entry, signed_monomial(p.top()[j] * p.bottom_variable(i), -1));
      d1.at(0, col) = std::move(entry);
    }
    c.differentials.push_back(std::move(d1));
  }

  // d_q: the Koszul term of f lowers nothing in y (l stays) and exists for
  // l <= q - 2; the Koszul term of x lowers y_2 (l - 1) and exists for l >= 1.
  for (std::size_t q = 2; q < n; ++q) {
    const auto& source = c.terms[q];
    const auto& target = c.terms[q - 1];
    PolyMatrix d(target.rank(), source.rank());
    for (std::size_t col = 0; col < source.rank(); ++col) {
      const auto& label = source.basis[col];
      for (std::size_t t = 0; t < label.lambda.size(); ++t) {
        const Int sign = (t % 2 == 0) ? 1 : -1;
        const std::size_t i = label.lambda[t];
        std::vector<std::size_t> rest = label.lambda;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(t));
        if (label.ell + 2 <= q) {
          const std::size_t row = index_of(target, BasisLabel{rest, label.ell});
          add_to(d.at(row, col), signed_monomial(p.top()[i], sign));
        }
        if (label.ell >= 1) {
          const std::size_t row = index_of(target, BasisLabel{rest, label.ell - 1});
          add_to(d.at(row, col), signed_monomial(p.bottom_variable(i), sign));
        }
      }
    }
    c.differentials.push_back(std::move(d));
  }
  return c;
}

ComplexCheck check_complex(const GradedComplex& c) {
  ComplexCheck check;
  check.squares_to_zero = true;
  for (std::size_t q = 0; q + 1 < c.differentials.size(); ++q) {
    if (!(c.differentials[q] * c.differentials[q + 1]).is_zero()) check.squares_to_zero = false;
  }
  check.homogeneous = true;
  check.single_term_entries = true;
  for (std::size_t q = 1; q <= c.differentials.size(); ++q) {
    const auto& d = c.differentials[q - 1];
    const auto& source = c.terms[q];
    const auto& target = c.terms[q - 1];
    if (d.rows != target.rank() || d.cols != source.rank()) {
      check.homogeneous = false;
      continue;
    }
    for (std::size_t r = 0; r < d.rows; ++r) {
      for (std::size_t col = 0; col < d.cols; ++col) {
        const auto& entry = d.at(r, col);
        if (q >= 2 && entry.size() > 1) check.single_term_entries = false;
        const Int expected = source.degrees[col] - target.degrees[r];
        for (const auto& [m, coeff] : entry) {
          if (m.degree() != expected) check.homogeneous = false;
        }
      }
    }
  }
  return check;
}

bool verify_complex(const GradedComplex& c) { return check_complex(c).ok(); }

HilbertCheck verify_exactness_by_hilbert(const GradedComplex& c, const NumericalSemigroup& h,
                                         std::optional<Int> up_to) {
  HilbertCheck check;
  check.up_to = up_to.value_or(2 * c.total_degree);
  const Int top = check.up_to;

  // Number of monomials of S in each weighted degree.
  std::vector<Int> monomials(static_cast<std::size_t>(top) + 1, 0);
  monomials[0] = 1;
  for (Int a : c.variable_weights) {
    for (Int e = a; e <= top; ++e) monomials[static_cast<std::size_t>(e)] += monomials[static_cast<std::size_t>(e - a)];
  }
  auto count = [&](Int e) { return (e < 0 || e > top) ? Int{0} : monomials[static_cast<std::size_t>(e)]; };

  const auto expected = hilbert_coefficients(h, top);
  for (Int d = 0; d <= top; ++d) {
    Int sum = 0;
    for (std::size_t q = 0; q < c.terms.size(); ++q) {
      Int level = 0;
      for (Int deg : c.terms[q].degrees) level += count(d - deg);
      sum += (q % 2 == 0) ? level : -level;
    }
    if (sum != expected[static_cast<std::size_t>(d)]) {
      check.first_failure = d;
      return check;
    }
  }
  check.ok = true;
  return check;
}

std::vector<Int> canonical_presentation_degrees(const GradedComplex& c) {
  if (c.terms.size() < 3) {
    throw Error(Errc::EmbeddingDimensionTooSmall, "canonical presentation requires n >= 3");
  }
  std::vector<Int> out;
  for (Int twist : c.terms.back().twists()) out.push_back(twist + c.total_degree);
  std::sort(out.begin(), out.end());
  return out;
}

Int euler_characteristic(const GradedComplex& c) {
  Int sum = 0;
  for (std::size_t q = 0; q < c.terms.size(); ++q) {
    const Int r = static_cast<Int>(c.terms[q].rank());
    sum += (q % 2 == 0) ? r : -r;
  }
  return sum;
}

}  // namespace sgf
