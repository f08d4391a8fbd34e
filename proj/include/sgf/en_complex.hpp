#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "sgf/monomial.hpp"
#include "sgf/semigroup.hpp"
#include "sgf/toric.hpp"

namespace sgf {

// Integer-coefficient polynomial, sparse in monomials.
using Polynomial = std::map<Monomial, Int>;

Polynomial multiply(const Polynomial& f, const Polynomial& g);
void add_to(Polynomial& acc, const Polynomial& f);

struct PolyMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Polynomial> entries;  // row-major

  PolyMatrix() = default;
  PolyMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

  Polynomial& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  const Polynomial& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  bool is_zero() const;
};

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);

// Basis element T_Lambda (x) y_1^{q-1-l} y_2^l of C_q. Lambda holds column
// indices of the presentation, ascending.
struct BasisLabel {
  std::vector<std::size_t> lambda;
  std::size_t ell = 0;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

struct ComplexTerm {
  std::vector<BasisLabel> basis;
  // Degree of each basis element; the term is the sum of S(-degree).
  std::vector<Int> degrees;

  std::size_t rank() const noexcept { return basis.size(); }
  std::vector<Int> twists() const;
};

// Eagon-Northcott complex 0 -> C_{n-1} -> ... -> C_1 -> C_0 = S of a 2 x n
// matrix (f_1 ... f_n / x_1 ... x_n) with deg f_i - a_i = alpha constant.
// differentials[q - 1] is d_q : C_q -> C_{q-1}, rows indexed by C_{q-1}.
// Basis: Lambda in colex order, l ascending within Lambda. Koszul signs:
// d(T_{i_1} ... T_{i_{q+1}}) = sum_j (-1)^{j-1} c_{i_j} T_{Lambda \ i_j}.
struct GradedComplex {
  std::vector<Int> weights;        // a_i of the bottom-row variables, by column
  std::vector<Int> top_degrees;    // b_i = deg f_i, by column
  Int alpha = 0;
  Int total_degree = 0;            // b = sum b_i
  std::vector<ComplexTerm> terms;  // C_0 ... C_{n-1}
  std::vector<PolyMatrix> differentials;
  std::vector<Int> variable_weights;  // weights of x_1..x_n in S
};

// Throws EmbeddingDimensionTooSmall for n < 3 and NotEquidegree when
// deg f_i - a_i varies.
GradedComplex build_en_complex(const PresentationIdeal& p, const NumericalSemigroup& h);

struct ComplexCheck {
  bool squares_to_zero = false;
  bool homogeneous = false;
  bool single_term_entries = false;  // every entry of d_q, q >= 2, is 0 or +-monomial
  bool ok() const noexcept { return squares_to_zero && homogeneous; }
};

ComplexCheck check_complex(const GradedComplex& c);
bool verify_complex(const GradedComplex& c);

struct HilbertCheck {
  bool ok = false;
  std::optional<Int> first_failure;
  Int up_to = 0;
};

// sum_q (-1)^q HF(C_q, d) == [d in H] for all d <= up_to (default 2b).
HilbertCheck verify_exactness_by_hilbert(const GradedComplex& c, const NumericalSemigroup& h,
                                         std::optional<Int> up_to = std::nullopt);

// Generator degrees {l alpha} of the canonical module read from the twists
// of C_{n-1} shifted by b; ascending.
std::vector<Int> canonical_presentation_degrees(const GradedComplex& c);

// sum_q (-1)^q rank C_q.
Int euler_characteristic(const GradedComplex& c);

}  // namespace sgf
