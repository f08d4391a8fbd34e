#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sgf/monomial.hpp"
#include "sgf/semigroup.hpp"

namespace sgf {

using Factorization = std::vector<Exponent>;

struct FactorizationOptions {
  // Maximum number of search nodes before FactorizationBudgetExceeded.
  std::size_t node_budget = 10'000'000;
};

// Calls `visit` for every c >= 0 with sum c_j a_j = m, in descending
// lexicographic order of c. Stops early when `visit` returns false.
void for_each_factorization(const NumericalSemigroup& h, Int m,
                            const std::function<bool(const Factorization&)>& visit,
                            const FactorizationOptions& options = {});

std::vector<Factorization> factorizations(const NumericalSemigroup& h, Int m,
                                          const FactorizationOptions& options = {});

// n x n integer matrix M with m_ii = -1, m_ij >= 0 off the diagonal, and
// M a = (alpha, ..., alpha)^T.
class RFMatrix {
 public:
  // Throws InvalidRFMatrix unless `rows` satisfies the three conditions for
  // the generators of `h`.
  RFMatrix(const NumericalSemigroup& h, Int alpha, std::vector<std::vector<Int>> rows);

  Int alpha() const noexcept { return alpha_; }
  std::size_t size() const noexcept { return rows_.size(); }
  Int operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const std::vector<std::vector<Int>>& rows() const noexcept { return rows_; }

  friend bool operator==(const RFMatrix&, const RFMatrix&) = default;

 private:
  Int alpha_;
  std::vector<std::vector<Int>> rows_;
};

bool is_rf_matrix(const NumericalSemigroup& h, Int alpha, const std::vector<std::vector<Int>>& rows);

struct RFOptions {
  std::size_t max_matrices = 1'000'000;
  FactorizationOptions factorization{};
};

// Row i of an RF-matrix is a factorization of alpha + a_i (whose i-th
// coordinate is necessarily zero) with -1 on the diagonal; the full set is
// the Cartesian product over the rows, enumerated with the last row varying
// fastest. Throws NotPseudoFrobenius for alpha outside PF(H).
void for_each_rf_matrix(const NumericalSemigroup& h, Int alpha,
                        const std::function<bool(const RFMatrix&)>& visit,
                        const RFOptions& options = {});

// Throws RFMatrixLimitExceeded when the product exceeds max_matrices.
std::vector<RFMatrix> rf_matrices(const NumericalSemigroup& h, Int alpha, const RFOptions& options = {});

// Number of RF-matrices for alpha (product of row factorization counts).
std::size_t count_rf_matrices(const NumericalSemigroup& h, Int alpha, const RFOptions& options = {});

bool check_column_positivity(const RFMatrix& m);

// Simultaneous row/column permutation bringing M to the cyclic shape:
// superdiagonal l_2..l_n, corner l_1 at (n, 1), -1 diagonal, zeros
// elsewhere. permutation[k] is the original index placed at position k;
// ells[k] is the exponent of x_{permutation[k]} in the cyclic top row.
struct CyclicCertificate {
  std::vector<std::size_t> permutation;
  std::vector<Int> ells;

  friend bool operator==(const CyclicCertificate&, const CyclicCertificate&) = default;
};

// The successor walk visits rows in cycle order; among the n rotations the
// one starting at index 0 is the lexicographically least permutation.
std::optional<CyclicCertificate> find_cyclic_form(const RFMatrix& m);

// M with rows and columns reordered by `permutation`.
std::vector<std::vector<Int>> permuted(const RFMatrix& m, std::span<const std::size_t> permutation);

// f_i = prod_{j != i} x_j^{m_ij}.
std::vector<Monomial> top_row_monomials(const RFMatrix& m, std::span<const Int> weights);

// deg(x_i f_j) == deg(x_j f_i) for all i < j, i.e. every 2x2 minor of
// (f / x) is a homogeneous binomial and hence lies in Ker phi.
bool check_minors_in_kernel(std::span<const Monomial> top, const NumericalSemigroup& h);

}  // namespace sgf
