#include "sgf/rfmatrix.hpp"

#include <algorithm>
#include <string>

#include "sgf/error.hpp"

namespace sgf {

void for_each_factorization(const NumericalSemigroup& h, Int m,
                            const std::function<bool(const Factorization&)>& visit,
                            const FactorizationOptions& options) {
  if (!h.contains(m)) return;
  const auto& a = h.generators();
  const std::size_t n = a.size();
  Factorization c(n, 0);
  std::size_t nodes = 0;
  bool stop = false;

  // Remainders outside H cannot be completed by any subset of generators.
  std::function<void(std::size_t, Int)> descend = [&](std::size_t pos, Int rest) {
    if (stop) return;
    if (++nodes > options.node_budget) {
      throw Error(Errc::FactorizationBudgetExceeded,
                  "factorization search exceeded " + std::to_string(options.node_budget) + " nodes");
    }
    if (pos + 1 == n) {
      if (rest % a[pos] != 0) return;
      c[pos] = static_cast<Exponent>(rest / a[pos]);
      if (!visit(c)) stop = true;
      c[pos] = 0;
      return;
    }
    for (Int k = rest / a[pos]; k >= 0 && !stop; --k) {
      const Int left = rest - k * a[pos];
      if (!h.contains(left)) continue;
      c[pos] = static_cast<Exponent>(k);
      descend(pos + 1, left);
    }
    c[pos] = 0;
  };
  descend(0, m);
}

std::vector<Factorization> factorizations(const NumericalSemigroup& h, Int m,
                                          const FactorizationOptions& options) {
  std::vector<Factorization> out;
  for_each_factorization(h, m, [&](const Factorization& c) {
    out.push_back(c);
    return true;
  }, options);
  return out;
}

bool is_rf_matrix(const NumericalSemigroup& h, Int alpha, const std::vector<std::vector<Int>>& rows) {
  const auto& a = h.generators();
  const std::size_t n = a.size();
  if (rows.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) return false;
    Int sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j ? rows[i][j] != -1 : rows[i][j] < 0) return false;
      sum += rows[i][j] * a[j];
    }
    if (sum != alpha) return false;
  }
  return true;
}

RFMatrix::RFMatrix(const NumericalSemigroup& h, Int alpha, std::vector<std::vector<Int>> rows)
    : alpha_(alpha), rows_(std::move(rows)) {
  if (!is_rf_matrix(h, alpha_, rows_)) {
    throw Error(Errc::InvalidRFMatrix, "matrix is not an RF-matrix for alpha = " + std::to_string(alpha_));
  }
}

namespace {

std::vector<std::vector<Factorization>> row_choices(const NumericalSemigroup& h, Int alpha,
                                                    const RFOptions& options) {
  const auto& pf = h.pseudo_frobenius();
  if (!std::binary_search(pf.begin(), pf.end(), alpha)) {
    throw Error(Errc::NotPseudoFrobenius, std::to_string(alpha) + " is not a pseudo-Frobenius number");
  }
  const auto& a = h.generators();
  std::vector<std::vector<Factorization>> choices;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto row = factorizations(h, alpha + a[i], options.factorization);
    for (auto& c : row) {
      // c_i > 0 would put alpha in H.
      if (c[i] != 0) throw Error(Errc::TheoremViolation, "factorization of alpha + a_i uses a_i");
    }
    choices.push_back(std::move(row));
  }
  return choices;
}

}  // namespace

std::size_t count_rf_matrices(const NumericalSemigroup& h, Int alpha, const RFOptions& options) {
  std::size_t total = 1;
  for (const auto& row : row_choices(h, alpha, options)) {
    if (row.empty()) return 0;
    if (total > SIZE_MAX / row.size()) return SIZE_MAX;
    total *= row.size();
  }
  return total;
}

void for_each_rf_matrix(const NumericalSemigroup& h, Int alpha,
                        const std::function<bool(const RFMatrix&)>& visit, const RFOptions& options) {
  const auto choices = row_choices(h, alpha, options);
  const std::size_t n = choices.size();
  for (const auto& row : choices) {
    if (row.empty()) throw Error(Errc::TheoremViolation, "alpha + a_i not in H for a PF element");
  }
  std::vector<std::size_t> index(n, 0);
  std::size_t produced = 0;
  while (true) {
    if (++produced > options.max_matrices) {
      throw Error(Errc::RFMatrixLimitExceeded,
                  "more than " + std::to_string(options.max_matrices) + " RF-matrices");
    }
    std::vector<std::vector<Int>> rows(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i) {
      const auto& c = choices[i][index[i]];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = (i == j) ? -1 : Int{c[j]};
    }
    if (!visit(RFMatrix(h, alpha, std::move(rows)))) return;

    std::size_t k = n;
    while (k-- > 0) {
      if (++index[k] < choices[k].size()) break;
      index[k] = 0;
    }
    if (k == SIZE_MAX) return;
  }
}

std::vector<RFMatrix> rf_matrices(const NumericalSemigroup& h, Int alpha, const RFOptions& options) {
  std::vector<RFMatrix> out;
  for_each_rf_matrix(h, alpha, [&](const RFMatrix& m) {
    out.push_back(m);
    return true;
  }, options);
  return out;
}

bool check_column_positivity(const RFMatrix& m) {
  const std::size_t n = m.size();
  for (std::size_t j = 0; j < n; ++j) {
    bool positive = false;
    for (std::size_t i = 0; i < n && !positive; ++i) positive = m(i, j) > 0;
    if (!positive) return false;
  }
  return true;
}

std::optional<CyclicCertificate> find_cyclic_form(const RFMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> successor(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t support = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i && m(i, j) != 0) {
        ++support;
        successor[i] = j;
      }
    }
    if (support != 1) return std::nullopt;
  }

  CyclicCertificate cert;
  cert.permutation.reserve(n);
  std::vector<bool> seen(n, false);
  std::size_t at = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (seen[at]) return std::nullopt;
    seen[at] = true;
    cert.permutation.push_back(at);
    at = successor[at];
  }
  if (at != 0) return std::nullopt;

  // Row p_k carries x_{p_{k+1}}^{l_{k+1}}; the last row carries x_{p_0}^{l_0}.
  cert.ells.assign(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t row = cert.permutation[k];
    const std::size_t next = (k + 1) % n;
    cert.ells[next] = m(row, cert.permutation[next]);
  }
  return cert;
}

std::vector<std::vector<Int>> permuted(const RFMatrix& m, std::span<const std::size_t> permutation) {
  const std::size_t n = m.size();
  std::vector<std::vector<Int>> out(n, std::vector<Int>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out[r][c] = m(permutation[r], permutation[c]);
  }
  return out;
}

std::vector<Monomial> top_row_monomials(const RFMatrix& m, std::span<const Int> weights) {
  const std::size_t n = m.size();
  std::vector<Monomial> top;
  top.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Exponent> e(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) e[j] = static_cast<Exponent>(m(i, j));
    }
    top.emplace_back(std::move(e), weights);
  }
  return top;
}

bool check_minors_in_kernel(std::span<const Monomial> top, const NumericalSemigroup& h) {
  const auto& a = h.generators();
  if (top.size() != a.size()) return false;
  for (std::size_t i = 0; i < top.size(); ++i) {
    for (std::size_t j = i + 1; j < top.size(); ++j) {
      if (a[i] + top[j].degree() != a[j] + top[i].degree()) return false;
    }
  }
  return true;
}

}  // namespace sgf
