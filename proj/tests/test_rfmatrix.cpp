#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "sgf/error.hpp"
#include "sgf/rfmatrix.hpp"
#include "sgf/theorem.hpp"

using namespace sgf;
using Rows = std::vector<std::vector<Int>>;
using F = Factorization;

TEST_CASE("factorizations") {
  NumericalSemigroup h{3, 4, 5};
  CHECK(factorizations(h, 6) == std::vector<F>{{2, 0, 0}});
  CHECK(factorizations(h, 9) == std::vector<F>{{3, 0, 0}, {0, 1, 1}});
  CHECK(factorizations(h, 0) == std::vector<F>{{0, 0, 0}});
  CHECK(factorizations(h, 2).empty());
  CHECK(factorizations(h, -4).empty());

  FactorizationOptions tiny;
  tiny.node_budget = 3;
  CHECK_THROWS_AS(factorizations(h, 60, tiny), Error);
}

TEST_CASE("factorizations agree with exhaustive box enumeration") {
  for (const auto& raw : oracle::random_inputs(25, 3, 15, 5, 77)) {
    NumericalSemigroup h(raw);
    for (Int m = 0; m <= 45; ++m) {
      const auto expected = oracle::factorizations(h.generators(), m);
      const auto got = factorizations(h, m);
      REQUIRE(got.size() == expected.size());
      for (std::size_t k = 0; k < got.size(); ++k) {
        CHECK(std::vector<int>(got[k].begin(), got[k].end()) == expected[k]);
      }
    }
  }
}

TEST_CASE("RF-matrices of <3,4,5> for alpha = 1") {
  NumericalSemigroup h{3, 4, 5};
  const auto all = rf_matrices(h, 1);
  REQUIRE(all.size() == 1);
  CHECK(all[0].rows() == Rows{{-1, 1, 0}, {0, -1, 1}, {2, 0, -1}});
  CHECK(check_column_positivity(all[0]));

  const auto cert = find_cyclic_form(all[0]);
  REQUIRE(cert);
  CHECK(cert->permutation == std::vector<std::size_t>{0, 1, 2});
  CHECK(cert->ells == std::vector<Int>{2, 1, 1});
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(cert->ells[k] == h.min_multiple_in_complement(cert->permutation[k]) - 1);
  }

  const auto top = top_row_monomials(all[0], h.generators());
  CHECK(to_string(top[0]) == "x2");
  CHECK(to_string(top[1]) == "x3");
  CHECK(to_string(top[2]) == "x1^2");
  for (std::size_t i = 0; i < 3; ++i) CHECK(top[i].degree() - h.generator(i) == 1);
  CHECK(check_minors_in_kernel(top, h));

  auto bumped = top;
  bumped[1] = bumped[1] * Monomial::variable(3, 0, 1, h.generators());
  CHECK_FALSE(check_minors_in_kernel(bumped, h));
}

TEST_CASE("RF-matrix errors and validation") {
  NumericalSemigroup h{3, 4, 5};
  CHECK_THROWS_AS(rf_matrices(h, 3), Error);  // 3 in H
  try {
    rf_matrices(h, 4);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotPseudoFrobenius);
  }
  // Identity diagonal is not an RF-matrix.
  CHECK_FALSE(is_rf_matrix(h, 1, Rows{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK_THROWS_AS(RFMatrix(h, 1, Rows{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), Error);
  // Row sums off.
  CHECK_FALSE(is_rf_matrix(h, 1, Rows{{-1, 1, 0}, {0, -1, 1}, {1, 0, -1}}));
  CHECK_FALSE(is_rf_matrix(h, 1, Rows{{-1, 1}, {0, -1}}));

  RFOptions capped;
  capped.max_matrices = 1;
  NumericalSemigroup g{10, 11, 13, 14};
  REQUIRE(count_rf_matrices(g, 29) == 16);
  try {
    rf_matrices(g, 29, capped);
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RFMatrixLimitExceeded);
  }
}

TEST_CASE("RF-matrices of <4,6,7,9> for alpha = 5") {
  NumericalSemigroup g{4, 6, 7, 9};
  std::size_t total = 0, cyclic = 0;
  for_each_rf_matrix(g, 5, [&](const RFMatrix& m) {
    ++total;
    CHECK(is_rf_matrix(g, 5, m.rows()));
    const auto top = top_row_monomials(m, g.generators());
    CHECK(check_minors_in_kernel(top, g));
    if (find_cyclic_form(m)) ++cyclic;
    for (std::size_t i = 0; i < m.size(); ++i) {
      Int sum = 0;
      std::size_t positives = 0;
      for (std::size_t j = 0; j < m.size(); ++j) {
        sum += m(i, j) * g.generator(j);
        positives += m(i, j) > 0 ? 1 : 0;
      }
      CHECK(sum == 5);
      if (positives > 1) CHECK_FALSE(find_cyclic_form(m));
    }
    return true;
  });
  CHECK(total == count_rf_matrices(g, 5));
  CHECK(total == 4);
  CHECK(cyclic == 0);
}

TEST_CASE("single-support rows forming several cycles are not cyclic") {
  // Successor map 0 -> 2 -> 4 -> 0 and 1 -> 3 -> 1.
  NumericalSemigroup h{7, 9, 11, 12, 13};
  const Rows rows{{-1, 0, 2, 0, 0}, {0, -1, 0, 2, 0}, {0, 0, -1, 0, 2}, {0, 3, 0, -1, 0}, {4, 0, 0, 0, -1}};
  REQUIRE(is_rf_matrix(h, 15, rows));
  CHECK_FALSE(find_cyclic_form(RFMatrix(h, 15, rows)));
  std::size_t seen = 0;
  for (const auto& m : rf_matrices(h, 15)) seen += m.rows() == rows ? 1 : 0;
  CHECK(seen == 1);
}

TEST_CASE("cyclic form iff one positive entry per row and a single cycle") {
  for (const auto& raw : oracle::random_inputs(60, 3, 14, 5, 4242)) {
    NumericalSemigroup h(raw);
    const std::size_t n = h.embedding_dimension();
    if (n < 3) continue;
    for (Int alpha : h.pseudo_frobenius()) {
      if (count_rf_matrices(h, alpha) > 2000) continue;
      for (const auto& m : rf_matrices(h, alpha)) {
        std::vector<std::size_t> succ(n);
        bool single = true;
        for (std::size_t i = 0; i < n; ++i) {
          std::size_t support = 0;
          for (std::size_t j = 0; j < n; ++j) {
            if (j != i && m(i, j) > 0) {
              ++support;
              succ[i] = j;
            }
          }
          single = single && support == 1;
        }
        bool one_cycle = single;
        if (single) {
          std::size_t at = 0, steps = 0;
          do {
            at = succ[at];
            ++steps;
          } while (at != 0 && steps <= n);
          one_cycle = at == 0 && steps == n;
        }
        CHECK(static_cast<bool>(find_cyclic_form(m)) == one_cycle);
      }
    }
  }
}

TEST_CASE("permuted certificate reproduces the cyclic shape") {
  for (const auto& gens : std::vector<std::vector<Int>>{{5, 7, 9, 11, 13}, {4, 5, 6, 7}, {3, 5, 7}, {6, 13, 20, 27, 34, 41}}) {
    NumericalSemigroup h(gens);
    const auto witnesses = condition3(h);
    REQUIRE(witnesses.size() == 1);
    for (const auto& m : rf_matrices(h, witnesses[0])) {
      const auto cert = find_cyclic_form(m);
      REQUIRE(cert);
      const std::size_t n = m.size();
      const auto shape = permuted(m, cert->permutation);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
          Int expected = 0;
          if (r == c) expected = -1;
          else if (c == r + 1) expected = cert->ells[c];
          else if (r == n - 1 && c == 0) expected = cert->ells[0];
          CHECK(shape[r][c] == expected);
        }
      }
      // Lexicographically least rotation starts at index 0.
      CHECK(cert->permutation.front() == 0);
      // (l_i + 1) a_i in H_i.
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t i = cert->permutation[k];
        std::vector<Int> others;
        for (std::size_t j = 0; j < n; ++j) {
          if (j != i) others.push_back(h.generator(j));
        }
        CHECK(oracle::member(others, (cert->ells[k] + 1) * h.generator(i)));
      }
    }
  }
}

TEST_CASE("RF-matrix properties on random semigroups") {
  for (const auto& raw : oracle::random_inputs(40, 3, 17, 5, 4242)) {
    NumericalSemigroup h(raw);
    CAPTURE(h.generators());
    const std::size_t n = h.embedding_dimension();
    for (Int alpha : h.pseudo_frobenius()) {
      if (count_rf_matrices(h, alpha) > 2000) continue;
      const auto all = rf_matrices(h, alpha);
      CHECK_FALSE(all.empty());
      for (const auto& m : all) {
        CHECK(is_rf_matrix(h, alpha, m.rows()));
        // Summing all rows: sum_j (sum_i m_ij) a_j = n alpha.
        Int total = 0;
        for (std::size_t j = 0; j < n; ++j) {
          Int column = 0;
          for (std::size_t i = 0; i < n; ++i) column += m(i, j);
          total += column * h.generator(j);
        }
        CHECK(total == static_cast<Int>(n) * alpha);
        const auto top = top_row_monomials(m, h.generators());
        for (std::size_t i = 0; i < n; ++i) {
          CHECK(top[i][i] == 0);
          CHECK(top[i].degree() - h.generator(i) == alpha);
        }
        CHECK(check_minors_in_kernel(top, h));
        if (auto cert = find_cyclic_form(m)) {
          for (std::size_t k = 0; k < n; ++k) {
            std::vector<Int> others;
            const std::size_t i = cert->permutation[k];
            for (std::size_t j = 0; j < n; ++j) {
              if (j != i) others.push_back(h.generator(j));
            }
            CHECK(oracle::member(others, (cert->ells[k] + 1) * h.generator(i)));
          }
        }
      }
    }
  }
}
