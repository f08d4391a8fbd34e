#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <vector>

#include "oracles.hpp"
#include "sgf/error.hpp"
#include "sgf/theorem.hpp"

using namespace sgf;

TEST_CASE("condition (3) witnesses") {
  CHECK(condition3(NumericalSemigroup{3, 4, 5}) == std::vector<Int>{1});
  CHECK(condition3(NumericalSemigroup{4, 6, 7, 9}).empty());
  CHECK(condition3(NumericalSemigroup{5, 7, 9, 11, 13}) == std::vector<Int>{2});
  CHECK(condition3(NumericalSemigroup{10, 11, 13, 14}).empty());
  try {
    condition3(NumericalSemigroup{2, 3});
    FAIL("n < 3 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmbeddingDimensionTooSmall);
  }
}

TEST_CASE("cyclic presentation for <3,4,5>") {
  NumericalSemigroup h{3, 4, 5};
  const auto p = build_presentation(h, 1);
  CHECK(p.alpha == 1);
  CHECK(p.certificate.permutation == std::vector<std::size_t>{0, 1, 2});
  CHECK(p.certificate.ells == std::vector<Int>{2, 1, 1});
  std::vector<std::string> top;
  for (const auto& m : p.ideal.top()) top.push_back(to_string(m));
  CHECK(top == std::vector<std::string>{"x2", "x3", "x1^2"});
  CHECK(p.ideal.bottom() == std::vector<std::size_t>{0, 1, 2});

  try {
    build_presentation(h, 2);
    FAIL("non-witness accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotWitness);
  }
  CHECK_THROWS_AS(build_presentation(h, 7), Error);
}

TEST_CASE("cyclic presentation for <5,7,9,11,13>") {
  NumericalSemigroup h{5, 7, 9, 11, 13};
  const auto p = build_presentation(h, 2);
  const auto& cert = p.certificate;
  REQUIRE(cert.permutation.size() == 5);
  for (std::size_t k = 0; k < 5; ++k) {
    const std::size_t i = cert.permutation[k];
    std::vector<Int> others;
    for (std::size_t j = 0; j < 5; ++j) {
      if (j != i) others.push_back(h.generator(j));
    }
    CHECK(oracle::member(others, (cert.ells[k] + 1) * h.generator(i)));
    CHECK(cert.ells[k] + 1 == oracle::min_multiple(h.generators(), i));
  }
  for (std::size_t k = 0; k < 5; ++k) {
    CHECK(p.ideal.top()[k].degree() - h.generator(p.ideal.bottom()[k]) == 2);
  }
}

TEST_CASE("verify_theorem on the worked examples") {
  const auto r345 = verify_theorem(NumericalSemigroup{3, 4, 5});
  CHECK(r345.condition3());
  REQUIRE(r345.assertions);
  CHECK(r345.assertions->all());
  CHECK(r345.pf == std::vector<Int>{1, 2});
  CHECK(r345.expected_ells == std::vector<Int>{2, 1, 1});
  REQUIRE(r345.ideal_equality);
  CHECK(r345.ideal_equality->equal);
  CHECK(r345.column_positivity);
  CHECK(r345.mu.total == 3);
  CHECK(r345.consistent());

  const auto r10 = verify_theorem(NumericalSemigroup{10, 11, 13, 14});
  CHECK_FALSE(r10.condition3());
  CHECK(r10.almost_symmetric);
  CHECK(r10.mu.total == 7);
  CHECK_FALSE(r10.presentation);
  CHECK(r10.contrapositive_checked);
  CHECK(r10.cyclic_equalities == 0);
  CHECK(r10.consistent());

  const auto r5 = verify_theorem(NumericalSemigroup{5, 7, 9, 11, 13});
  CHECK(r5.pf == std::vector<Int>{2, 4, 6, 8});
  CHECK(r5.condition3_witnesses == std::vector<Int>{2});
  CHECK(r5.consistent());
  CHECK(r5.mu.total == 10);

  const auto r4679 = verify_theorem(NumericalSemigroup{4, 6, 7, 9});
  CHECK_FALSE(r4679.condition3());
  CHECK(r4679.almost_symmetric);
  CHECK(r4679.cyclic_candidates == 0);
  CHECK(r4679.consistent());

  // A cyclic presentation exists, but its minors do not generate I.
  const auto r5912 = verify_theorem(NumericalSemigroup{5, 9, 11, 12});
  CHECK_FALSE(r5912.condition3());
  CHECK(r5912.cyclic_candidates == 1);
  CHECK(r5912.cyclic_equalities == 0);
  CHECK(r5912.consistent());

  TheoremOptions quick;
  quick.contrapositive = false;
  const auto skipped = verify_theorem(NumericalSemigroup{5, 9, 11, 12}, quick);
  CHECK_FALSE(skipped.contrapositive_checked);
  CHECK(skipped.cyclic_candidates == 0);
}

TEST_CASE("consistency flags a broken report") {
  auto r = verify_theorem(NumericalSemigroup{3, 4, 5});
  REQUIRE(r.consistent());
  r.assertions->pf_multiples = false;
  CHECK_FALSE(r.consistent());
  auto s = verify_theorem(NumericalSemigroup{5, 9, 11, 12});
  s.cyclic_equalities = 1;
  CHECK_FALSE(s.consistent());
}

TEST_CASE("theorem invariants on random semigroups") {
  std::size_t positive = 0;
  for (const auto& raw : oracle::random_inputs(80, 3, 18, 5, 2024)) {
    NumericalSemigroup h(raw);
    if (h.embedding_dimension() < 3) continue;
    CAPTURE(h.generators());
    const auto r = verify_theorem(h);
    CHECK(r.consistent());
    // Witness list against brute force.
    std::vector<Int> brute;
    const Int n = static_cast<Int>(h.embedding_dimension());
    for (Int alpha : oracle::pseudo_frobenius(h.generators())) {
      if (!oracle::member(h.generators(), (n - 1) * alpha)) brute.push_back(alpha);
    }
    CHECK(r.condition3_witnesses == brute);
    if (r.condition3()) {
      ++positive;
      CHECK(r.condition3_witnesses.size() == 1);
      CHECK(h.type() == h.embedding_dimension() - 1);
      CHECK(r.almost_symmetric);
      std::vector<Int> multiples;
      for (Int i = 1; i < n; ++i) multiples.push_back(i * r.condition3_witnesses[0]);
      CHECK(r.pf == multiples);
      REQUIRE(r.ideal_equality);
      CHECK(r.ideal_equality->equal);
      CHECK(r.ideal_equality->colength_agrees);
      CHECK(r.mu.total == h.embedding_dimension() * (h.embedding_dimension() - 1) / 2);
    } else {
      CHECK(r.cyclic_equalities == 0);
    }
  }
  CHECK(positive > 0);
}
