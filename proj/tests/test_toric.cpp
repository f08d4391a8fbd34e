#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "sgf/error.hpp"
#include "sgf/groebner.hpp"
#include "sgf/scan.hpp"
#include "sgf/theorem.hpp"
#include "sgf/toric.hpp"

using namespace sgf;

namespace {

const std::vector<Int> w345{3, 4, 5};

Binomial bin(const char* text, const std::vector<Int>& w, MonomialOrder order = {}) {
  return parse_binomial(text, w, order);
}

std::vector<Binomial> minors345() {
  NumericalSemigroup h{3, 4, 5};
  auto p = PresentationIdeal::from_top_row({parse_monomial("x2", w345), parse_monomial("x3", w345),
                                            parse_monomial("x1^2", w345)},
                                           w345);
  return p.minors();
}

}  // namespace

TEST_CASE("monomial order and parsing") {
  const auto a = parse_monomial("x2^2", w345);
  const auto b = parse_monomial("x1 * x3", w345);
  CHECK(a.degree() == 8);
  CHECK(b.degree() == 8);
  CHECK(to_string(parse_monomial("1", w345)) == "1");
  CHECK(to_string(parse_monomial("x3^2*x1", w345)) == "x1*x3^2");
  // revlex: smaller power of the last variable wins.
  CHECK(MonomialOrder{TieBreak::RevLex}.less(b, a));
  CHECK(MonomialOrder{TieBreak::Lex}.less(a, b));
  CHECK(MonomialOrder{}.less(parse_monomial("x1", w345), parse_monomial("x2", w345)));
  CHECK_THROWS_AS(parse_monomial("x4", w345), Error);
  CHECK_THROWS_AS(parse_monomial("y1", w345), Error);
  CHECK_THROWS_AS(parse_binomial("x1 - x1", w345), Error);
  CHECK_THROWS_AS(parse_binomial("x1 + x2", w345), Error);
}

TEST_CASE("toric membership by weighted degree") {
  NumericalSemigroup h{3, 4, 5};
  CHECK(toric_membership(bin("x2^2 - x1*x3", w345), h));
  CHECK_FALSE(toric_membership(bin("x1 - x2", w345), h));
  NumericalSemigroup g{10, 11, 13, 14};
  CHECK(toric_membership(bin("x1*x4 - x2*x3", g.generators()), g));
}

TEST_CASE("Buchberger on small inputs") {
  const auto gens = minors345();
  REQUIRE(gens.size() == 3);
  const auto gb = buchberger(gens, w345);
  CHECK(gb.size() == 3);
  for (const auto& g : gens) CHECK(gb.contains(g));

  const std::vector<Binomial> single{bin("x1^3 - x2^2", std::vector<Int>{2, 3})};
  const auto one = buchberger(single, std::vector<Int>{2, 3});
  REQUIRE(one.size() == 1);
  CHECK(one.elements()[0] == single[0]);

  const std::vector<Int> w23{2, 3};
  const std::vector<Binomial> dup{bin("x1^3 - x2^2", w23), bin("x2^2 - x1^3", w23)};
  CHECK(buchberger(dup, w23).size() == 1);

  GroebnerOptions starved;
  starved.pair_budget = 0;
  try {
    buchberger(gens, w345, starved);
    FAIL("budget not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CompletionBudgetExceeded);
  }
}

TEST_CASE("ideal membership") {
  const auto gens = minors345();
  CHECK(ideal_contains(gens, bin("x2^2 - x1*x3", w345), w345));
  CHECK(ideal_contains(gens, bin("x2*x3 - x1^3", w345), w345));
  CHECK_FALSE(ideal_contains(gens, bin("x1 - x2", w345), w345));
  CHECK(ideal_contains(gens, bin("x3^2 - x1^2*x2", w345), w345));
}

TEST_CASE("reduced GB does not depend on generator order") {
  NumericalSemigroup h{5, 7, 9, 11, 13};
  auto gens = mu(h).witnesses();
  for (auto order : {MonomialOrder{TieBreak::Lex}, MonomialOrder{TieBreak::RevLex}}) {
    GroebnerOptions options{order, 100'000};
    const auto reference = buchberger(gens, h.generators(), options).elements();
    std::mt19937 rng(7);
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(gens.begin(), gens.end(), rng);
      CHECK(buchberger(gens, h.generators(), options).elements() == reference);
    }
  }
}

TEST_CASE("fibers") {
  NumericalSemigroup h{3, 4, 5};
  const auto f8 = fiber(h, 8);
  REQUIRE(f8.size() == 2);
  CHECK(to_string(f8[0]) == "x1*x3");
  CHECK(to_string(f8[1]) == "x2^2");
  CHECK(fiber(h, 1).empty());
  const auto f0 = fiber(h, 0);
  REQUIRE(f0.size() == 1);
  CHECK(f0[0].is_one());
}

TEST_CASE("minimal generators by degree") {
  NumericalSemigroup h{3, 4, 5};
  CHECK(minimal_generator_count_in_degree(h, 8) == 1);
  CHECK(minimal_generator_count_in_degree(h, 0) == 0);
  CHECK(minimal_generator_count_in_degree(h, 2) == 0);
  // Degree 12: x1^4, x1*x2*x3, x2^3 are chained through shared variables.
  const auto twelve = fiber_generators(h, 12);
  CHECK(twelve.fiber_size == oracle::factorizations(h.generators(), 12).size());
  CHECK(twelve.count == 0);
}

TEST_CASE("mu for the worked examples") {
  const NumericalSemigroup h345{3, 4, 5};
  const auto r345 = mu(h345);
  CHECK(r345.total == 3);
  CHECK(r345.degree_bound == 20);

  const NumericalSemigroup h4679{4, 6, 7, 9};
  const auto r4679 = mu(h4679);
  CHECK(r4679.total == 6);
  std::vector<Int> degrees;
  for (const auto& level : r4679.by_degree) degrees.push_back(level.degree);
  CHECK(degrees == std::vector<Int>{12, 13, 14, 15, 16, 18});

  const NumericalSemigroup h10{10, 11, 13, 14};
  const auto r10 = mu(h10);
  CHECK(r10.total == 7);
  degrees.clear();
  for (const auto& level : r10.by_degree) degrees.push_back(level.degree);
  CHECK(degrees == std::vector<Int>{24, 33, 36, 39, 40, 41, 42});
  // x1 x4 - x2 x3 is the degree-24 generator.
  CHECK(to_string(r10.by_degree[0].witnesses[0]) == "x2*x3 - x1*x4");

  const NumericalSemigroup h5{5, 7, 9, 11, 13};
  CHECK(mu(h5).total == 10);
}

TEST_CASE("mu: serial and parallel paths agree; linear algebra oracle agrees") {
  for (const auto& raw : oracle::random_inputs(30, 3, 16, 5, 99)) {
    NumericalSemigroup h(raw);
    CAPTURE(h.generators());
    MuOptions serial;
    serial.execution = Execution::Serial;
    MuOptions parallel;
    parallel.execution = Execution::Parallel;
    const auto a = mu(h, serial);
    const auto b = mu(h, parallel);
    CHECK(a.total == b.total);
    CHECK(a.witnesses() == b.witnesses());

    std::vector<std::pair<Int, std::size_t>> fiber_counts;
    for (const auto& level : a.by_degree) fiber_counts.emplace_back(level.degree, level.count);
    CHECK(mu_by_linear_algebra(h, a.degree_bound, Execution::Serial) == fiber_counts);
    CHECK(mu_by_linear_algebra(h, a.degree_bound, Execution::Parallel) == fiber_counts);
    for (Int d = 0; d <= a.degree_bound; ++d) {
      if (fiber(h, d).size() <= 1) CHECK(minimal_generator_count_in_degree(h, d) == 0);
    }
  }
}

TEST_CASE("bound too small is detected") {
  NumericalSemigroup h{4, 6, 7, 9};
  MuOptions options;
  options.degree_bound = 14;
  try {
    mu(h, options);
    FAIL("expected BoundTooSmall");
  } catch (const BoundTooSmall& e) {
    CHECK(e.code() == Errc::BoundTooSmall);
    CHECK(e.bound() == 14);
    CHECK(e.degree() == 15);
  }
  options.verify = false;
  CHECK(mu(h, options).total == 3);
}

TEST_CASE("toric membership agrees with GB normal form of a full generating set") {
  for (const auto& raw : enumerate_semigroups(15, 2, 15)) {
    NumericalSemigroup h(raw);
    const auto& a = h.generators();
    const auto gb = buchberger(mu(h).witnesses(), a);
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> e(0, 3);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Exponent> u(a.size()), v(a.size());
      for (auto& x : u) x = e(rng);
      for (auto& x : v) x = e(rng);
      auto b = Binomial::make(Monomial(u, a), Monomial(v, a), MonomialOrder{});
      if (!b) continue;
      CHECK(toric_membership(*b, h) == gb.contains(*b));
    }
    // And a guaranteed-balanced pair per degree.
    for (Int d = 0; d <= 40; ++d) {
      const auto f = fiber(h, d);
      if (f.size() >= 2) CHECK(gb.contains(*Binomial::make(f.front(), f.back(), MonomialOrder{})));
    }
  }
}

TEST_CASE("presentation ideal equality") {
  NumericalSemigroup h{3, 4, 5};
  auto p = PresentationIdeal::from_top_row({parse_monomial("x2", w345), parse_monomial("x3", w345),
                                            parse_monomial("x1^2", w345)},
                                           w345);
  CHECK(p.minors_balanced());
  const auto report = ideal_equals_toric(p, h);
  CHECK(report.minors_in_ideal);
  CHECK(report.equal);
  CHECK(report.colength_agrees);
  CHECK_FALSE(report.first_failure);

  CHECK_THROWS_AS(PresentationIdeal({}, {}, {}), Error);

  // <5,9,11,12> has a cyclic RF presentation although no alpha satisfies
  // (n - 1) alpha not in H; its minors generate a smaller ideal.
  NumericalSemigroup s{5, 9, 11, 12};
  const auto s_generators = mu(s);
  std::size_t tried = 0;
  for (Int alpha : s.pseudo_frobenius()) {
    for (const auto& cert : cyclic_certificates(s, alpha)) {
      ++tried;
      const auto r = ideal_equals_toric(cyclic_presentation(cert, s.generators()), s, s_generators);
      CHECK(r.minors_in_ideal);
      CHECK_FALSE(r.equal);
      CHECK(r.first_failure);
      CHECK(r.colength_agrees);
    }
  }
  CHECK(tried == 1);

  NumericalSemigroup g{4, 6, 7, 9};
  const auto generators = mu(g);
  // Also the two 2x4 blocks of the known generating set: each alone is not I.
  const auto& a = g.generators();
  auto block = PresentationIdeal::from_top_row(
      {parse_monomial("x2", a), parse_monomial("x1^2", a), parse_monomial("x4", a), parse_monomial("x1*x3", a)}, a);
  CHECK(block.minors_balanced());
  CHECK_FALSE(ideal_equals_toric(block, g, generators).equal);
  auto other = PresentationIdeal::from_top_row(
      {parse_monomial("x3", a), parse_monomial("x4", a), parse_monomial("x1*x2", a), parse_monomial("x1^3", a)}, a);
  CHECK(other.minors_balanced());
  auto together = block.minors();
  const auto more = other.minors();
  together.insert(together.end(), more.begin(), more.end());
  CHECK_FALSE(toric_generation_defect(together, g));
}

TEST_CASE("Hilbert coefficients") {
  CHECK(hilbert_coefficients(NumericalSemigroup{2, 3}, 4) == std::vector<int>{1, 0, 1, 1, 1});
  CHECK(hilbert_coefficients(NumericalSemigroup{3, 4, 5}, 6) == std::vector<int>{1, 0, 0, 1, 1, 1, 1});
  CHECK(hilbert_coefficients(NumericalSemigroup{7, 9}, 0) == std::vector<int>{1});
}
