#include "sgf/theorem.hpp"

#include <algorithm>
#include <string>

#include "sgf/error.hpp"

namespace sgf {

std::vector<Int> condition3(const NumericalSemigroup& h) {
  const std::size_t n = h.embedding_dimension();
  if (n < 3) {
    throw Error(Errc::EmbeddingDimensionTooSmall,
                "embedding dimension " + std::to_string(n) + " < 3");
  }
  std::vector<Int> out;
  for (Int alpha : h.pseudo_frobenius()) {
    if (!h.contains(static_cast<Int>(n - 1) * alpha)) out.push_back(alpha);
  }
  return out;
}

PresentationIdeal cyclic_presentation(const CyclicCertificate& cert, std::span<const Int> weights) {
  const std::size_t n = cert.permutation.size();
  std::vector<Monomial> top;
  std::vector<std::size_t> bottom;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t next = (k + 1) % n;
    top.push_back(Monomial::variable(n, cert.permutation[next], static_cast<Exponent>(cert.ells[next]), weights));
    bottom.push_back(cert.permutation[k]);
  }
  return PresentationIdeal(std::move(top), std::move(bottom), std::vector<Int>(weights.begin(), weights.end()));
}

CyclicPresentation build_presentation(const NumericalSemigroup& h, Int alpha, const RFOptions& options) {
  const auto witnesses = condition3(h);
  if (!std::binary_search(witnesses.begin(), witnesses.end(), alpha)) {
    throw Error(Errc::NotWitness, std::to_string(alpha) + " is not a PF element with (n-1) alpha outside H");
  }
  std::optional<CyclicPresentation> found;
  for_each_rf_matrix(h, alpha, [&](const RFMatrix& m) {
    if (auto cert = find_cyclic_form(m)) {
      found.emplace(CyclicPresentation{alpha, m, *cert, cyclic_presentation(*cert, h.generators())});
      return false;
    }
    return true;
  }, options);
  if (!found) {
    throw Error(Errc::TheoremViolation,
                "no RF-matrix of alpha = " + std::to_string(alpha) + " admits cyclic form");
  }
  return std::move(*found);
}

std::vector<CyclicCertificate> cyclic_certificates(const NumericalSemigroup& h, Int alpha,
                                                   const RFOptions& options) {
  std::vector<CyclicCertificate> out;
  for_each_rf_matrix(h, alpha, [&](const RFMatrix& m) {
    auto cert = find_cyclic_form(m);
    if (cert && std::find(out.begin(), out.end(), *cert) == out.end()) out.push_back(std::move(*cert));
    return true;
  }, options);
  return out;
}

bool TheoremReport::consistent() const noexcept {
  if (!condition3()) {
    return !presentation && (!contrapositive_checked || cyclic_equalities == 0);
  }
  return condition3_witnesses.size() == 1 && presentation && assertions && assertions->all() &&
         column_positivity && ideal_equality && ideal_equality->equal && ideal_equality->colength_agrees &&
         pf.size() == n - 1;
}

TheoremReport verify_theorem(const NumericalSemigroup& h, const TheoremOptions& options) {
  TheoremReport report;
  report.n = h.embedding_dimension();
  report.condition3_witnesses = condition3(h);
  report.pf = h.pseudo_frobenius();
  report.almost_symmetric = h.is_almost_symmetric();
  report.mu = mu(h, options.mu);
  const GroebnerOptions gb{options.mu.order, options.mu.pair_budget};

  if (!report.condition3()) {
    if (options.contrapositive) {
      report.contrapositive_checked = true;
      for (Int alpha : report.pf) {
        for (const auto& cert : cyclic_certificates(h, alpha, options.rf)) {
          ++report.cyclic_candidates;
          const auto p = cyclic_presentation(cert, h.generators());
          if (ideal_equals_toric(p, h, report.mu, gb).equal) ++report.cyclic_equalities;
        }
      }
    }
    return report;
  }

  const Int alpha = report.condition3_witnesses.front();
  auto built = build_presentation(h, alpha, options.rf);
  const auto& cert = built.certificate;
  const std::size_t n = report.n;

  AssertionChecks checks;
  checks.ells_match = true;
  for (std::size_t k = 0; k < n; ++k) {
    const Int expected = h.min_multiple_in_complement(cert.permutation[k]) - 1;
    report.expected_ells.push_back(expected);
    if (expected != cert.ells[k]) checks.ells_match = false;
  }
  checks.degree_shift = true;
  for (std::size_t p = 0; p < n; ++p) {
    const Int shift = built.ideal.top()[p].degree() - h.generator(built.ideal.bottom()[p]);
    if (shift != alpha) checks.degree_shift = false;
  }
  std::vector<Int> multiples;
  for (std::size_t i = 1; i < n; ++i) multiples.push_back(static_cast<Int>(i) * alpha);
  checks.pf_multiples = report.pf == multiples;
  checks.almost_symmetric = report.almost_symmetric;
  report.assertions = checks;

  report.column_positivity = check_column_positivity(built.matrix);
  report.ideal_equality = ideal_equals_toric(built.ideal, h, report.mu, gb);
  report.presentation = std::move(built);
  return report;
}

}  // namespace sgf
