#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sgf/rfmatrix.hpp"
#include "sgf/semigroup.hpp"
#include "sgf/toric.hpp"

namespace sgf {

// All alpha in PF(H) with (n - 1) alpha not in H, ascending. Throws
// EmbeddingDimensionTooSmall for n < 3.
std::vector<Int> condition3(const NumericalSemigroup& h);

// The 2 x n cyclic presentation (x_{s1}^{l_1} ... over x_{s0} ...) read off
// an RF-matrix in cyclic form.
struct CyclicPresentation {
  Int alpha = 0;
  RFMatrix matrix;
  CyclicCertificate certificate;
  PresentationIdeal ideal;
};

// Column k of the cyclic presentation: top x_{p[k+1]}^{l_{k+1}}, bottom
// x_{p[k]}, indices mod n.
PresentationIdeal cyclic_presentation(const CyclicCertificate& cert, std::span<const Int> weights);

// Picks the first RF-matrix of alpha (enumeration order) admitting cyclic
// form. Throws NotWitness unless alpha is in condition3(h), and
// TheoremViolation when no RF-matrix is cyclic.
CyclicPresentation build_presentation(const NumericalSemigroup& h, Int alpha, const RFOptions& options = {});

// Every distinct cyclic certificate among the RF-matrices of alpha.
std::vector<CyclicCertificate> cyclic_certificates(const NumericalSemigroup& h, Int alpha,
                                                   const RFOptions& options = {});

struct AssertionChecks {
  bool ells_match = false;           // (a) l_k = min{l | l a_k in H_k} - 1
  bool degree_shift = false;         // (b) deg f_i - a_i = alpha
  bool pf_multiples = false;         // (c) PF(H) = {alpha, ..., (n-1) alpha}
  bool almost_symmetric = false;     // (d)

  bool all() const noexcept { return ells_match && degree_shift && pf_multiples && almost_symmetric; }
};

struct TheoremOptions {
  MuOptions mu{};
  RFOptions rf{};
  // When condition (3) fails, test every cyclic RF presentation of every
  // alpha in PF(H) against I.
  bool contrapositive = true;
};

struct TheoremReport {
  std::size_t n = 0;
  std::vector<Int> pf;
  std::vector<Int> condition3_witnesses;
  bool almost_symmetric = false;
  MuResult mu;

  std::optional<CyclicPresentation> presentation;
  std::vector<Int> expected_ells;  // min_multiple_in_complement - 1, cyclic order
  std::optional<AssertionChecks> assertions;
  bool column_positivity = false;
  std::optional<IdealEqualityReport> ideal_equality;

  // Contrapositive data when condition (3) fails.
  bool contrapositive_checked = false;
  std::size_t cyclic_candidates = 0;
  std::size_t cyclic_equalities = 0;

  bool condition3() const noexcept { return !condition3_witnesses.empty(); }
  // Everything the theorem predicts for this H was observed.
  bool consistent() const noexcept;
};

TheoremReport verify_theorem(const NumericalSemigroup& h, const TheoremOptions& options = {});

}  // namespace sgf
