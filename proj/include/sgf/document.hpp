#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "sgf/theorem.hpp"

namespace sgf {

struct DegreeSummary {
  Int degree = 0;
  std::size_t fiber_size = 0;
  std::size_t count = 0;
  std::vector<std::string> witnesses;
  friend bool operator==(const DegreeSummary&, const DegreeSummary&) = default;
};

struct MuSummary {
  Int degree_bound = 0;
  std::size_t total = 0;
  std::vector<DegreeSummary> by_degree;
  friend bool operator==(const MuSummary&, const MuSummary&) = default;
};

struct AssertionSummary {
  bool a = false;
  bool b = false;
  bool c = false;
  bool d = false;
  friend bool operator==(const AssertionSummary&, const AssertionSummary&) = default;
};

struct TheoremSummary {
  std::size_t n = 0;
  bool condition3 = false;
  std::vector<Int> witnesses;
  std::optional<AssertionSummary> assertions;
  std::vector<Int> expected_ells;
  bool column_positivity = false;
  std::optional<bool> ideal_equal;
  std::optional<bool> colength_agrees;
  std::optional<std::string> first_failure;
  bool contrapositive_checked = false;
  std::size_t cyclic_candidates = 0;
  std::size_t cyclic_equalities = 0;
  bool consistent = false;
  friend bool operator==(const TheoremSummary&, const TheoremSummary&) = default;
};

struct PresentationSummary {
  Int alpha = 0;
  std::vector<std::size_t> permutation;  // 1-based variable indices
  std::vector<Int> ells;
  std::vector<std::string> top;
  std::vector<std::string> bottom;
  std::vector<std::string> minors;
  std::vector<std::vector<Int>> rf_matrix;
  friend bool operator==(const PresentationSummary&, const PresentationSummary&) = default;
};

struct ENSummary {
  Int alpha = 0;
  Int b = 0;
  std::vector<std::size_t> ranks;
  std::vector<std::vector<Int>> twists;
  bool squares_to_zero = false;
  bool homogeneous = false;
  bool single_term_entries = false;
  bool hilbert_ok = false;
  Int hilbert_up_to = 0;
  std::vector<Int> canonical_degrees;
  Int euler_characteristic = 0;
  friend bool operator==(const ENSummary&, const ENSummary&) = default;
};

struct AnalysisDocument {
  std::vector<Int> input;
  std::vector<Int> generators;
  std::vector<Int> removed;
  Int frobenius = 0;
  std::size_t gap_count = 0;
  std::vector<Int> pf;
  std::size_t type = 0;
  bool almost_symmetric = false;
  TheoremSummary theorem;
  MuSummary mu;
  std::optional<PresentationSummary> presentation;
  std::optional<ENSummary> en;
  friend bool operator==(const AnalysisDocument&, const AnalysisDocument&) = default;
};

inline constexpr const char* kAnalysisSchema = "sgf-analysis/1";

struct AnalyzeOptions {
  SemigroupLimits limits{};
  TheoremOptions theorem{};
  bool en = true;
};

// Full pipeline: semigroup, PF, theorem, mu and (when condition (3) holds)
// the Eagon-Northcott summary. Requires n >= 3.
AnalysisDocument analyze(std::span<const Int> raw, const AnalyzeOptions& options = {});

MuSummary summarize(const MuResult& mu);
PresentationSummary summarize(const CyclicPresentation& p);
ENSummary summarize_en(const CyclicPresentation& p, const NumericalSemigroup& h);

nlohmann::json to_json(const AnalysisDocument& doc);
// Throws ParseError on schema mismatch.
AnalysisDocument document_from_json(const nlohmann::json& j);

std::string render_text(const AnalysisDocument& doc);

}  // namespace sgf
