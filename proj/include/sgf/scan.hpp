#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sgf/execution.hpp"
#include "sgf/semigroup.hpp"
#include "sgf/theorem.hpp"

namespace sgf {

// <n, n + alpha, ..., n + (n-1) alpha> for n_lo <= n <= n_hi,
// alpha_lo <= alpha <= alpha_hi with gcd(n, alpha) = 1; n outer, alpha inner.
std::vector<std::vector<Int>> family_inputs(Int n_lo, Int n_hi, Int alpha_lo, Int alpha_hi);

// Every minimal generating system a_1 < ... < a_n with gcd 1, a_n <= max_gen
// and min_embdim <= n <= max_embdim, in lexicographic order.
std::vector<std::vector<Int>> enumerate_semigroups(Int max_gen, std::size_t min_embdim, std::size_t max_embdim);

struct ScanRecord {
  std::vector<Int> input;
  std::vector<Int> generators;
  std::size_t n = 0;
  Int frobenius = 0;
  std::vector<Int> pf;
  bool condition3 = false;
  bool almost_symmetric = false;
  std::size_t mu = 0;
  bool theorem_verified = false;

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

struct ScanReject {
  std::vector<Int> input;
  std::string error;

  friend bool operator==(const ScanReject&, const ScanReject&) = default;
};

struct ScanOutcome {
  std::vector<ScanRecord> records;  // input order
  std::vector<ScanReject> rejects;  // input order
};

struct ScanOptions {
  TheoremOptions theorem{};
  SemigroupLimits limits{};
  Execution execution = Execution::Parallel;
  int threads = 0;  // 0: OpenMP default
};

// One record per input; per-input failures go to rejects. The parallel
// path fans inputs out across OpenMP threads and runs each input's
// per-degree work serially; both paths return identical outcomes.
ScanOutcome scan(const std::vector<std::vector<Int>>& inputs, const ScanOptions& options = {});

inline constexpr const char* kScanCsvVersion = "sgf-scan-csv/1";
void write_csv_header(std::ostream& out);
void write_csv(std::ostream& out, const ScanRecord& record);
void write_json_line(std::ostream& out, const ScanRecord& record);

}  // namespace sgf
