#include "sgf/scan.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "json.hpp"
#ifdef _OPENMP
#include <omp.h>
#endif

#include "sgf/error.hpp"

namespace sgf {

std::vector<std::vector<Int>> family_inputs(Int n_lo, Int n_hi, Int alpha_lo, Int alpha_hi) {
  std::vector<std::vector<Int>> out;
  for (Int n = n_lo; n <= n_hi; ++n) {
    for (Int alpha = alpha_lo; alpha <= alpha_hi; ++alpha) {
      if (n <= 0 || alpha <= 0 || std::gcd(n, alpha) != 1) continue;
      std::vector<Int> gens;
      for (Int i = 0; i < n; ++i) gens.push_back(n + i * alpha);
      out.push_back(std::move(gens));
    }
  }
  return out;
}

namespace {

bool is_minimal_system(const std::vector<Int>& gens) {
  const Int top = gens.back();
  std::vector<std::uint8_t> reach(static_cast<std::size_t>(top) + 1, 0);
  reach[0] = 1;
  for (Int c : gens) {
    if (reach[static_cast<std::size_t>(c)]) return false;
    for (Int x = c; x <= top; ++x) {
      if (reach[static_cast<std::size_t>(x - c)]) reach[static_cast<std::size_t>(x)] = 1;
    }
  }
  return true;
}

void extend(std::vector<Int>& current, Int next, Int max_gen, std::size_t min_embdim, std::size_t max_embdim,
            std::vector<std::vector<Int>>& out) {
  if (current.size() >= min_embdim) {
    Int g = 0;
    for (Int a : current) g = std::gcd(g, a);
    if (g == 1 && is_minimal_system(current)) out.push_back(current);
  }
  if (current.size() == max_embdim) return;
  for (Int a = next; a <= max_gen; ++a) {
    current.push_back(a);
    extend(current, a + 1, max_gen, min_embdim, max_embdim, out);
    current.pop_back();
  }
}

ScanRecord analyze_one(const std::vector<Int>& input, const ScanOptions& options) {
  const NumericalSemigroup h(input, options.limits);
  const TheoremReport report = verify_theorem(h, options.theorem);
  ScanRecord r;
  r.input = input;
  r.generators = h.generators();
  r.n = h.embedding_dimension();
  r.frobenius = h.frobenius();
  r.pf = h.pseudo_frobenius();
  r.condition3 = report.condition3();
  r.almost_symmetric = report.almost_symmetric;
  r.mu = report.mu.total;
  r.theorem_verified = report.consistent();
  return r;
}

using Slot = std::pair<std::optional<ScanRecord>, std::optional<ScanReject>>;

void run_slot(const std::vector<Int>& input, const ScanOptions& options, Slot& slot) {
  try {
    slot.first = analyze_one(input, options);
  } catch (const std::exception& e) {
    slot.second = ScanReject{input, e.what()};
  }
}

}  // namespace

std::vector<std::vector<Int>> enumerate_semigroups(Int max_gen, std::size_t min_embdim, std::size_t max_embdim) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> current;
  if (max_embdim == 0) return out;
  extend(current, 2, max_gen, std::max<std::size_t>(min_embdim, 2), max_embdim, out);
  std::sort(out.begin(), out.end());
  return out;
}

ScanOutcome scan(const std::vector<std::vector<Int>>& inputs, const ScanOptions& options) {
  std::vector<Slot> slots(inputs.size());
  if (options.execution == Execution::Serial) {
    ScanOptions serial = options;
    serial.theorem.mu.execution = Execution::Serial;
    for (std::size_t i = 0; i < inputs.size(); ++i) run_slot(inputs[i], serial, slots[i]);
  } else {
    ScanOptions inner = options;
    inner.theorem.mu.execution = Execution::Serial;
    const long count = static_cast<long>(inputs.size());
#ifdef _OPENMP
    const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#else
    const int threads = 1;
#endif
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long i = 0; i < count; ++i) {
      run_slot(inputs[static_cast<std::size_t>(i)], inner, slots[static_cast<std::size_t>(i)]);
    }
  }
  ScanOutcome outcome;
  for (auto& [record, reject] : slots) {
    if (record) outcome.records.push_back(std::move(*record));
    if (reject) outcome.rejects.push_back(std::move(*reject));
  }
  return outcome;
}

namespace {

std::string join(const std::vector<Int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

void write_csv_header(std::ostream& out) {
  out << "# " << kScanCsvVersion << '\n'
      << "generators,n,frobenius,pf,type,condition3,almost_symmetric,mu,theorem_verified\n";
}

void write_csv(std::ostream& out, const ScanRecord& r) {
  out << join(r.generators) << ',' << r.n << ',' << r.frobenius << ',' << join(r.pf) << ',' << r.pf.size()
      << ',' << (r.condition3 ? "true" : "false") << ',' << (r.almost_symmetric ? "true" : "false") << ','
      << r.mu << ',' << (r.theorem_verified ? "true" : "false") << '\n';
}

void write_json_line(std::ostream& out, const ScanRecord& r) {
  nlohmann::json j = {
      {"generators", r.generators},
      {"n", r.n},
      {"frobenius", r.frobenius},
      {"pf", r.pf},
      {"type", r.pf.size()},
      {"condition3", r.condition3},
      {"almost_symmetric", r.almost_symmetric},
      {"mu", r.mu},
      {"theorem_verified", r.theorem_verified},
  };
  out << j.dump() << '\n';
}

}  // namespace sgf
