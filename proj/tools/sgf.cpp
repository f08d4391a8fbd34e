#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sgf/document.hpp"
#include "sgf/en_complex.hpp"
#include "sgf/error.hpp"
#include "sgf/groebner.hpp"
#include "sgf/rfmatrix.hpp"
#include "sgf/scan.hpp"
#include "sgf/semigroup.hpp"
#include "sgf/theorem.hpp"
#include "sgf/toric.hpp"

using nlohmann::json;
using namespace sgf;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

struct Settings {
  bool json = false;
  std::optional<Int> max_degree;
  std::size_t pair_budget = 100'000;
  std::string seed_order = "revlex";
  bool no_en = false;
};

MonomialOrder order_of(const Settings& s) {
  return MonomialOrder{s.seed_order == "lex" ? TieBreak::Lex : TieBreak::RevLex};
}

TheoremOptions theorem_options(const Settings& s) {
  TheoremOptions t;
  t.mu.degree_bound = s.max_degree;
  t.mu.pair_budget = s.pair_budget;
  t.mu.order = order_of(s);
  return t;
}

std::string braces(const std::vector<Int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + "}";
}

std::string angle(const std::vector<Int>& v) {
  std::string out = "<";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + ">";
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

void note_reduction(const NumericalSemigroup& h) {
  if (!h.removed_generators().empty()) {
    std::cerr << "note: redundant generators removed " << braces(h.removed_generators()) << '\n';
  }
}

int cmd_analyze(const std::vector<Int>& gens, const Settings& s) {
  AnalyzeOptions options;
  options.theorem = theorem_options(s);
  options.en = !s.no_en;
  const auto doc = analyze(gens, options);
  if (s.json) {
    print_json(to_json(doc));
  } else {
    std::cout << render_text(doc);
  }
  return doc.theorem.consistent ? 0 : kExitInternal;
}

int cmd_pf(const std::vector<Int>& gens, const Settings& s) {
  const NumericalSemigroup h(gens);
  const auto apery = h.apery_set(h.generator(0));
  if (s.json) {
    print_json({{"generators", h.generators()},
                {"removed", h.removed_generators()},
                {"frobenius", h.frobenius()},
                {"gaps", h.gaps()},
                {"pf", h.pseudo_frobenius()},
                {"type", h.type()},
                {"almost_symmetric", h.is_almost_symmetric()},
                {"apery", apery}});
    return 0;
  }
  note_reduction(h);
  std::cout << "H = " << angle(h.generators()) << '\n'
            << "  f(H)              " << h.frobenius() << '\n'
            << "  gaps              " << braces(h.gaps()) << '\n'
            << "  PF(H)             " << braces(h.pseudo_frobenius()) << '\n'
            << "  type              " << h.type() << '\n'
            << "  almost symmetric  " << (h.is_almost_symmetric() ? "yes" : "no") << '\n'
            << "  Ap(H, " << h.generator(0) << ")" << std::string(h.generator(0) < 10 ? 10 : 9, ' ')
            << braces(apery) << '\n';
  return 0;
}

json certificate_json(const CyclicCertificate& c) {
  std::vector<std::size_t> perm;
  for (auto k : c.permutation) perm.push_back(k + 1);
  return {{"permutation", perm}, {"ells", c.ells}};
}

std::string certificate_text(const CyclicCertificate& c) {
  std::string out = "sigma = (";
  for (std::size_t k = 0; k < c.permutation.size(); ++k) out += (k ? " " : "") + std::to_string(c.permutation[k] + 1);
  return out + ")  ells = (" + [&] {
    std::string e;
    for (std::size_t k = 0; k < c.ells.size(); ++k) e += (k ? " " : "") + std::to_string(c.ells[k]);
    return e;
  }() + ")";
}

int cmd_rf(const std::vector<Int>& gens, Int alpha, bool verbose, std::size_t max_matrices, const Settings& s) {
  const NumericalSemigroup h(gens);
  RFOptions options;
  options.max_matrices = max_matrices;
  const auto matrices = rf_matrices(h, alpha, options);
  const auto certificates = cyclic_certificates(h, alpha, options);
  if (s.json) {
    json list = json::array();
    for (const auto& m : matrices) {
      const auto cert = find_cyclic_form(m);
      list.push_back({{"rows", m.rows()}, {"cyclic", cert ? certificate_json(*cert) : json(nullptr)}});
    }
    json certs = json::array();
    for (const auto& c : certificates) certs.push_back(certificate_json(c));
    print_json({{"generators", h.generators()},
                {"alpha", alpha},
                {"count", matrices.size()},
                {"matrices", list},
                {"certificates", certs}});
    return 0;
  }
  note_reduction(h);
  std::cout << "RF-matrices of " << angle(h.generators()) << " for alpha = " << alpha << ": " << matrices.size()
            << '\n';
  for (std::size_t idx = 0; idx < matrices.size(); ++idx) {
    const auto& m = matrices[idx];
    std::cout << "  #" << idx + 1 << '\n';
    for (const auto& row : m.rows()) {
      std::cout << "   ";
      for (Int v : row) std::cout << ' ' << (v >= 0 ? " " : "") << v;
      std::cout << '\n';
    }
    if (const auto cert = find_cyclic_form(m)) std::cout << "    cyclic: " << certificate_text(*cert) << '\n';
  }
  std::cout << "distinct cyclic certificates: " << certificates.size() << '\n';
  if (verbose) {
    for (const auto& c : certificates) std::cout << "  " << certificate_text(c) << '\n';
  } else if (!certificates.empty()) {
    std::cout << "  first: " << certificate_text(certificates.front()) << '\n';
  }
  return 0;
}

int cmd_theorem(const std::vector<Int>& gens, const Settings& s) {
  AnalyzeOptions options;
  options.theorem = theorem_options(s);
  options.en = false;
  const auto doc = analyze(gens, options);
  const auto& t = doc.theorem;
  if (s.json) {
    const auto j = to_json(doc);
    print_json({{"generators", doc.generators},
                {"pf", doc.pf},
                {"almost_symmetric", doc.almost_symmetric},
                {"mu", doc.mu.total},
                {"theorem", j.at("theorem")},
                {"presentation", j.at("presentation")}});
  } else {
    std::cout << "H = " << angle(doc.generators) << "  n = " << t.n << "  PF(H) = " << braces(doc.pf) << '\n'
              << "  condition (3): " << (t.condition3 ? "holds, alpha in " + braces(t.witnesses) : "fails") << '\n';
    if (t.assertions) {
      const auto& a = *t.assertions;
      std::cout << "  (a) ells            " << (a.a ? "ok" : "FAILED") << '\n'
                << "  (b) degree shift    " << (a.b ? "ok" : "FAILED") << '\n'
                << "  (c) PF multiples    " << (a.c ? "ok" : "FAILED") << '\n'
                << "  (d) almost sym.     " << (a.d ? "ok" : "FAILED") << '\n'
                << "  column positivity   " << (t.column_positivity ? "ok" : "FAILED") << '\n'
                << "  I = I_2(presentation) " << (t.ideal_equal.value_or(false) ? "yes" : "no") << '\n';
    }
    if (t.contrapositive_checked) {
      std::cout << "  cyclic RF presentations tried: " << t.cyclic_candidates
                << ", equal to I: " << t.cyclic_equalities << '\n';
    }
    std::cout << "  mu_S(I) = " << doc.mu.total << "  almost symmetric: " << (doc.almost_symmetric ? "yes" : "no")
              << '\n'
              << "  consistent with the theorem: " << (t.consistent ? "yes" : "NO") << '\n';
  }
  return t.consistent ? 0 : kExitInternal;
}

int cmd_ideal(const std::vector<Int>& gens, const std::optional<std::string>& member, const Settings& s) {
  const NumericalSemigroup h(gens);
  MuOptions options = theorem_options(s).mu;
  const auto result = mu(h, options);
  std::optional<json> membership;
  if (member) {
    const auto b = parse_binomial(*member, h.generators(), options.order);
    const bool by_degree = toric_membership(b, h);
    const auto witnesses = result.witnesses();
    GroebnerOptions g{options.order, options.pair_budget};
    const bool by_groebner = ideal_contains(witnesses, b, h.generators(), g);
    if (by_degree != by_groebner) throw Error(Errc::TheoremViolation, "membership tests disagree on " + *member);
    membership = json{{"binomial", to_string(b)}, {"in_ideal", by_degree}};
  }
  if (s.json) {
    const auto summary = summarize(result);
    json levels = json::array();
    for (const auto& d : summary.by_degree) {
      levels.push_back({{"degree", d.degree}, {"fiber_size", d.fiber_size}, {"count", d.count},
                        {"witnesses", d.witnesses}});
    }
    print_json({{"generators", h.generators()},
                {"mu", summary.total},
                {"degree_bound", summary.degree_bound},
                {"by_degree", levels},
                {"member", membership ? *membership : json(nullptr)}});
    return 0;
  }
  note_reduction(h);
  std::cout << "I = Ker phi for H = " << angle(h.generators()) << ", mu_S(I) = " << result.total
            << "  (degrees <= " << result.degree_bound << ")\n";
  for (const auto& level : result.by_degree) {
    for (const auto& w : level.witnesses) std::cout << "  [" << level.degree << "] " << to_string(w) << '\n';
  }
  if (membership) {
    std::cout << (*membership)["binomial"].get<std::string>() << (membership->at("in_ideal").get<bool>() ? " is" : " is not")
              << " in I\n";
  }
  return 0;
}

int cmd_en(const std::vector<Int>& gens, std::optional<Int> alpha, const Settings& s) {
  const NumericalSemigroup h(gens);
  if (!alpha) {
    const auto witnesses = condition3(h);
    if (witnesses.empty()) {
      throw Error(Errc::NotWitness, "condition (3) fails for " + angle(h.generators()) + "; no cyclic presentation");
    }
    alpha = witnesses.front();
  }
  const auto p = build_presentation(h, *alpha);
  const auto e = summarize_en(p, h);
  const bool ok = e.squares_to_zero && e.homogeneous && e.hilbert_ok && e.canonical_degrees == h.pseudo_frobenius();
  if (s.json) {
    print_json({{"generators", h.generators()},
                {"alpha", e.alpha},
                {"b", e.b},
                {"ranks", e.ranks},
                {"twists", e.twists},
                {"squares_to_zero", e.squares_to_zero},
                {"homogeneous", e.homogeneous},
                {"single_term_entries", e.single_term_entries},
                {"hilbert_ok", e.hilbert_ok},
                {"hilbert_up_to", e.hilbert_up_to},
                {"canonical_degrees", e.canonical_degrees},
                {"euler_characteristic", e.euler_characteristic}});
  } else {
    note_reduction(h);
    std::cout << "Eagon-Northcott complex of " << angle(h.generators()) << ", alpha = " << e.alpha << ", b = " << e.b
              << '\n';
    for (std::size_t q = 0; q < e.ranks.size(); ++q) {
      std::cout << "  C_" << q << "  rank " << e.ranks[q] << "  twists " << braces(e.twists[q]) << '\n';
    }
    std::cout << "  d o d = 0          " << (e.squares_to_zero ? "yes" : "NO") << '\n'
              << "  homogeneous        " << (e.homogeneous ? "yes" : "NO") << '\n'
              << "  Hilbert up to " << e.hilbert_up_to << "  " << (e.hilbert_ok ? "ok" : "FAILED") << '\n'
              << "  canonical degrees  " << braces(e.canonical_degrees) << '\n';
  }
  return ok ? 0 : kExitInternal;
}

std::pair<Int, Int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  try {
    std::size_t used = 0;
    if (colon == std::string::npos) {
      const Int v = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string lo = text.substr(0, colon), hi = text.substr(colon + 1);
    const Int a = std::stoll(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(text);
    const Int b = std::stoll(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::logic_error&) {
    throw Error(Errc::ParseError, "bad range '" + text + "', expected lo:hi");
  }
}

struct ScanSettings {
  bool csv = false;
  bool serial = false;
  int threads = 0;
  std::string rejects_path;
};

int run_scan(const std::vector<std::vector<Int>>& inputs, const ScanSettings& ss, const Settings& s) {
  ScanOptions options;
  options.theorem = theorem_options(s);
  options.execution = ss.serial ? Execution::Serial : Execution::Parallel;
  options.threads = ss.threads;
  const auto outcome = scan(inputs, options);

  if (ss.csv) {
    write_csv_header(std::cout);
    for (const auto& r : outcome.records) write_csv(std::cout, r);
  } else if (s.json) {
    for (const auto& r : outcome.records) write_json_line(std::cout, r);
  } else if (!outcome.records.empty()) {
    std::printf("%-28s %3s %6s  %-22s %4s %4s %4s %s\n", "H", "n", "f(H)", "PF(H)", "(3)", "AS", "mu", "verified");
    for (const auto& r : outcome.records) {
      std::printf("%-28s %3zu %6lld  %-22s %4s %4s %4zu %s\n", angle(r.generators).c_str(), r.n,
                  static_cast<long long>(r.frobenius), braces(r.pf).c_str(), r.condition3 ? "yes" : "no",
                  r.almost_symmetric ? "yes" : "no", r.mu, r.theorem_verified ? "yes" : "NO");
    }
  }

  std::ofstream file;
  if (!ss.rejects_path.empty()) {
    file.open(ss.rejects_path);
    if (!file) throw Error(Errc::ParseError, "cannot open " + ss.rejects_path);
  }
  std::ostream& rejects = ss.rejects_path.empty() ? std::cerr : file;
  for (const auto& r : outcome.rejects) {
    rejects << json{{"input", r.input}, {"error", r.error}}.dump() << '\n';
  }

  for (const auto& r : outcome.records) {
    if (!r.theorem_verified) return kExitInternal;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical semigroup rings: pseudo-Frobenius numbers, RF-matrices, toric ideals and "
               "Eagon-Northcott complexes."};
  app.require_subcommand(1);
  app.fallthrough();

  Settings s;
  app.add_flag("--json", s.json, "Machine-readable JSON output");
  app.add_option("--max-degree", s.max_degree, "Degree bound for minimal generators of I")
      ->envname("SGF_MAX_DEGREE")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--pair-budget", s.pair_budget, "S-pair budget for Groebner completions")
      ->envname("SGF_PAIR_BUDGET")
      ->capture_default_str();
  app.add_option("--seed-order", s.seed_order, "Tie-break of the weighted order")
      ->envname("SGF_SEED_ORDER")
      ->check(CLI::IsMember({"lex", "revlex"}))
      ->capture_default_str();
  app.add_flag("--no-en", s.no_en, "Skip the Eagon-Northcott complex")->envname("SGF_NO_EN");

  std::vector<Int> gens;
  auto add_gens = [&](CLI::App* sub) { sub->add_option("generators", gens, "Generators a_1 ... a_n")->required(); };

  auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis of one semigroup");
  add_gens(analyze_cmd);
  auto* pf_cmd = app.add_subcommand("pf", "Frobenius number, gaps, PF(H), Apery set");
  add_gens(pf_cmd);

  auto* rf_cmd = app.add_subcommand("rf", "RF-matrices for a pseudo-Frobenius number");
  add_gens(rf_cmd);
  Int alpha = 0;
  bool verbose = false;
  std::size_t max_matrices = 1'000'000;
  rf_cmd->add_option("--alpha", alpha, "Element of PF(H)")->required();
  rf_cmd->add_flag("-v,--verbose", verbose, "List every distinct cyclic certificate");
  rf_cmd->add_option("--max-matrices", max_matrices, "Enumeration cap")->envname("SGF_MAX_MATRICES");

  auto* theorem_cmd = app.add_subcommand("theorem", "Check the cyclic-presentation criterion");
  add_gens(theorem_cmd);

  auto* ideal_cmd = app.add_subcommand("ideal", "Minimal generators of the defining ideal");
  add_gens(ideal_cmd);
  std::optional<std::string> member;
  ideal_cmd->add_option("--member", member, "Binomial to test, e.g. \"x1*x4 - x2*x3\"");

  auto* en_cmd = app.add_subcommand("en", "Eagon-Northcott complex of the cyclic presentation");
  add_gens(en_cmd);
  std::optional<Int> en_alpha;
  en_cmd->add_option("--alpha", en_alpha, "Witness alpha (default: the smallest)");

  auto* scan_cmd = app.add_subcommand("scan", "Batch scan over a family or all small semigroups");
  scan_cmd->require_subcommand(1);
  ScanSettings ss;
  ss.threads = 0;
  scan_cmd->add_flag("--csv", ss.csv, "CSV output");
  scan_cmd->add_flag("--serial", ss.serial, "Run without OpenMP");
  scan_cmd->add_option("--threads", ss.threads, "Worker threads (0: OpenMP default)")->envname("SGF_THREADS");
  scan_cmd->add_option("--rejects", ss.rejects_path, "Write rejected inputs here instead of stderr");
  scan_cmd->fallthrough();

  auto* family_cmd = scan_cmd->add_subcommand("family", "<n, n+alpha, ..., n+(n-1)alpha>");
  std::string n_range, alpha_range;
  family_cmd->add_option("n_range", n_range, "lo:hi")->required();
  family_cmd->add_option("alpha_range", alpha_range, "lo:hi")->required();
  family_cmd->fallthrough();

  auto* all_cmd = scan_cmd->add_subcommand("all", "Every minimal generating system in a box");
  Int max_gen = 0;
  std::size_t max_embdim = 0, min_embdim = 3;
  all_cmd->add_option("--max-gen", max_gen, "Largest generator")->required();
  all_cmd->add_option("--max-embdim", max_embdim, "Largest embedding dimension")->required();
  all_cmd->add_option("--min-embdim", min_embdim, "Smallest embedding dimension")->capture_default_str();
  all_cmd->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(gens, s);
    if (*pf_cmd) return cmd_pf(gens, s);
    if (*rf_cmd) return cmd_rf(gens, alpha, verbose, max_matrices, s);
    if (*theorem_cmd) return cmd_theorem(gens, s);
    if (*ideal_cmd) return cmd_ideal(gens, member, s);
    if (*en_cmd) return cmd_en(gens, en_alpha, s);
    if (*family_cmd) {
      const auto [n_lo, n_hi] = parse_range(n_range);
      const auto [a_lo, a_hi] = parse_range(alpha_range);
      return run_scan(family_inputs(n_lo, n_hi, a_lo, a_hi), ss, s);
    }
    if (*all_cmd) return run_scan(enumerate_semigroups(max_gen, min_embdim, max_embdim), ss, s);
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    switch (classify(e.code())) {
      case ErrorClass::Input:
        return kExitInput;
      case ErrorClass::Budget:
        return kExitBudget;
      case ErrorClass::Internal:
        return kExitInternal;
    }
  }
  return 0;
}
