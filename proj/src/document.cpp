#include "sgf/document.hpp"

#include <sstream>

#include "sgf/en_complex.hpp"
#include "sgf/error.hpp"

namespace sgf {

using nlohmann::json;

MuSummary summarize(const MuResult& mu) {
  MuSummary s;
  s.degree_bound = mu.degree_bound;
  s.total = mu.total;
  for (const auto& level : mu.by_degree) {
    DegreeSummary d{level.degree, level.fiber_size, level.count, {}};
    for (const auto& w : level.witnesses) d.witnesses.push_back(to_string(w));
    s.by_degree.push_back(std::move(d));
  }
  return s;
}

PresentationSummary summarize(const CyclicPresentation& p) {
  PresentationSummary s;
  s.alpha = p.alpha;
  for (std::size_t k : p.certificate.permutation) s.permutation.push_back(k + 1);
  s.ells = p.certificate.ells;
  for (std::size_t col = 0; col < p.ideal.columns(); ++col) {
    s.top.push_back(to_string(p.ideal.top()[col]));
    s.bottom.push_back(to_string(p.ideal.bottom_variable(col)));
  }
  for (const auto& m : p.ideal.minors()) s.minors.push_back(to_string(m));
  s.rf_matrix = p.matrix.rows();
  return s;
}

ENSummary summarize_en(const CyclicPresentation& p, const NumericalSemigroup& h) {
  const GradedComplex c = build_en_complex(p.ideal, h);
  const ComplexCheck check = check_complex(c);
  const HilbertCheck hilbert = verify_exactness_by_hilbert(c, h);
  ENSummary s;
  s.alpha = c.alpha;
  s.b = c.total_degree;
  for (const auto& term : c.terms) {
    s.ranks.push_back(term.rank());
    s.twists.push_back(term.twists());
  }
  s.squares_to_zero = check.squares_to_zero;
  s.homogeneous = check.homogeneous;
  s.single_term_entries = check.single_term_entries;
  s.hilbert_ok = hilbert.ok;
  s.hilbert_up_to = hilbert.up_to;
  s.canonical_degrees = canonical_presentation_degrees(c);
  s.euler_characteristic = euler_characteristic(c);
  return s;
}

AnalysisDocument analyze(std::span<const Int> raw, const AnalyzeOptions& options) {
  const NumericalSemigroup h(raw, options.limits);
  const TheoremReport report = verify_theorem(h, options.theorem);

  AnalysisDocument doc;
  doc.input.assign(raw.begin(), raw.end());
  doc.generators = h.generators();
  doc.removed = h.removed_generators();
  doc.frobenius = h.frobenius();
  doc.gap_count = h.gaps().size();
  doc.pf = h.pseudo_frobenius();
  doc.type = h.type();
  doc.almost_symmetric = h.is_almost_symmetric();

  auto& t = doc.theorem;
  t.n = report.n;
  t.condition3 = report.condition3();
  t.witnesses = report.condition3_witnesses;
  if (report.assertions) {
    const auto& a = *report.assertions;
    t.assertions = AssertionSummary{a.ells_match, a.degree_shift, a.pf_multiples, a.almost_symmetric};
  }
  t.expected_ells = report.expected_ells;
  t.column_positivity = report.column_positivity;
  if (report.ideal_equality) {
    t.ideal_equal = report.ideal_equality->equal;
    t.colength_agrees = report.ideal_equality->colength_agrees;
    if (report.ideal_equality->first_failure) t.first_failure = to_string(*report.ideal_equality->first_failure);
  }
  t.contrapositive_checked = report.contrapositive_checked;
  t.cyclic_candidates = report.cyclic_candidates;
  t.cyclic_equalities = report.cyclic_equalities;
  t.consistent = report.consistent();

  doc.mu = summarize(report.mu);
  if (report.presentation) {
    doc.presentation = summarize(*report.presentation);
    if (options.en) doc.en = summarize_en(*report.presentation, h);
  }
  return doc;
}

namespace {

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& value) {
  j[key] = value ? json(*value) : json(nullptr);
}

template <class T>
std::optional<T> get_optional(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

json mu_json(const MuSummary& mu) {
  json levels = json::array();
  for (const auto& d : mu.by_degree) {
    levels.push_back({{"degree", d.degree}, {"fiber_size", d.fiber_size}, {"count", d.count},
                      {"witnesses", d.witnesses}});
  }
  return {{"degree_bound", mu.degree_bound}, {"total", mu.total}, {"by_degree", levels}};
}

MuSummary mu_from(const json& j) {
  MuSummary mu;
  mu.degree_bound = j.at("degree_bound").get<Int>();
  mu.total = j.at("total").get<std::size_t>();
  for (const auto& d : j.at("by_degree")) {
    mu.by_degree.push_back(DegreeSummary{d.at("degree").get<Int>(), d.at("fiber_size").get<std::size_t>(),
                                         d.at("count").get<std::size_t>(),
                                         d.at("witnesses").get<std::vector<std::string>>()});
  }
  return mu;
}

json theorem_json(const TheoremSummary& t) {
  json j = {{"n", t.n},
            {"condition3", t.condition3},
            {"witnesses", t.witnesses},
            {"expected_ells", t.expected_ells},
            {"column_positivity", t.column_positivity},
            {"contrapositive_checked", t.contrapositive_checked},
            {"cyclic_candidates", t.cyclic_candidates},
            {"cyclic_equalities", t.cyclic_equalities},
            {"consistent", t.consistent}};
  if (t.assertions) {
    j["assertions"] = {{"a", t.assertions->a}, {"b", t.assertions->b}, {"c", t.assertions->c},
                       {"d", t.assertions->d}};
  } else {
    j["assertions"] = nullptr;
  }
  put_optional(j, "ideal_equal", t.ideal_equal);
  put_optional(j, "colength_agrees", t.colength_agrees);
  put_optional(j, "first_failure", t.first_failure);
  return j;
}

TheoremSummary theorem_from(const json& j) {
  TheoremSummary t;
  t.n = j.at("n").get<std::size_t>();
  t.condition3 = j.at("condition3").get<bool>();
  t.witnesses = j.at("witnesses").get<std::vector<Int>>();
  t.expected_ells = j.at("expected_ells").get<std::vector<Int>>();
  t.column_positivity = j.at("column_positivity").get<bool>();
  t.contrapositive_checked = j.at("contrapositive_checked").get<bool>();
  t.cyclic_candidates = j.at("cyclic_candidates").get<std::size_t>();
  t.cyclic_equalities = j.at("cyclic_equalities").get<std::size_t>();
  t.consistent = j.at("consistent").get<bool>();
  if (!j.at("assertions").is_null()) {
    const auto& a = j.at("assertions");
    t.assertions = AssertionSummary{a.at("a").get<bool>(), a.at("b").get<bool>(), a.at("c").get<bool>(),
                                    a.at("d").get<bool>()};
  }
  t.ideal_equal = get_optional<bool>(j, "ideal_equal");
  t.colength_agrees = get_optional<bool>(j, "colength_agrees");
  t.first_failure = get_optional<std::string>(j, "first_failure");
  return t;
}

}  // namespace

json to_json(const AnalysisDocument& doc) {
  json j = {{"schema", kAnalysisSchema},
            {"input", doc.input},
            {"generators", doc.generators},
            {"removed", doc.removed},
            {"frobenius", doc.frobenius},
            {"gap_count", doc.gap_count},
            {"pf", doc.pf},
            {"type", doc.type},
            {"almost_symmetric", doc.almost_symmetric},
            {"theorem", theorem_json(doc.theorem)},
            {"mu", mu_json(doc.mu)}};
  if (doc.presentation) {
    const auto& p = *doc.presentation;
    j["presentation"] = {{"alpha", p.alpha}, {"permutation", p.permutation}, {"ells", p.ells},
                         {"top", p.top},     {"bottom", p.bottom},           {"minors", p.minors},
                         {"rf_matrix", p.rf_matrix}};
  } else {
    j["presentation"] = nullptr;
  }
  if (doc.en) {
    const auto& e = *doc.en;
    j["en"] = {{"alpha", e.alpha},
               {"b", e.b},
               {"ranks", e.ranks},
               {"twists", e.twists},
               {"squares_to_zero", e.squares_to_zero},
               {"homogeneous", e.homogeneous},
               {"single_term_entries", e.single_term_entries},
               {"hilbert_ok", e.hilbert_ok},
               {"hilbert_up_to", e.hilbert_up_to},
               {"canonical_degrees", e.canonical_degrees},
               {"euler_characteristic", e.euler_characteristic}};
  } else {
    j["en"] = nullptr;
  }
  return j;
}

AnalysisDocument document_from_json(const json& j) {
  try {
    if (j.at("schema").get<std::string>() != kAnalysisSchema) {
      throw Error(Errc::ParseError, "unsupported schema " + j.at("schema").dump());
    }
    AnalysisDocument doc;
    doc.input = j.at("input").get<std::vector<Int>>();
    doc.generators = j.at("generators").get<std::vector<Int>>();
    doc.removed = j.at("removed").get<std::vector<Int>>();
    doc.frobenius = j.at("frobenius").get<Int>();
    doc.gap_count = j.at("gap_count").get<std::size_t>();
    doc.pf = j.at("pf").get<std::vector<Int>>();
    doc.type = j.at("type").get<std::size_t>();
    doc.almost_symmetric = j.at("almost_symmetric").get<bool>();
    doc.theorem = theorem_from(j.at("theorem"));
    doc.mu = mu_from(j.at("mu"));
    if (!j.at("presentation").is_null()) {
      const auto& p = j.at("presentation");
      doc.presentation = PresentationSummary{
          p.at("alpha").get<Int>(),
          p.at("permutation").get<std::vector<std::size_t>>(),
          p.at("ells").get<std::vector<Int>>(),
          p.at("top").get<std::vector<std::string>>(),
          p.at("bottom").get<std::vector<std::string>>(),
          p.at("minors").get<std::vector<std::string>>(),
          p.at("rf_matrix").get<std::vector<std::vector<Int>>>()};
    }
    if (!j.at("en").is_null()) {
      const auto& e = j.at("en");
      ENSummary s;
      s.alpha = e.at("alpha").get<Int>();
      s.b = e.at("b").get<Int>();
      s.ranks = e.at("ranks").get<std::vector<std::size_t>>();
      s.twists = e.at("twists").get<std::vector<std::vector<Int>>>();
      s.squares_to_zero = e.at("squares_to_zero").get<bool>();
      s.homogeneous = e.at("homogeneous").get<bool>();
      s.single_term_entries = e.at("single_term_entries").get<bool>();
      s.hilbert_ok = e.at("hilbert_ok").get<bool>();
      s.hilbert_up_to = e.at("hilbert_up_to").get<Int>();
      s.canonical_degrees = e.at("canonical_degrees").get<std::vector<Int>>();
      s.euler_characteristic = e.at("euler_characteristic").get<Int>();
      doc.en = std::move(s);
    }
    return doc;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, std::string("malformed analysis document: ") + e.what());
  }
}

namespace {

std::string list(const std::vector<Int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v[i]);
  }
  return out + "}";
}

std::string row(const std::vector<std::string>& cells) {
  std::string out = "(";
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ", ";
    out += cells[i];
  }
  return out + ")";
}

const char* yes(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string render_text(const AnalysisDocument& doc) {
  std::ostringstream out;
  out << "H = <";
  for (std::size_t i = 0; i < doc.generators.size(); ++i) out << (i ? ", " : "") << doc.generators[i];
  out << ">\n";
  if (!doc.removed.empty()) out << "  redundant input generators removed: " << list(doc.removed) << '\n';
  out << "  Frobenius number f(H)      " << doc.frobenius << '\n'
      << "  gaps                       " << doc.gap_count << '\n'
      << "  PF(H)                      " << list(doc.pf) << '\n'
      << "  type r(R)                  " << doc.type << '\n'
      << "  almost symmetric           " << yes(doc.almost_symmetric) << '\n'
      << "  mu_S(I)                    " << doc.mu.total << "  (degree bound " << doc.mu.degree_bound << ")\n";
  for (const auto& d : doc.mu.by_degree) {
    out << "    degree " << d.degree << ": " << d.count << " of fiber " << d.fiber_size << "  ";
    for (std::size_t i = 0; i < d.witnesses.size(); ++i) out << (i ? ", " : "") << d.witnesses[i];
    out << '\n';
  }
  const auto& t = doc.theorem;
  out << "  condition (3)              " << yes(t.condition3);
  if (t.condition3) out << "  alpha in " << list(t.witnesses);
  out << '\n';
  if (t.assertions) {
    out << "  assertions (a) (b) (c) (d) " << yes(t.assertions->a) << ' ' << yes(t.assertions->b) << ' '
        << yes(t.assertions->c) << ' ' << yes(t.assertions->d) << '\n';
  }
  if (doc.presentation) {
    const auto& p = *doc.presentation;
    out << "  presentation  top    " << row(p.top) << '\n'
        << "                bottom " << row(p.bottom) << '\n'
        << "  ells " << list(p.ells) << "   I = I_2: " << yes(t.ideal_equal.value_or(false)) << '\n';
  }
  if (t.contrapositive_checked) {
    out << "  cyclic RF presentations tried: " << t.cyclic_candidates
        << ", equal to I: " << t.cyclic_equalities << '\n';
  }
  if (doc.en) {
    const auto& e = *doc.en;
    out << "  Eagon-Northcott  ranks ";
    for (std::size_t i = 0; i < e.ranks.size(); ++i) out << (i ? " " : "") << e.ranks[i];
    out << "  b = " << e.b << "  d^2 = 0: " << yes(e.squares_to_zero) << "  Hilbert <= " << e.hilbert_up_to
        << ": " << yes(e.hilbert_ok) << '\n'
        << "  canonical module degrees   " << list(e.canonical_degrees) << '\n';
  }
  out << "  theorem consistent         " << yes(t.consistent) << '\n';
  return out.str();
}

}  // namespace sgf
