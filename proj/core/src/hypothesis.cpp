#include "rainbow/hypothesis.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "rainbow/spectral.hpp"

namespace rainbow {

namespace {

struct TheoremInfo {
  TheoremId id;
  const char* name;
  bool family;
  int min_order;
};

constexpr std::array<TheoremInfo, 7> kTheorems{{
    {TheoremId::ore_size, "ore-size", false, 3},
    {TheoremId::bondy, "bondy", false, 3},
    {TheoremId::fiedler_nikiforov, "fiedler-nikiforov", false, 3},
    {TheoremId::rainbow_size, "rainbow-size", true, 4},
    {TheoremId::rainbow_spectral, "rainbow-spectral", true, 4},
    {TheoremId::rainbow_signless, "rainbow-signless", true, 6},
    {TheoremId::rainbow_extremal, "rainbow-extremal", true, 4},
}};

const TheoremInfo& info(TheoremId id) {
  for (const auto& t : kTheorems) {
    if (t.id == id) return t;
  }
  throw std::invalid_argument("unknown theorem id");
}

GraphCheck size_check(const Graph& g, int index, bool strict) {
  const int n = g.order();
  GraphCheck c;
  c.index = index;
  c.quantity = "e";
  c.measured = g.edge_count();
  c.threshold = extremal_size(n);
  c.relation = strict ? ">" : ">=";
  c.pass = strict ? g.edge_count() > c.threshold : g.edge_count() >= c.threshold;
  return c;
}

GraphCheck spectral_check(const Graph& g, int index, SpectralMatrix kind) {
  const int n = g.order();
  GraphCheck c;
  c.index = index;
  c.quantity = kind == SpectralMatrix::adjacency ? "rho" : "rho_S";
  c.threshold = kind == SpectralMatrix::adjacency ? n - 2 : 2LL * n - 4;
  c.relation = ">";
  const auto d = compare_largest_eigenvalue(g, c.threshold, kind);
  c.measured = d.estimate.value;
  c.pass = d.result == Comparison::above;
  c.borderline = d.borderline;
  return c;
}

GraphCheck extremal_check(const Graph& g, int index) {
  GraphCheck c;
  c.index = index;
  c.quantity = "iso-G*";
  c.relation = ">=";
  c.threshold = 1;
  c.pass = is_isomorphic_to_extremal(g);
  c.measured = c.pass ? 1.0 : 0.0;
  return c;
}

void finish(HypothesisReport& r) {
  r.verdict = !r.checks.empty();
  for (const auto& c : r.checks) r.verdict = r.verdict && c.pass;
}

}  // namespace

const char* to_string(TheoremId id) { return info(id).name; }

std::optional<TheoremId> parse_theorem(std::string_view name) {
  for (const auto& t : kTheorems) {
    if (name == t.name) return t.id;
  }
  return std::nullopt;
}

bool is_family_theorem(TheoremId id) { return info(id).family; }

int minimum_order(TheoremId id) { return info(id).min_order; }

bool HypothesisReport::any_borderline() const {
  for (const auto& c : checks) {
    if (c.borderline) return true;
  }
  return false;
}

bool is_all_equal_extremal(const GraphFamily& family) {
  return family.all_equal() && is_isomorphic_to_extremal(family.member(1));
}

HypothesisReport check_hypothesis(const Graph& g, TheoremId theorem) {
  if (is_family_theorem(theorem)) {
    throw std::invalid_argument(std::string(to_string(theorem)) + " is stated for graph families");
  }
  HypothesisReport r;
  r.theorem = theorem;
  r.n = g.order();
  switch (theorem) {
    case TheoremId::ore_size:
      r.checks.push_back(size_check(g, 1, true));
      break;
    case TheoremId::bondy:
      r.checks.push_back(size_check(g, 1, false));
      if (is_isomorphic_to_extremal(g)) {
        r.exceptional = true;
        r.exception = "K1 v (K_{n-2} u K1)";
      } else if (g.order() == 5 && is_isomorphic(g, k2_join_3k1())) {
        r.exceptional = true;
        r.exception = "K2 v 3K1";
      }
      break;
    case TheoremId::fiedler_nikiforov:
      r.checks.push_back(spectral_check(g, 1, SpectralMatrix::adjacency));
      if (g.order() >= 3 && is_isomorphic_to_extremal(g)) {
        r.exceptional = true;
        r.exception = "K1 v (K_{n-2} u K1)";
      }
      break;
    default:
      break;
  }
  finish(r);
  return r;
}

HypothesisReport check_hypothesis(const GraphFamily& family, TheoremId theorem) {
  if (!is_family_theorem(theorem)) {
    throw std::invalid_argument(std::string(to_string(theorem)) + " is stated for a single graph");
  }
  const int n = family.order();
  if (n < minimum_order(theorem)) {
    throw std::invalid_argument(std::string(to_string(theorem)) + " needs n >= " +
                                std::to_string(minimum_order(theorem)) + ", got n=" + std::to_string(n));
  }
  HypothesisReport r;
  r.theorem = theorem;
  r.n = n;
  for (int c = 1; c <= n; ++c) {
    const Graph& g = family.member(c);
    switch (theorem) {
      case TheoremId::rainbow_size: r.checks.push_back(size_check(g, c, true)); break;
      case TheoremId::rainbow_spectral: r.checks.push_back(spectral_check(g, c, SpectralMatrix::adjacency)); break;
      case TheoremId::rainbow_signless:
        r.checks.push_back(spectral_check(g, c, SpectralMatrix::signless_laplacian));
        break;
      case TheoremId::rainbow_extremal: r.checks.push_back(extremal_check(g, c)); break;
      default: break;
    }
  }
  if (theorem != TheoremId::rainbow_size && is_all_equal_extremal(family)) {
    r.exceptional = true;
    r.exception = "G_1 = ... = G_n isomorphic to K1 v (K_{n-2} u K1)";
  }
  finish(r);
  return r;
}

std::string format_hypothesis_report(const HypothesisReport& report) {
  std::ostringstream os;
  os << "theorem " << to_string(report.theorem) << ", n=" << report.n << "\n";
  for (const auto& c : report.checks) {
    os << "  graph " << c.index << ": " << c.quantity << " = " << c.measured << " " << c.relation << " "
       << c.threshold << " -> " << (c.pass ? "pass" : "fail") << (c.borderline ? " (borderline, exact)" : "") << "\n";
  }
  os << "hypothesis: " << (report.verdict ? "holds" : "fails") << "\n";
  if (report.exceptional) os << "exceptional: " << report.exception << "\n";
  return os.str();
}

std::string hypothesis_report_json(const HypothesisReport& report) {
  nlohmann::ordered_json doc;
  doc["theorem"] = to_string(report.theorem);
  doc["n"] = report.n;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json j;
    j["index"] = c.index;
    j["quantity"] = c.quantity;
    j["measured"] = c.measured;
    j["relation"] = c.relation;
    j["threshold"] = c.threshold;
    j["pass"] = c.pass;
    j["borderline"] = c.borderline;
    doc["checks"].push_back(std::move(j));
  }
  doc["verdict"] = report.verdict;
  doc["exceptional"] = report.exceptional;
  doc["exception"] = report.exception;
  return doc.dump(2) + "\n";
}

}  // namespace rainbow
