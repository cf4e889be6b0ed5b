#include <cmath>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rainbow/campaign.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/family_io.hpp"
#include "rainbow/hypothesis.hpp"
#include "rainbow/kelmans.hpp"
#include "rainbow/lifting.hpp"
#include "rainbow/solver.hpp"
#include "rainbow/spectral.hpp"

namespace {

using namespace rainbow;
using nlohmann::ordered_json;

enum Exit { ok = 0, usage = 1, violation = 2, budget = 3 };

struct Common {
  std::string family_path;
  int n = 6;
  std::uint64_t seed = 1;
  long long samples = 10'000;
  long long budget = kDefaultNodeBudget;
  std::string mode = "sampled";
  std::string format = "text";
  std::string out;
  int threads = 1;
};

bool json_out(const Common& c) { return c.format == "json"; }

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(c.out, text);
  }
}

ordered_json cycle_json(const RainbowCycle& cycle) {
  return ordered_json{{"vertices", cycle.vertices}, {"colors", cycle.colors}};
}

std::string family_block(const GraphFamily& f) { return format_family(f, FamilyFormat::text); }

int cmd_solve(const Common& c) {
  const auto family = read_family(c.family_path);
  const auto r = find_rainbow_hamiltonian_cycle(family, c.budget);
  if (json_out(c)) {
    ordered_json j{{"status", to_string(r.status)}, {"nodes", r.nodes}};
    if (r.cycle) j["cycle"] = cycle_json(*r.cycle);
    emit(c, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "status: " << to_string(r.status) << "\nnodes: " << r.nodes << "\n";
    if (r.cycle) os << "cycle: " << to_string(*r.cycle) << "\n";
    emit(c, os.str());
  }
  return r.status == SolveStatus::budget_exceeded ? budget : ok;
}

int cmd_kelmans(const Common& c) {
  const auto family = read_family(c.family_path);
  const auto [fixed, transcript] = kelmans_family(family);
  if (json_out(c)) {
    ordered_json steps = ordered_json::array();
    for (const auto& s : transcript.steps) steps.push_back({{"x", s.x}, {"y", s.y}, {"hash", s.snapshot_before}});
    ordered_json j{{"passes", transcript.passes}, {"steps", steps},
                   {"family", ordered_json::parse(format_family(fixed, FamilyFormat::json))}};
    emit(c, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "passes: " << transcript.passes << "\nsteps:";
    for (const auto& s : transcript.steps) os << " (" << s.x << "," << s.y << ")";
    os << "\n\n" << family_block(fixed);
    emit(c, os.str());
  }
  return ok;
}

int cmd_lift(const Common& c, const std::string& cycle_arg) {
  const auto family = read_family(c.family_path);
  const auto [fixed, transcript] = kelmans_family(family);
  RainbowCycle top;
  if (!cycle_arg.empty()) {
    const bool inline_json = cycle_arg.find('{') != std::string::npos;
    top = parse_cycle_json(inline_json ? cycle_arg : read_text_file(cycle_arg));
  } else {
    const auto r = find_rainbow_hamiltonian_cycle(fixed, c.budget);
    if (r.status == SolveStatus::budget_exceeded) {
      std::cerr << "solver budget exhausted on the transformed family\n";
      return budget;
    }
    if (!r.cycle) {
      emit(c, json_out(c) ? "{\"lifted\": null}\n" : "transformed family has no rainbow Hamiltonian cycle\n");
      return ok;
    }
    top = *r.cycle;
  }
  const auto lifted = lift_full(family, transcript, top);
  if (json_out(c)) {
    emit(c, ordered_json{{"transformed", cycle_json(top)}, {"lifted", cycle_json(lifted)}}.dump(2) + "\n");
  } else {
    emit(c, "transformed: " + to_string(top) + "\nlifted: " + to_string(lifted) + "\n");
  }
  return ok;
}

int cmd_spectral(const Common& c, bool audit, bool psi) {
  std::ostringstream os;
  ordered_json j = ordered_json::object();
  os << std::setprecision(12);
  if (psi) {
    const auto s = quotient_polynomial_signs(c.n);
    j["psi"] = {{"n", c.n}, {"value_n_minus_2", s.value_n_minus_2}, {"value_n_minus_3", s.value_n_minus_3}};
    os << "psi_" << c.n << "(n-2) = " << s.value_n_minus_2 << "\npsi_" << c.n << "(n-3) = " << s.value_n_minus_3
       << "\n";
  }
  bool audit_clean = true;
  if (audit) {
    const auto a = subgraph_radius_audit(c.n);
    audit_clean = a.clean();
    ordered_json eq = ordered_json::array();
    for (const auto& e : a.equality_cases) eq.push_back(e.description);
    j["audit"] = {{"n", a.n},
                  {"audited", a.audited},
                  {"violations", a.violations},
                  {"unexpected_equalities", a.unexpected_equalities},
                  {"max_radius", a.max_radius},
                  {"equality_cases", eq}};
    os << "audit n=" << a.n << ": " << a.audited << " subgraphs, " << a.violations << " violations, "
       << a.unexpected_equalities << " unexpected equalities, max rho " << a.max_radius << "\n";
    for (const auto& e : a.equality_cases) os << "  equality: " << e.description << "\n";
  }
  if (!c.family_path.empty()) {
    const auto family = read_family(c.family_path);
    ordered_json members = ordered_json::array();
    for (int i = 1; i <= family.size(); ++i) {
      const auto rho = spectral_radius(family.member(i));
      const auto rho_s = signless_laplacian_radius(family.member(i));
      members.push_back({{"graph", i}, {"rho", rho.value}, {"rho_S", rho_s.value}, {"tolerance", rho.tolerance}});
      os << "graph " << i << ": rho = " << rho.value << ", rho_S = " << rho_s.value << "\n";
    }
    j["graphs"] = members;
  }
  emit(c, json_out(c) ? j.dump(2) + "\n" : os.str());
  return audit_clean ? ok : violation;
}

int cmd_construct(const Common& c, const std::string& method) {
  const auto family = read_family(c.family_path);
  std::optional<RainbowCycle> cycle;
  std::string detail;
  if (method == "size") {
    cycle = construct_cycle_size_condition(family);
    detail = "schedule-lift";
  } else if (method == "extremal") {
    const auto r = construct_cycle_extremal_detailed(family);
    cycle = r.cycle;
    detail = to_string(r.branch);
  } else {
    const auto r = construct_cycle(family);
    cycle = r.cycle;
    detail = to_string(r.route);
  }
  if (json_out(c)) {
    ordered_json j{{"method", method}, {"detail", detail}};
    j["cycle"] = cycle ? cycle_json(*cycle) : ordered_json(nullptr);
    emit(c, j.dump(2) + "\n");
  } else {
    emit(c, "method: " + method + " (" + detail + ")\ncycle: " + (cycle ? to_string(*cycle) : "none") + "\n");
  }
  return ok;
}

int cmd_check(const Common& c, const std::string& theorem_name) {
  const auto theorem = parse_theorem(theorem_name);
  if (!theorem) throw CLI::ValidationError("--theorem", "unknown theorem " + theorem_name);
  const auto family = read_family(c.family_path);
  std::vector<HypothesisReport> reports;
  if (is_family_theorem(*theorem)) {
    reports.push_back(check_hypothesis(family, *theorem));
  } else {
    for (const auto& g : family.graphs()) reports.push_back(check_hypothesis(g, *theorem));
  }
  std::string text;
  for (const auto& r : reports) text += json_out(c) ? hypothesis_report_json(r) : format_hypothesis_report(r);
  emit(c, text);
  return ok;
}

int campaign_exit(const CampaignReport& r) {
  if (!r.clean()) return violation;
  return r.budget_exhaustions > 0 ? budget : ok;
}

void emit_report(const Common& c, const CampaignReport& r) {
  if (c.format == "csv") {
    emit(c, report_csv(r));
  } else if (json_out(c)) {
    emit(c, report_json(r));
  } else {
    std::ostringstream os;
    os << r.theorem << " n=" << r.n << " " << to_string(r.mode) << " seed=" << r.seed << "\n"
       << "families tested: " << r.families_tested << "\n"
       << "conclusion holds: " << r.conclusion_holds << "\n"
       << "exceptional confirmed: " << r.exceptional_confirmed << "\n";
    if (r.theorem == "open-size-problem") {
      os << "excluded all-equal G*: " << r.excluded_exceptional << "\nboundary cases: " << r.boundary_cases << "\n";
    }
    os << "pipeline certificates: " << r.pipeline_certificates << " (failures " << r.pipeline_failures << ")\n"
       << "violations: " << r.violations.size() << "\n"
       << "budget exhaustions: " << r.budget_exhaustions << "\n"
       << "oracle checks: " << r.oracle_checks << " (disagreements " << r.oracle_disagreements << ")\n";
    for (const auto& [k, v] : r.branch_counters) os << "  " << k << ": " << v << "\n";
    for (const auto& p : r.probes) os << "probe " << p.name << ": " << p.observed << (p.ok ? "" : " [FAILED]") << "\n";
    for (const auto& v : r.violations) {
      os << "violation at family " << v.index << ": " << v.reason << "\n";
      if (!v.certificate_path.empty()) os << "  certificate: " << v.certificate_path << "\n";
    }
    os << "wall time: " << r.wall_time_ms << " ms\n";
    emit(c, os.str());
  }
}

int cmd_verify(const Common& c, const std::string& theorem_name, const std::string& certificates) {
  const auto theorem = parse_theorem(theorem_name);
  if (!theorem) throw CLI::ValidationError("--theorem", "unknown theorem " + theorem_name);
  CampaignOptions o;
  o.theorem = *theorem;
  o.n = c.n;
  o.mode = c.mode == "exhaustive" ? CampaignMode::exhaustive : CampaignMode::sampled;
  o.seed = c.seed;
  o.samples = c.samples;
  o.node_budget = c.budget;
  o.threads = c.threads;
  o.certificate_dir = certificates;
  const auto r = verify_theorem(o);
  emit_report(c, r);
  return campaign_exit(r);
}

int cmd_search(const Common& c, const std::string& certificates) {
  SearchOptions o;
  o.n = c.n;
  o.seed = c.seed;
  o.samples = c.samples;
  o.node_budget = c.budget;
  o.threads = c.threads;
  o.certificate_dir = certificates;
  const auto r = search_open_size_problem(o);
  emit_report(c, r);
  return campaign_exit(r);
}

int cmd_recheck(const Common& c, const std::string& theorem_name) {
  std::optional<TheoremId> theorem;
  if (!theorem_name.empty()) {
    theorem = parse_theorem(theorem_name);
    if (!theorem) throw CLI::ValidationError("--theorem", "unknown theorem " + theorem_name);
  }
  const auto family = read_family(c.family_path);
  const auto r = verify_counterexample(family, theorem, c.budget);
  std::ostringstream os;
  os << "hypothesis holds: " << (r.hypothesis_holds ? "yes" : "no") << "\nexceptional: " << (r.exceptional ? "yes" : "no")
     << "\nsolver (10x budget): " << to_string(r.status) << " after " << r.nodes << " nodes\nconfirmed: "
     << (r.confirmed ? "yes" : "no") << "\n";
  emit(c, os.str());
  if (r.confirmed) return violation;
  return r.status == SolveStatus::budget_exceeded ? budget : ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow Hamiltonian cycles in graph families"};
  app.require_subcommand(1);
  Common c;

  auto add_output = [&](CLI::App* sub, std::vector<std::string> formats = {"text", "json"}) {
    sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember(formats));
    sub->add_option("--out", c.out, "Write output to this path");
  };
  auto add_family = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("family", c.family_path, "Family file (text or JSON format)");
    if (required) opt->required();
  };
  auto add_campaign = [&](CLI::App* sub) {
    sub->add_option("--n", c.n, "Number of vertices and graphs")->check(CLI::Range(4, kMaxVertices));
    sub->add_option("--seed", c.seed, "Sampling seed");
    sub->add_option("--samples", c.samples, "Sampled families")->check(CLI::PositiveNumber);
    sub->add_option("--budget", c.budget, "Solver node budget per family")->check(CLI::PositiveNumber);
    sub->add_option("--threads", c.threads, "Worker threads")->check(CLI::Range(1, 256));
    add_output(sub, {"text", "json", "csv"});
  };

  auto* solve = app.add_subcommand("solve", "Exact rainbow Hamiltonian cycle search");
  add_family(solve);
  solve->add_option("--budget", c.budget, "Solver node budget")->check(CLI::PositiveNumber);
  add_output(solve);

  auto* kelmans = app.add_subcommand("kelmans", "Kelmans fixpoint of a family with its transcript");
  add_family(kelmans);
  add_output(kelmans);

  std::string cycle_arg;
  auto* lift = app.add_subcommand("lift", "Lift a cycle of the Kelmans family back to the family");
  add_family(lift);
  lift->add_option("--cycle", cycle_arg, "Cycle of the transformed family: JSON text or a JSON file");
  lift->add_option("--budget", c.budget, "Solver node budget when --cycle is absent")->check(CLI::PositiveNumber);
  add_output(lift);

  bool audit = false;
  bool psi = false;
  auto* spectral = app.add_subcommand("spectral", "Spectral radii, subgraph audit, quotient polynomial signs");
  add_family(spectral, false);
  spectral->add_flag("--audit", audit, "Audit proper subgraphs of G* (4 <= n <= 8)");
  spectral->add_flag("--psi", psi, "Signs of the quotient polynomial at n-2 and n-3 (n >= 5)");
  spectral->add_option("--n", c.n, "Order for --audit / --psi")->check(CLI::Range(4, 10'000));
  add_output(spectral);

  std::string method = "auto";
  auto* construct = app.add_subcommand("construct", "Constructive certificate");
  add_family(construct);
  construct->add_option("--method", method, "size, extremal or auto")
      ->check(CLI::IsMember({"size", "extremal", "auto"}));
  add_output(construct);

  std::string theorem;
  auto* check = app.add_subcommand("check", "Hypothesis report for a theorem");
  add_family(check);
  check->add_option("--theorem", theorem, "Theorem id")->required();
  add_output(check);

  std::string certificates;
  auto* verify = app.add_subcommand("verify", "Exhaustive or sampled theorem campaign");
  verify->add_option("--theorem", theorem, "Family theorem id")->required();
  verify->add_option("--mode", c.mode, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
  verify->add_option("--certificates", certificates, "Directory for counterexample certificates");
  add_campaign(verify);

  auto* search = app.add_subcommand("search", "Counterexample search for the open size problem");
  search->add_option("--certificates", certificates, "Directory for counterexample certificates");
  add_campaign(search);

  auto* recheck = app.add_subcommand("recheck", "Re-verify a counterexample certificate with 10x budget");
  add_family(recheck);
  recheck->add_option("--theorem", theorem, "Theorem id; omit for the open size problem");
  recheck->add_option("--budget", c.budget, "Base node budget")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    if (*solve) return cmd_solve(c);
    if (*kelmans) return cmd_kelmans(c);
    if (*lift) return cmd_lift(c, cycle_arg);
    if (*spectral) return cmd_spectral(c, audit, psi);
    if (*construct) return cmd_construct(c, method);
    if (*check) return cmd_check(c, theorem);
    if (*verify) return cmd_verify(c, theorem, certificates);
    if (*search) return cmd_search(c, certificates);
    if (*recheck) return cmd_recheck(c, theorem);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return usage;
  } catch (const FamilyFormatError& e) {
    std::cerr << "malformed family: " << e.what() << "\n";
    return usage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return budget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return violation;
  }
  return usage;
}
