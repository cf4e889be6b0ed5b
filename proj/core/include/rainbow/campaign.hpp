#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/hypothesis.hpp"
#include "rainbow/solver.hpp"

namespace rainbow {

enum class CampaignMode { exhaustive, sampled };

const char* to_string(CampaignMode m);

struct CampaignOptions {
  TheoremId theorem = TheoremId::rainbow_size;
  int n = 4;
  CampaignMode mode = CampaignMode::sampled;
  std::uint64_t seed = 1;
  /// Families to test in sampled mode; ignored when exhaustive.
  long long samples = 10'000;
  long long node_budget = kDefaultNodeBudget;
  int threads = 1;
  /// Exhaustive runs refuse to start above this many families.
  long long exhaustive_cap = 2'000'000;
  /// Share of families also decided by brute_force_oracle (n <= 7 only).
  double oracle_fraction = 0.01;
  /// Where counterexample certificates are written; empty disables.
  std::filesystem::path certificate_dir;
};

struct Violation {
  long long index = 0;
  std::string reason;
  /// The family in the text family format.
  std::string family;
  std::string certificate_path;
};

/// Fixed family evaluated before the campaign proper.
struct Probe {
  std::string name;
  std::string expected;
  std::string observed;
  bool ok = false;
};

struct CampaignReport {
  std::string theorem;
  int n = 0;
  CampaignMode mode = CampaignMode::sampled;
  std::uint64_t seed = 0;
  long long samples = 0;
  long long families_tested = 0;
  /// Sampled graphs discarded by the post-hoc hypothesis check.
  long long hypothesis_rejections = 0;
  long long conclusion_holds = 0;
  /// Exceptional families confirmed to have no rainbow Hamiltonian cycle.
  long long exceptional_confirmed = 0;
  /// Search only: all-equal G* families drawn and excluded.
  long long excluded_exceptional = 0;
  /// Search only: n = 5 all-equal K2 v 3K1 families.
  long long boundary_cases = 0;
  long long pipeline_certificates = 0;
  long long pipeline_failures = 0;
  std::vector<std::string> pipeline_failure_details;
  std::vector<Violation> violations;
  long long budget_exhaustions = 0;
  long long oracle_checks = 0;
  long long oracle_disagreements = 0;
  std::map<std::string, long long> branch_counters;
  std::vector<Probe> probes;
  bool halted = false;
  double wall_time_ms = 0.0;

  bool probes_ok() const;
  /// No violation, failed probe, pipeline failure or oracle disagreement.
  bool clean() const;
};

/// Runs the theorem's conclusion over every enumerated or sampled family
/// that satisfies its hypothesis: the exact solver must find a rainbow
/// Hamiltonian cycle except on the theorem's exceptional family, where it
/// must find none; the constructive pipeline must produce a validating
/// certificate. Halts at the first violation and writes its certificate.
/// Reports are identical for any thread count.
CampaignReport verify_theorem(const CampaignOptions& options);

struct SearchOptions {
  int n = 6;
  std::uint64_t seed = 1;
  long long samples = 10'000;
  long long node_budget = kDefaultNodeBudget;
  int threads = 1;
  double oracle_fraction = 0.01;
  std::filesystem::path certificate_dir;
};

/// Families with every e(G_i) >= C(n-1,2)+1, all-equal G* excluded; any
/// family without a rainbow Hamiltonian cycle is reported as a
/// counterexample. n >= 5; n = 5 flags all-equal K2 v 3K1 as a boundary case.
CampaignReport search_open_size_problem(const SearchOptions& options);

/// The family a sampled campaign tests at `index` (hypothesis satisfied).
GraphFamily sample_theorem_family(TheoremId theorem, int n, std::uint64_t seed, long long index);
GraphFamily sample_search_family(int n, std::uint64_t seed, long long index);

struct CounterexampleCheck {
  bool hypothesis_holds = false;
  bool exceptional = false;
  SolveStatus status = SolveStatus::none;
  long long nodes = 0;
  /// Hypothesis holds, not exceptional, and still no cycle.
  bool confirmed = false;
};

/// Re-checks a certificate with ten times the node budget. `theorem` empty
/// means the open-problem search hypothesis.
CounterexampleCheck verify_counterexample(const GraphFamily& family, std::optional<TheoremId> theorem,
                                          long long node_budget = kDefaultNodeBudget);

enum class ReportFormat { json, csv };

std::string report_json(const CampaignReport& report, bool include_wall_time = true);
std::string report_csv(const CampaignReport& report, bool include_wall_time = true);
void write_report(const CampaignReport& report, const std::filesystem::path& path, ReportFormat format);

}  // namespace rainbow
