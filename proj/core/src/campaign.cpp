#include "rainbow/campaign.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <climits>
#include <exception>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/family_io.hpp"
#include "rainbow/lifting.hpp"
#include "rainbow/sampling.hpp"
#include "rainbow/spectral.hpp"

namespace rainbow {

const char* to_string(CampaignMode m) { return m == CampaignMode::exhaustive ? "exhaustive" : "sampled"; }

bool CampaignReport::probes_ok() const {
  return std::all_of(probes.begin(), probes.end(), [](const Probe& p) { return p.ok; });
}

bool CampaignReport::clean() const {
  return violations.empty() && probes_ok() && pipeline_failures == 0 && oracle_disagreements == 0;
}

namespace {

enum class Kind { skipped, holds, exceptional, excluded, boundary, violation, budget };
enum class Pipeline { not_run, certificate, no_route, failure };

struct Outcome {
  Kind kind = Kind::skipped;
  std::string reason;
  std::string family_text;
  std::vector<std::string> counters;
  Pipeline pipeline = Pipeline::not_run;
  std::string pipeline_detail;
  bool oracle_checked = false;
  bool oracle_disagree = false;
  long long rejections = 0;
};

constexpr long long kRejectionLimit = 1'000'000;

bool oracle_pick(std::uint64_t seed, long long index, double fraction) {
  if (fraction <= 0.0) return false;
  if (fraction >= 1.0) return true;
  auto rng = stream_rng(seed ^ 0x0a2c1e5ULL, static_cast<std::uint64_t>(index));
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < fraction;
}

void cross_check(const GraphFamily& f, const SolveResult& solved, bool oracle, Outcome& o) {
  if (!oracle || f.order() > 7 || solved.status == SolveStatus::budget_exceeded) return;
  o.oracle_checked = true;
  o.oracle_disagree = brute_force_oracle(f).has_value() != (solved.status == SolveStatus::found);
}

void run_pipeline(const GraphFamily& f, TheoremId t, bool exceptional, Outcome& o) {
  try {
    if (t == TheoremId::rainbow_size) {
      construct_cycle_size_condition_detailed(f);
      o.counters.emplace_back("route:schedule-lift");
      o.pipeline = Pipeline::certificate;
      return;
    }
    if (t == TheoremId::rainbow_extremal) {
      const auto r = construct_cycle_extremal_detailed(f);
      o.counters.push_back(std::string("branch:") + to_string(r.branch));
      if (exceptional == r.cycle.has_value()) {
        o.pipeline = Pipeline::failure;
        o.pipeline_detail = exceptional ? "certificate for an all-equal family" : "no certificate";
      } else {
        o.pipeline = r.cycle ? Pipeline::certificate : Pipeline::no_route;
      }
      return;
    }
    const auto r = construct_cycle(f);
    o.counters.push_back(std::string("route:") + to_string(r.route));
    if (r.branch) o.counters.push_back(std::string("branch:") + to_string(*r.branch));
    if (r.cycle && exceptional) {
      o.pipeline = Pipeline::failure;
      o.pipeline_detail = "certificate for the exceptional family";
    } else {
      o.pipeline = r.cycle ? Pipeline::certificate : Pipeline::no_route;
    }
  } catch (const std::exception& e) {
    o.pipeline = Pipeline::failure;
    o.pipeline_detail = e.what();
  }
}

Outcome evaluate_theorem_family(const GraphFamily& f, TheoremId t, long long budget, bool oracle) {
  Outcome o;
  const auto hyp = check_hypothesis(f, t);
  if (!hyp.verdict) return o;
  const auto solved = find_rainbow_hamiltonian_cycle(f, budget);
  cross_check(f, solved, oracle, o);
  run_pipeline(f, t, hyp.exceptional, o);
  if (solved.status == SolveStatus::budget_exceeded) {
    o.kind = Kind::budget;
    return o;
  }
  const bool found = solved.status == SolveStatus::found;
  if (hyp.exceptional && found) {
    o.kind = Kind::violation;
    o.reason = "exceptional family admits the rainbow Hamiltonian cycle " + to_string(*solved.cycle);
  } else if (!hyp.exceptional && !found) {
    o.kind = Kind::violation;
    o.reason = "hypothesis holds but no rainbow Hamiltonian cycle exists";
  } else {
    o.kind = hyp.exceptional ? Kind::exceptional : Kind::holds;
  }
  if (o.kind == Kind::violation) o.family_text = format_family(f, FamilyFormat::text);
  return o;
}

bool is_all_equal_boundary(const GraphFamily& f) {
  return f.order() == 5 && f.all_equal() && is_isomorphic(f.member(1), k2_join_3k1());
}

Outcome evaluate_search_family(const GraphFamily& f, long long budget, bool oracle) {
  Outcome o;
  if (is_all_equal_extremal(f)) {
    o.kind = Kind::excluded;
    return o;
  }
  for (const auto& g : f.graphs()) {
    if (g.edge_count() < extremal_size(f.order())) return o;
  }
  const auto solved = find_rainbow_hamiltonian_cycle(f, budget);
  cross_check(f, solved, oracle, o);
  if (solved.status == SolveStatus::budget_exceeded) {
    o.kind = Kind::budget;
  } else if (solved.status == SolveStatus::found) {
    o.kind = Kind::holds;
  } else if (is_all_equal_boundary(f)) {
    o.kind = Kind::boundary;
  } else {
    o.kind = Kind::violation;
    o.reason = "no rainbow Hamiltonian cycle and the family is not all-equal G*";
    o.family_text = format_family(f, FamilyFormat::text);
  }
  return o;
}

void merge(CampaignReport& r, long long index, Outcome&& o, const std::filesystem::path& cert_dir) {
  r.hypothesis_rejections += o.rejections;
  for (const auto& c : o.counters) ++r.branch_counters[c];
  if (o.oracle_checked) ++r.oracle_checks;
  if (o.oracle_disagree) ++r.oracle_disagreements;
  if (o.pipeline == Pipeline::certificate) ++r.pipeline_certificates;
  if (o.pipeline == Pipeline::failure) {
    ++r.pipeline_failures;
    if (r.pipeline_failure_details.size() < 10) {
      r.pipeline_failure_details.push_back("family " + std::to_string(index) + ": " + o.pipeline_detail);
    }
  }
  switch (o.kind) {
    case Kind::skipped: ++r.hypothesis_rejections; return;
    case Kind::holds: ++r.conclusion_holds; break;
    case Kind::exceptional: ++r.exceptional_confirmed; break;
    case Kind::excluded: ++r.excluded_exceptional; return;
    case Kind::boundary: ++r.boundary_cases; break;
    case Kind::budget: ++r.budget_exhaustions; break;
    case Kind::violation: {
      Violation v;
      v.index = index;
      v.reason = std::move(o.reason);
      v.family = std::move(o.family_text);
      if (!cert_dir.empty()) {
        std::filesystem::create_directories(cert_dir);
        const auto path = cert_dir / ("counterexample-" + r.theorem + "-n" + std::to_string(r.n) + "-" +
                                      std::to_string(index) + ".txt");
        write_text_file(path, v.family);
        v.certificate_path = path.string();
      }
      r.violations.push_back(std::move(v));
      r.halted = true;
      break;
    }
  }
  ++r.families_tested;
}

// Families are evaluated in chunks; each worker takes a fixed residue class
// of indices and results are merged in index order.
void run_campaign(CampaignReport& r, long long total, int threads, const std::function<Outcome(long long)>& eval,
                  const std::filesystem::path& cert_dir) {
  threads = std::max(1, threads);
  const long long chunk = 64LL * threads;
  std::vector<Outcome> results;
  for (long long start = 0; start < total && !r.halted; start += chunk) {
    const long long end = std::min(total, start + chunk);
    results.assign(static_cast<std::size_t>(end - start), Outcome{});
    if (threads == 1) {
      for (long long i = start; i < end; ++i) results[i - start] = eval(i);
    } else {
      std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
          try {
            for (long long i = start + t; i < end; i += threads) results[i - start] = eval(i);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
      for (auto& th : pool) th.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }
    for (long long i = start; i < end && !r.halted; ++i) merge(r, i, std::move(results[i - start]), cert_dir);
  }
}

Graph random_relabel(const Graph& g, Rng& rng) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabel(perm);
}

Graph sample_hypothesis_graph(TheoremId t, int n, Rng& rng, long long& rejections) {
  const int lo = static_cast<int>(extremal_size(n));
  const int hi = static_cast<int>(binomial2(n));
  if (t == TheoremId::rainbow_size) return random_graph_in_size_range(n, lo + 1, hi, rng);
  const auto kind = t == TheoremId::rainbow_spectral ? SpectralMatrix::adjacency : SpectralMatrix::signless_laplacian;
  const long long threshold = t == TheoremId::rainbow_spectral ? n - 2 : 2LL * n - 4;
  for (long long attempt = 0; attempt < kRejectionLimit; ++attempt) {
    Graph g = random_graph_in_size_range(n, lo, hi, rng);
    if (compare_largest_eigenvalue(g, threshold, kind).result == Comparison::above) return g;
    ++rejections;
  }
  throw std::runtime_error("rejection sampling found no graph satisfying the hypothesis");
}

GraphFamily sample_extremal_family(int n, Rng& rng) {
  std::uniform_int_distribution<int> vertex(1, n);
  std::vector<int> pendant(static_cast<std::size_t>(n));
  switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
    case 0:
      for (auto& p : pendant) p = vertex(rng);
      break;
    case 1: {
      // two pendant vertices with multiplicities m and n - m
      const int a = vertex(rng);
      int b = vertex(rng);
      while (b == a) b = vertex(rng);
      const int m = std::uniform_int_distribution<int>(1, n - 1)(rng);
      for (int i = 0; i < n; ++i) pendant[i] = i < m ? a : b;
      std::shuffle(pendant.begin(), pendant.end(), rng);
      break;
    }
    default:
      std::fill(pendant.begin(), pendant.end(), vertex(rng));
      break;
  }
  std::vector<Graph> graphs;
  for (int p : pendant) {
    int a = vertex(rng);
    while (a == p) a = vertex(rng);
    graphs.push_back(extremal_graph_with(n, p, a));
  }
  return GraphFamily(std::move(graphs));
}

GraphFamily sample_theorem_family_impl(TheoremId t, int n, std::uint64_t seed, long long index, long long& rejections) {
  auto rng = stream_rng(seed, static_cast<std::uint64_t>(index));
  if (t == TheoremId::rainbow_extremal) return sample_extremal_family(n, rng);
  // spectral theorems also draw near-extremal families, mixing in relabelled G*
  const bool near = t != TheoremId::rainbow_size && std::uniform_int_distribution<int>(0, 7)(rng) == 0;
  std::bernoulli_distribution coin(0.5);
  std::vector<Graph> graphs;
  for (int i = 0; i < n; ++i) {
    if (near && coin(rng)) {
      graphs.push_back(random_extremal_graph(n, rng));
    } else {
      graphs.push_back(sample_hypothesis_graph(t, n, rng, rejections));
    }
  }
  return GraphFamily(std::move(graphs));
}

std::vector<Graph> hypothesis_graphs(TheoremId t, int n) {
  std::vector<Graph> out;
  if (t == TheoremId::rainbow_extremal) {
    for (int p = 1; p <= n; ++p) {
      for (int a = 1; a <= n; ++a) {
        if (a != p) out.push_back(extremal_graph_with(n, p, a));
      }
    }
    return out;
  }
  std::vector<Edge> pairs;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  }
  if (pairs.size() > 21) throw std::invalid_argument("exhaustive enumeration needs n <= 7");
  const std::uint64_t limit = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    if (t == TheoremId::rainbow_size && std::popcount(mask) <= extremal_size(n)) continue;
    Graph g(n);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (mask >> k & 1U) g.add_edge(pairs[k].u, pairs[k].v);
    }
    bool ok = true;
    if (t == TheoremId::rainbow_spectral) {
      ok = compare_largest_eigenvalue(g, n - 2, SpectralMatrix::adjacency).result == Comparison::above;
    } else if (t == TheoremId::rainbow_signless) {
      ok = compare_largest_eigenvalue(g, 2LL * n - 4, SpectralMatrix::signless_laplacian).result == Comparison::above;
    }
    if (ok) out.push_back(std::move(g));
  }
  return out;
}

Probe exceptional_probe(TheoremId t, int n, long long budget) {
  Probe p;
  p.name = "all-equal G*";
  const auto family = uniform_family(extremal_graph(n));
  const auto hyp = check_hypothesis(family, t);
  if (t == TheoremId::rainbow_size) {
    p.expected = "hypothesis fails";
    p.observed = hyp.verdict ? "hypothesis holds" : "hypothesis fails";
    p.ok = !hyp.verdict;
    return p;
  }
  const auto solved = find_rainbow_hamiltonian_cycle(family, budget);
  p.expected = "hypothesis holds, exceptional, no rainbow Hamiltonian cycle";
  p.observed = std::string(hyp.verdict ? "hypothesis holds" : "hypothesis fails") +
               (hyp.exceptional ? ", exceptional" : ", not exceptional") + ", solver: " + to_string(solved.status);
  p.ok = hyp.verdict && hyp.exceptional && solved.status == SolveStatus::none;
  return p;
}

long long checked_power(long long base, int exp, long long cap) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && v > cap / base) return -1;
    v *= base;
  }
  return v;
}

}  // namespace

GraphFamily sample_theorem_family(TheoremId theorem, int n, std::uint64_t seed, long long index) {
  long long rejections = 0;
  return sample_theorem_family_impl(theorem, n, seed, index, rejections);
}

CampaignReport verify_theorem(const CampaignOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const TheoremId t = options.theorem;
  const int n = options.n;
  if (!is_family_theorem(t)) throw std::invalid_argument("verify_theorem runs family theorems only");
  if (n < minimum_order(t)) {
    throw std::invalid_argument(std::string(to_string(t)) + " needs n >= " + std::to_string(minimum_order(t)));
  }
  if (n > kMaxVertices) throw std::invalid_argument("n exceeds the supported order");

  CampaignReport r;
  r.theorem = to_string(t);
  r.n = n;
  r.mode = options.mode;
  r.seed = options.seed;
  r.probes.push_back(exceptional_probe(t, n, options.node_budget));

  const auto budget = options.node_budget;
  if (options.mode == CampaignMode::exhaustive) {
    const auto graphs = hypothesis_graphs(t, n);
    const long long count = static_cast<long long>(graphs.size());
    const long long total = checked_power(count, n, options.exhaustive_cap);
    if (total < 0 || total > options.exhaustive_cap) {
      throw std::invalid_argument("exhaustive enumeration of " + std::to_string(count) + "^" + std::to_string(n) +
                                  " families exceeds the cap of " + std::to_string(options.exhaustive_cap));
    }
    r.samples = total;
    run_campaign(
        r, total, options.threads,
        [&](long long index) {
          std::vector<Graph> members;
          long long rest = index;
          for (int c = 0; c < n; ++c) {
            members.push_back(graphs[static_cast<std::size_t>(rest % count)]);
            rest /= count;
          }
          return evaluate_theorem_family(GraphFamily(std::move(members)), t, budget,
                                         oracle_pick(options.seed, index, options.oracle_fraction));
        },
        options.certificate_dir);
  } else {
    r.samples = options.samples;
    run_campaign(
        r, options.samples, options.threads,
        [&](long long index) {
          long long rejections = 0;
          auto family = sample_theorem_family_impl(t, n, options.seed, index, rejections);
          auto o = evaluate_theorem_family(family, t, budget, oracle_pick(options.seed, index, options.oracle_fraction));
          o.rejections += rejections;
          return o;
        },
        options.certificate_dir);
  }
  r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return r;
}

GraphFamily sample_search_family(int n, std::uint64_t seed, long long index) {
  auto rng = stream_rng(seed, static_cast<std::uint64_t>(index));
  const int lo = static_cast<int>(extremal_size(n));
  const int hi = static_cast<int>(binomial2(n));
  std::bernoulli_distribution coin(0.5);
  auto size_graph = [&] { return random_graph_in_size_range(n, lo, hi, rng); };
  auto near_graph = [&] {
    if (n == 5 && coin(rng)) return random_relabel(k2_join_3k1(), rng);
    return random_extremal_graph(n, rng);
  };
  // strata: 5/8 uniform in the size range, 1/8 half near-extremal members,
  // 1/8 all members isomorphic to G*, 1/8 one graph repeated n times
  const int stratum = std::uniform_int_distribution<int>(0, 7)(rng);
  std::vector<Graph> graphs;
  if (stratum == 7) {
    const Graph g = coin(rng) ? near_graph() : size_graph();
    graphs.assign(static_cast<std::size_t>(n), g);
  } else {
    for (int i = 0; i < n; ++i) {
      if (stratum == 6) {
        graphs.push_back(random_extremal_graph(n, rng));
      } else if (stratum == 5 && coin(rng)) {
        graphs.push_back(near_graph());
      } else {
        graphs.push_back(size_graph());
      }
    }
  }
  return GraphFamily(std::move(graphs));
}

CampaignReport search_open_size_problem(const SearchOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const int n = options.n;
  if (n < 5) throw std::invalid_argument("the search needs n >= 5");
  if (n > kMaxVertices) throw std::invalid_argument("n exceeds the supported order");
  CampaignReport r;
  r.theorem = "open-size-problem";
  r.n = n;
  r.mode = CampaignMode::sampled;
  r.seed = options.seed;
  r.samples = options.samples;

  {
    Probe p;
    p.name = "all-equal G*";
    p.expected = "excluded";
    const auto o = evaluate_search_family(uniform_family(extremal_graph(n)), options.node_budget, false);
    p.ok = o.kind == Kind::excluded;
    p.observed = p.ok ? "excluded" : "not excluded";
    r.probes.push_back(std::move(p));
  }
  if (n == 5) {
    Probe p;
    p.name = "all-equal K2 v 3K1";
    p.expected = "boundary case";
    const auto o = evaluate_search_family(uniform_family(k2_join_3k1()), options.node_budget, false);
    p.ok = o.kind == Kind::boundary;
    p.observed = p.ok ? "boundary case" : "not flagged";
    r.probes.push_back(std::move(p));
  }

  run_campaign(
      r, options.samples, options.threads,
      [&](long long index) {
        return evaluate_search_family(sample_search_family(n, options.seed, index), options.node_budget,
                                      oracle_pick(options.seed, index, options.oracle_fraction));
      },
      options.certificate_dir);
  r.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return r;
}

CounterexampleCheck verify_counterexample(const GraphFamily& family, std::optional<TheoremId> theorem,
                                          long long node_budget) {
  CounterexampleCheck c;
  if (theorem) {
    const auto hyp = check_hypothesis(family, *theorem);
    c.hypothesis_holds = hyp.verdict;
    c.exceptional = hyp.exceptional;
  } else {
    c.hypothesis_holds = std::all_of(family.graphs().begin(), family.graphs().end(), [&](const Graph& g) {
      return g.edge_count() >= extremal_size(family.order());
    });
    c.exceptional = is_all_equal_extremal(family) || is_all_equal_boundary(family);
  }
  const long long budget = node_budget > LLONG_MAX / 10 ? LLONG_MAX : node_budget * 10;
  const auto solved = find_rainbow_hamiltonian_cycle(family, budget);
  c.status = solved.status;
  c.nodes = solved.nodes;
  c.confirmed = c.hypothesis_holds && !c.exceptional && solved.status == SolveStatus::none;
  return c;
}

std::string report_json(const CampaignReport& r, bool include_wall_time) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["theorem"] = r.theorem;
  doc["n"] = r.n;
  doc["mode"] = to_string(r.mode);
  doc["seed"] = r.seed;
  doc["samples"] = r.samples;
  doc["families_tested"] = r.families_tested;
  doc["hypothesis_rejections"] = r.hypothesis_rejections;
  doc["conclusion_holds"] = r.conclusion_holds;
  doc["exceptional_confirmed"] = r.exceptional_confirmed;
  doc["excluded_exceptional"] = r.excluded_exceptional;
  doc["boundary_cases"] = r.boundary_cases;
  doc["pipeline_certificates"] = r.pipeline_certificates;
  doc["pipeline_failures"] = r.pipeline_failures;
  doc["pipeline_failure_details"] = r.pipeline_failure_details;
  doc["violations"] = ordered_json::array();
  for (const auto& v : r.violations) {
    ordered_json j;
    j["index"] = v.index;
    j["reason"] = v.reason;
    j["family"] = v.family;
    j["certificate_path"] = v.certificate_path;
    doc["violations"].push_back(std::move(j));
  }
  doc["budget_exhaustions"] = r.budget_exhaustions;
  doc["oracle_checks"] = r.oracle_checks;
  doc["oracle_disagreements"] = r.oracle_disagreements;
  doc["branch_counters"] = ordered_json::object();
  for (const auto& [k, v] : r.branch_counters) doc["branch_counters"][k] = v;
  doc["probes"] = ordered_json::array();
  for (const auto& p : r.probes) {
    doc["probes"].push_back({{"name", p.name}, {"expected", p.expected}, {"observed", p.observed}, {"ok", p.ok}});
  }
  doc["halted"] = r.halted;
  doc["clean"] = r.clean();
  if (include_wall_time) doc["wall_time_ms"] = r.wall_time_ms;
  return doc.dump(2) + "\n";
}

std::string report_csv(const CampaignReport& r, bool include_wall_time) {
  std::ostringstream os;
  os << "theorem,n,mode,seed,samples,families_tested,hypothesis_rejections,conclusion_holds,exceptional_confirmed,"
        "excluded_exceptional,boundary_cases,pipeline_certificates,pipeline_failures,violations,budget_exhaustions,"
        "oracle_checks,oracle_disagreements,probes_ok,halted";
  if (include_wall_time) os << ",wall_time_ms";
  os << "\n"
     << r.theorem << "," << r.n << "," << to_string(r.mode) << "," << r.seed << "," << r.samples << ","
     << r.families_tested << "," << r.hypothesis_rejections << "," << r.conclusion_holds << ","
     << r.exceptional_confirmed << "," << r.excluded_exceptional << "," << r.boundary_cases << ","
     << r.pipeline_certificates << "," << r.pipeline_failures << "," << r.violations.size() << ","
     << r.budget_exhaustions << "," << r.oracle_checks << "," << r.oracle_disagreements << ","
     << (r.probes_ok() ? 1 : 0) << "," << (r.halted ? 1 : 0);
  if (include_wall_time) os << "," << r.wall_time_ms;
  os << "\n\ncounter,count\n";
  for (const auto& [k, v] : r.branch_counters) os << k << "," << v << "\n";
  return os.str();
}

void write_report(const CampaignReport& report, const std::filesystem::path& path, ReportFormat format) {
  write_text_file(path, format == ReportFormat::json ? report_json(report) : report_csv(report));
}

}  // namespace rainbow
