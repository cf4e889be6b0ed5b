#include "rainbow/kelmans.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace rainbow {

std::uint64_t kelmans_moved_set(const Graph& g, int x, int y) {
  return g.neighbors(y) & ~(g.neighbors(x) | vertex_bit(x));
}

Graph kelmans_step(const Graph& g, int x, int y) {
  if (x == y) throw std::invalid_argument("Kelmans step needs x != y");
  if (x < 1 || y < 1 || x > g.order() || y > g.order()) throw std::invalid_argument("Kelmans step label out of range");
  std::uint64_t moved = kelmans_moved_set(g, x, y);
  if (moved == 0) return g;
  Graph out = g;
  while (moved != 0) {
    const int z = std::countr_zero(moved) + 1;
    moved &= moved - 1;
    out.remove_edge(y, z);
    out.add_edge(x, z);
  }
  return out;
}

std::vector<std::pair<int, int>> sweep_pairs(int n, SweepOrder order) {
  std::vector<std::pair<int, int>> pairs;
  switch (order) {
    case SweepOrder::lexicographic:
      for (int x = 1; x <= n; ++x)
        for (int y = x + 1; y <= n; ++y) pairs.emplace_back(x, y);
      break;
    case SweepOrder::reverse_lexicographic:
      for (int x = n; x >= 1; --x)
        for (int y = n; y > x; --y) pairs.emplace_back(x, y);
      break;
    case SweepOrder::colexicographic:
      for (int y = 2; y <= n; ++y)
        for (int x = 1; x < y; ++x) pairs.emplace_back(x, y);
      break;
  }
  return pairs;
}

Potential shifting_potential(const Graph& g) {
  const int n = g.order();
  Potential total = 0;
  for (const auto& e : g.edges()) {
    total += (static_cast<Potential>(1) << (n - e.u)) + (static_cast<Potential>(1) << (n - e.v));
  }
  return total;
}

namespace {

long long pass_cap(int n) { return static_cast<long long>(n) * binomial2(n); }

}  // namespace

SweepResult kelmans_sweep(const Graph& g, SweepOrder order) {
  const auto pairs = sweep_pairs(g.order(), order);
  SweepResult result{g, 0, 0};
  auto potential = shifting_potential(g);
  for (;;) {
    ++result.passes;
    if (result.passes > pass_cap(g.order()) + 1) {
      throw std::logic_error("Kelmans sweep exceeded n*C(n,2) passes");
    }
    bool changed = false;
    for (const auto& [x, y] : pairs) {
      Graph next = kelmans_step(result.graph, x, y);
      if (next == result.graph) continue;
      const auto next_potential = shifting_potential(next);
      if (next_potential <= potential) throw std::logic_error("shifting potential did not increase");
      potential = next_potential;
      result.graph = std::move(next);
      ++result.changes;
      changed = true;
    }
    if (!changed) return result;
  }
}

Graph kelmans_fixpoint(const Graph& g, SweepOrder order) { return kelmans_sweep(g, order).graph; }

bool is_kelmans_fixed(const Graph& g) {
  const int n = g.order();
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) {
      const std::uint64_t others = ~(vertex_bit(x) | vertex_bit(y));
      if ((g.neighbors(y) & others & ~g.neighbors(x)) != 0) return false;
    }
  }
  return true;
}

std::uint64_t family_hash(const GraphFamily& family) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t word) {
    for (int b = 0; b < 8; ++b) {
      h ^= (word >> (8 * b)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(family.order()));
  for (const auto& g : family.graphs()) {
    for (auto row : g.rows()) mix(row);
  }
  return h;
}

GraphFamily kelmans_step(const GraphFamily& family, int x, int y) {
  std::vector<Graph> out;
  out.reserve(static_cast<std::size_t>(family.size()));
  for (const auto& g : family.graphs()) out.push_back(kelmans_step(g, x, y));
  return GraphFamily(std::move(out));
}

KelmansFamilyResult kelmans_family(const GraphFamily& family) {
  const int n = family.order();
  const auto pairs = sweep_pairs(n, SweepOrder::lexicographic);
  std::vector<Graph> graphs(family.graphs().begin(), family.graphs().end());
  std::vector<Potential> potential;
  for (const auto& g : graphs) potential.push_back(shifting_potential(g));

  KelmansTranscript transcript;
  for (;;) {
    ++transcript.passes;
    if (transcript.passes > pass_cap(n) + 1) throw std::logic_error("Kelmans family sweep exceeded n*C(n,2) passes");
    bool changed = false;
    for (const auto& [x, y] : pairs) {
      bool any = false;
      for (const auto& g : graphs) {
        if (kelmans_moved_set(g, x, y) != 0) {
          any = true;
          break;
        }
      }
      if (!any) continue;
      transcript.steps.push_back({x, y, family_hash(GraphFamily(graphs))});
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (kelmans_moved_set(graphs[i], x, y) == 0) continue;
        graphs[i] = kelmans_step(graphs[i], x, y);
        const auto p = shifting_potential(graphs[i]);
        if (p <= potential[i]) throw std::logic_error("shifting potential did not increase");
        potential[i] = p;
      }
      changed = true;
    }
    if (!changed) break;
  }
  return {GraphFamily(std::move(graphs)), std::move(transcript)};
}

std::vector<GraphFamily> replay_transcript(const GraphFamily& family, const KelmansTranscript& transcript) {
  std::vector<GraphFamily> stages;
  stages.reserve(transcript.steps.size() + 1);
  stages.push_back(family);
  for (std::size_t k = 0; k < transcript.steps.size(); ++k) {
    const auto& step = transcript.steps[k];
    if (family_hash(stages.back()) != step.snapshot_before) {
      throw std::invalid_argument("transcript step " + std::to_string(k + 1) + " (" + std::to_string(step.x) + "," +
                                  std::to_string(step.y) + ") does not match the family snapshot");
    }
    stages.push_back(kelmans_step(stages.back(), step.x, step.y));
  }
  return stages;
}

bool canonical_edges_check(const Graph& g) {
  const int n = g.order();
  if (n < 4) throw std::invalid_argument("canonical edges need n >= 4");
  if (!is_kelmans_fixed(g)) throw std::invalid_argument("canonical_edges_check needs a Kelmans-fixed graph");
  for (int j = 3; j <= (n + 1) / 2; ++j) {
    if (!g.has_edge(j, n + 2 - j)) return false;
  }
  for (int k = 1; k <= n / 2; ++k) {
    if (!g.has_edge(k, n + 1 - k)) return false;
  }
  return true;
}

}  // namespace rainbow
