#include "rainbow/solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <vector>

namespace rainbow {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::found: return "found";
    case SolveStatus::none: return "none";
    case SolveStatus::budget_exceeded: return "budget-exceeded";
  }
  return "?";
}

namespace {

class RainbowSearch {
 public:
  RainbowSearch(const GraphFamily& family, long long budget) : n_(family.order()), budget_(budget) {
    const auto nn = static_cast<std::size_t>(n_);
    union_rows_.assign(nn, 0);
    colors_.assign(nn * nn, 0);
    for (int c = 1; c <= family.size(); ++c) {
      for (const auto& e : family.member(c).edges()) {
        colors_[index(e.u, e.v)] |= vertex_bit(c);
        colors_[index(e.v, e.u)] |= vertex_bit(c);
        union_rows_[e.u - 1] |= vertex_bit(e.v);
        union_rows_[e.v - 1] |= vertex_bit(e.u);
      }
    }
    owner_.assign(nn, -1);
    all_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;

    // fail-first: neighbours ordered by union degree, then label
    neighbour_order_.resize(nn);
    for (int v = 1; v <= n_; ++v) {
      auto& order = neighbour_order_[v - 1];
      std::uint64_t nb = union_rows_[v - 1];
      while (nb != 0) {
        order.push_back(std::countr_zero(nb) + 1);
        nb &= nb - 1;
      }
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return std::popcount(union_rows_[a - 1]) < std::popcount(union_rows_[b - 1]);
      });
    }
  }

  SolveResult run(const GraphFamily& family) {
    SolveResult result;
    for (int v = 1; v <= n_; ++v) {
      if (std::popcount(union_rows_[v - 1]) < 2) return result;
    }
    for (const auto& g : family.graphs()) {
      if (g.edge_count() == 0) return result;
    }
    path_ = {1};
    visited_ = vertex_bit(1);
    const bool found = extend(1);
    result.nodes = nodes_;
    if (exhausted_) {
      result.status = SolveStatus::budget_exceeded;
    } else if (found) {
      RainbowCycle cycle;
      cycle.vertices = path_;
      for (int c : match_) cycle.colors.push_back(c + 1);
      result.status = SolveStatus::found;
      result.cycle = std::move(cycle);
    }
    return result;
  }

 private:
  std::size_t index(int u, int v) const { return static_cast<std::size_t>(u - 1) * n_ + (v - 1); }

  bool augment(int k, std::uint64_t& seen) {
    std::uint64_t avail = edge_mask_[k] & ~seen;
    while (avail != 0) {
      const int c = std::countr_zero(avail);
      avail &= avail - 1;
      seen |= std::uint64_t{1} << c;
      if (owner_[c] < 0 || augment(owner_[c], seen)) {
        owner_[c] = k;
        match_[k] = c;
        return true;
      }
    }
    return false;
  }

  bool push_edge(std::uint64_t mask) {
    const int k = static_cast<int>(edge_mask_.size());
    edge_mask_.push_back(mask);
    match_.push_back(-1);
    std::uint64_t seen = 0;
    if (augment(k, seen)) return true;
    edge_mask_.pop_back();
    match_.pop_back();
    return false;
  }

  void pop_edge() {
    owner_[match_.back()] = -1;
    match_.pop_back();
    edge_mask_.pop_back();
  }

  // Every unvisited vertex keeps two usable neighbours; the path ends
  // (v and 1) can still reach the remainder.
  bool feasible(int v) const {
    const std::uint64_t remaining = all_ & ~visited_;
    if (remaining == 0) return true;
    if ((union_rows_[0] & remaining) == 0 || (union_rows_[v - 1] & remaining) == 0) return false;
    const std::uint64_t usable = remaining | vertex_bit(v) | vertex_bit(1);
    std::uint64_t rest = remaining;
    while (rest != 0) {
      const int w = std::countr_zero(rest) + 1;
      rest &= rest - 1;
      if (std::popcount(union_rows_[w - 1] & usable) < 2) return false;
    }
    return true;
  }

  bool extend(int cur) {
    if (++nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    if (static_cast<int>(path_.size()) == n_) {
      const std::uint64_t mask = colors_[index(cur, 1)];
      return mask != 0 && push_edge(mask);
    }
    for (int v : neighbour_order_[cur - 1]) {
      if ((visited_ & vertex_bit(v)) != 0) continue;
      if (!push_edge(colors_[index(cur, v)])) continue;
      path_.push_back(v);
      visited_ |= vertex_bit(v);
      if (feasible(v) && extend(v)) return true;
      visited_ &= ~vertex_bit(v);
      path_.pop_back();
      pop_edge();
      if (exhausted_) return false;
    }
    return false;
  }

  int n_;
  long long budget_;
  long long nodes_ = 0;
  bool exhausted_ = false;
  std::uint64_t all_ = 0;
  std::vector<std::uint64_t> union_rows_;
  std::vector<std::uint64_t> colors_;
  std::vector<std::vector<int>> neighbour_order_;
  std::vector<int> path_;
  std::uint64_t visited_ = 0;
  std::vector<std::uint64_t> edge_mask_;
  std::vector<int> match_;   // path edge -> color (0-based)
  std::vector<int> owner_;   // color -> path edge
};

}  // namespace

SolveResult find_rainbow_hamiltonian_cycle(const GraphFamily& family, long long node_budget) {
  if (family.order() < 3) throw std::invalid_argument("rainbow Hamiltonian cycles need n >= 3");
  RainbowSearch search(family, node_budget);
  SolveResult result = search.run(family);
  if (result.cycle) {
    if (auto defect = rainbow_cycle_defect(family, *result.cycle)) {
      throw std::logic_error("solver produced an invalid certificate: " + *defect);
    }
  }
  return result;
}

bool exists_rainbow_hc(const GraphFamily& family, long long node_budget) {
  const auto result = find_rainbow_hamiltonian_cycle(family, node_budget);
  if (result.status == SolveStatus::budget_exceeded) {
    throw BudgetExceeded("rainbow search exceeded " + std::to_string(node_budget) + " nodes");
  }
  return result.status == SolveStatus::found;
}

namespace {

bool assign_colors(const GraphFamily& family, const std::vector<int>& cycle, std::size_t k, std::uint64_t used,
                   std::vector<int>& colors) {
  const std::size_t n = cycle.size();
  if (k == n) return true;
  const int u = cycle[k];
  const int v = cycle[(k + 1) % n];
  for (int c = 1; c <= family.size(); ++c) {
    if ((used & vertex_bit(c)) != 0 || !family.member(c).has_edge(u, v)) continue;
    colors[k] = c;
    if (assign_colors(family, cycle, k + 1, used | vertex_bit(c), colors)) return true;
  }
  return false;
}

}  // namespace

std::optional<RainbowCycle> brute_force_oracle(const GraphFamily& family) {
  const int n = family.order();
  if (n < 3) throw std::invalid_argument("rainbow Hamiltonian cycles need n >= 3");
  if (n > 7) throw std::invalid_argument("brute-force oracle is limited to n <= 7");
  const Graph all = family.union_graph();
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 2);
  do {
    if (rest.front() > rest.back()) continue;  // each undirected cycle once
    std::vector<int> cycle{1};
    cycle.insert(cycle.end(), rest.begin(), rest.end());
    bool in_union = true;
    for (int k = 0; k < n && in_union; ++k) in_union = all.has_edge(cycle[k], cycle[(k + 1) % n]);
    if (!in_union) continue;
    std::vector<int> colors(static_cast<std::size_t>(n), 0);
    if (assign_colors(family, cycle, 0, 0, colors)) return RainbowCycle{cycle, colors};
  } while (std::next_permutation(rest.begin(), rest.end()));
  return std::nullopt;
}

}  // namespace rainbow
