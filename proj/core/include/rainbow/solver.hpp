#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "rainbow/graph.hpp"

namespace rainbow {

inline constexpr long long kDefaultNodeBudget = 100'000'000;

enum class SolveStatus { found, none, budget_exceeded };

const char* to_string(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::none;
  std::optional<RainbowCycle> cycle;
  long long nodes = 0;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact search for a rainbow Hamiltonian cycle.
///
/// Depth-first extension of a path from vertex 1 inside the union graph.
/// Path edges are kept matched to distinct colors; each new edge is added
/// with one augmenting-path search, and a branch dies as soon as the edge
/// set has no system of distinct colors. Returned certificates are
/// validated. Deterministic. Throws std::invalid_argument for n < 3.
SolveResult find_rainbow_hamiltonian_cycle(const GraphFamily& family, long long node_budget = kDefaultNodeBudget);

/// Existence only; throws BudgetExceeded when the budget runs out.
bool exists_rainbow_hc(const GraphFamily& family, long long node_budget = kDefaultNodeBudget);

/// Independent oracle: every Hamiltonian cycle of K_n, each checked by
/// trying all color assignments edge by edge. n <= 7.
std::optional<RainbowCycle> brute_force_oracle(const GraphFamily& family);

}  // namespace rainbow
