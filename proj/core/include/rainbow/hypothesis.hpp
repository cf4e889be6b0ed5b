#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

enum class TheoremId {
  ore_size,           // e(G) > C(n-1,2)+1 => Hamiltonian
  bondy,              // e(G) >= C(n-1,2)+1 => Hamiltonian unless G* or K2 v 3K1
  fiedler_nikiforov,  // rho(G) > n-2 => Hamiltonian unless G*
  rainbow_size,       // every e(G_i) > C(n-1,2)+1, n >= 4
  rainbow_spectral,   // every rho(G_i) > n-2, n >= 4, unless all equal G*
  rainbow_signless,   // every rho_S(G_i) > 2n-4, n >= 6, unless all equal G*
  rainbow_extremal,   // every G_i isomorphic to G*, n >= 4, unless all equal
};

const char* to_string(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view name);
bool is_family_theorem(TheoremId id);
/// Smallest order the theorem is stated for.
int minimum_order(TheoremId id);

struct GraphCheck {
  /// 1-based color for families, 1 for single graphs.
  int index = 1;
  /// "e", "rho", "rho_S" or "iso-G*".
  std::string quantity;
  double measured = 0.0;
  long long threshold = 0;
  /// ">" or ">=".
  std::string relation;
  bool pass = false;
  /// The spectral estimate was within tolerance of the threshold and the
  /// exact inertia test decided.
  bool borderline = false;
};

struct HypothesisReport {
  TheoremId theorem = TheoremId::rainbow_size;
  int n = 0;
  std::vector<GraphCheck> checks;
  bool verdict = false;
  /// The input is the theorem's named exception (the "unless" clause).
  bool exceptional = false;
  std::string exception;

  bool any_borderline() const;
};

/// Single-graph theorems (ore-size, bondy, fiedler-nikiforov).
HypothesisReport check_hypothesis(const Graph& g, TheoremId theorem);
/// Family theorems. Throws std::invalid_argument below minimum_order.
HypothesisReport check_hypothesis(const GraphFamily& family, TheoremId theorem);

/// All members equal and isomorphic to K1 v (K_{n-2} u K1).
bool is_all_equal_extremal(const GraphFamily& family);

std::string format_hypothesis_report(const HypothesisReport& report);
std::string hypothesis_report_json(const HypothesisReport& report);

}  // namespace rainbow
