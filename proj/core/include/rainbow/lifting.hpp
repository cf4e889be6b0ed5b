#pragma once

#include <stdexcept>
#include <string>

#include "rainbow/graph.hpp"
#include "rainbow/kelmans.hpp"

namespace rainbow {

/// Which switch of the lifting argument produced the result.
enum class LiftCase {
  unchanged,              ///< cycle already valid in the original family
  xy_on_cycle_swap,       ///< xy on the cycle: ux, yv replaced by uy, xv
  off_cycle_keep,         ///< xy off the cycle, ya1 not in G_i, xa2 kept
  off_cycle_single,       ///< ya1 not in G_i: xa2, b1y -> ya2, b1x
  off_cycle_first_only,   ///< ya1 in G_i: a1x, yb2 -> ya1, xb2
  off_cycle_double,       ///< ya1 in G_i: both switches
};

const char* to_string(LiftCase c);

/// Raised when no case of the lifting argument yields a valid cycle. This
/// indicates a bug or a malformed input; the message carries the full state.
class LiftError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LiftStepResult {
  RainbowCycle cycle;
  LiftCase which = LiftCase::unchanged;
  /// Number of (edge, color) assignments that differ from the input.
  int changed_assignments = 0;
  /// The reverse traversal direction was needed.
  bool reversed = false;
};

/// Converts a rainbow Hamiltonian cycle of K_xy(family) into one of family.
/// Throws std::invalid_argument if `cycle` is not valid for K_xy(family),
/// LiftError if no case applies.
LiftStepResult lift_one_step_detailed(const GraphFamily& family, int x, int y, const RainbowCycle& cycle);
RainbowCycle lift_one_step(const GraphFamily& family, int x, int y, const RainbowCycle& cycle);

/// Lifts a cycle of the fully transformed family back through the
/// transcript, last step first. The result is validated against `family`.
RainbowCycle lift_full(const GraphFamily& family, const KelmansTranscript& transcript, const RainbowCycle& cycle);

}  // namespace rainbow
