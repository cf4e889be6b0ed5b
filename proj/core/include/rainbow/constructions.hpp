#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/kelmans.hpp"

namespace rainbow {

/// The edges of the size-condition cycle:
///   e_j  = {j, n+2-j},  2 <= j <= ceil(n/2)
///   e'_k = {k, n+1-k},  1 <= k <= floor(n/2)
///   closing edge {n+1-floor(n/2), 1} (n even) or {ceil(n/2), 1} (n odd).
struct CanonicalEdgeSchedule {
  int n = 0;
  std::vector<Edge> e_list;       ///< e_2, e_3, ...
  std::vector<Edge> eprime_list;  ///< e'_1, e'_2, ...
  Edge closing_edge;

  /// Cycle order e_2, e'_2, e_3, e'_3, ..., closing edge, e'_1.
  std::vector<Edge> cycle_edges() const;
};

/// n >= 4; the schedule is checked to form a Hamiltonian cycle.
CanonicalEdgeSchedule canonical_schedule(int n);

class HypothesisViolation : public std::invalid_argument {
 public:
  HypothesisViolation(int member, const std::string& what) : std::invalid_argument(what), member_(member) {}
  /// Offending family member (color), 0 when not member-specific.
  int member() const { return member_; }

 private:
  int member_;
};

/// Raised when a construction reaches a state its correctness argument rules
/// out. Carries a description of the family.
class ConstructionFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct SizeConditionResult {
  RainbowCycle cycle;
  /// Member whose fixpoint carries e_2 = {2, n}.
  int e2_color = 0;
  /// Cycle of the transformed family before lifting.
  RainbowCycle transformed_cycle;
  KelmansTranscript transcript;
};

/// Every e(G_i) > C(n-1,2) + 1, n >= 4: Kelmans-transform the family, color
/// e_2 by the first member whose fixpoint contains it, color the remaining
/// schedule edges with the remaining colors in ascending order along the
/// cycle, then lift back through the transcript.
SizeConditionResult construct_cycle_size_condition_detailed(const GraphFamily& family);
RainbowCycle construct_cycle_size_condition(const GraphFamily& family);

/// Same schedule-and-lift route without the size check. Returns nullopt if
/// no fixpoint contains e_2 or some schedule edge is missing for its color.
std::optional<SizeConditionResult> try_schedule_and_lift(const GraphFamily& family);

/// Degree-1 structure of a family whose members are all K1 v (K_{n-2} u K1).
struct ExtremalFamilyProfile {
  /// v_1..v_k, ordered by ascending multiplicity, ties by label.
  std::vector<int> pendant_vertices;
  std::vector<int> multiplicities;
  /// memberships[j] = colors i with d_i(v_j) = 1, ascending.
  std::vector<std::vector<int>> memberships;
  /// pendant[i-1], attachment[i-1] for member i.
  std::vector<int> pendant;
  std::vector<int> attachment;

  int k() const { return static_cast<int>(pendant_vertices.size()); }
};

ExtremalFamilyProfile extremal_profile(const GraphFamily& family);

enum class ExtremalBranch {
  all_equal,       ///< no rainbow cycle exists
  single_pendant,  ///< k = 1
  direct,          ///< k >= 2 and v_1 v_2 in G_n
  switch_a,        ///< k = 2, m_1 >= 2
  switch_b,        ///< k = 2, m_1 = 1
};

const char* to_string(ExtremalBranch b);

struct ExtremalResult {
  std::optional<RainbowCycle> cycle;
  ExtremalBranch branch = ExtremalBranch::all_equal;
  /// v_1..v_n and G_1..G_n of the normalised labelling, as labels/colors of
  /// the input family.
  std::vector<int> vertex_order;
  std::vector<int> member_order;
};

/// Every member isomorphic to K1 v (K_{n-2} u K1), n >= 4. No cycle iff all
/// members are equal; otherwise the cycle of the normalised construction,
/// mapped back to the caller's labels and validated.
ExtremalResult construct_cycle_extremal_detailed(const GraphFamily& family);
std::optional<RainbowCycle> construct_cycle_extremal(const GraphFamily& family);

/// Member i as K_{n-1} on [n] \ {pendant} plus the edge {pendant, attachment}.
Graph extremal_graph_with(int n, int pendant, int attachment);

enum class PipelineRoute { schedule_lift, extremal, none };

const char* to_string(PipelineRoute r);

struct PipelineResult {
  std::optional<RainbowCycle> cycle;
  PipelineRoute route = PipelineRoute::none;
  std::optional<ExtremalBranch> branch;
};

/// Constructive route shared by the size and spectral theorems: canonical
/// schedule on the Kelmans family and lift; else, when every member is
/// isomorphic to G*, the extremal construction. route == none when neither
/// applies. Any returned cycle is validated. n >= 4.
PipelineResult construct_cycle(const GraphFamily& family);

}  // namespace rainbow
