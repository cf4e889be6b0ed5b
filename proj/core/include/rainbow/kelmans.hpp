#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Moves every neighbour of y outside N(x) u {x} from y to x. The edge xy,
/// if present, is untouched; the edge count is preserved.
Graph kelmans_step(const Graph& g, int x, int y);

/// N(y) \ (N(x) u {x}), the set a step from x to y moves.
std::uint64_t kelmans_moved_set(const Graph& g, int x, int y);

enum class SweepOrder {
  lexicographic,          ///< (1,2), (1,3), ..., (n-1,n)
  reverse_lexicographic,  ///< (n-1,n), ..., (1,2)
  colexicographic,        ///< (1,2), (1,3), (2,3), (1,4), ...
};

/// Pairs (x, y), x < y, in the given sweep order.
std::vector<std::pair<int, int>> sweep_pairs(int n, SweepOrder order);

struct SweepResult {
  Graph graph;
  int passes = 0;    ///< full passes, including the final unchanged one
  int changes = 0;   ///< steps that altered the graph
};

/// Repeats passes over all pairs x < y until a pass changes nothing.
/// Throws std::logic_error if the pass count exceeds n * C(n,2) or the
/// shifting potential fails to increase.
SweepResult kelmans_sweep(const Graph& g, SweepOrder order = SweepOrder::lexicographic);

Graph kelmans_fixpoint(const Graph& g, SweepOrder order = SweepOrder::lexicographic);

/// True iff xz not in E implies yz not in E for all x < y, z not in {x,y}.
bool is_kelmans_fixed(const Graph& g);

/// Sum over edges uv of 2^(n-u) + 2^(n-v); strictly increases under every
/// changing step with x < y.
__extension__ typedef unsigned __int128 Potential;
Potential shifting_potential(const Graph& g);

/// FNV-1a over the order and all adjacency rows.
std::uint64_t family_hash(const GraphFamily& family);

struct KelmansTranscript {
  struct Step {
    int x = 0;
    int y = 0;
    std::uint64_t snapshot_before = 0;

    friend bool operator==(const Step&, const Step&) = default;
  };

  std::vector<Step> steps;
  int passes = 0;

  bool empty() const { return steps.empty(); }
};

/// Applies one step to every member.
GraphFamily kelmans_step(const GraphFamily& family, int x, int y);

struct KelmansFamilyResult {
  GraphFamily family;
  KelmansTranscript transcript;
};

/// Lexicographic passes applied to the whole family at once; a transcript
/// entry is recorded for every pair that changes at least one member.
KelmansFamilyResult kelmans_family(const GraphFamily& family);

/// Replays the transcript forward, checking each snapshot hash. Returns the
/// intermediate families, front() == family, back() == transformed family.
/// Throws std::invalid_argument on a hash mismatch.
std::vector<GraphFamily> replay_transcript(const GraphFamily& family, const KelmansTranscript& transcript);

/// e_j = {j, n+2-j} for 3 <= j <= ceil(n/2) and e'_k = {k, n+1-k} for
/// 1 <= k <= floor(n/2) all present. Requires a Kelmans-fixed graph, n >= 4.
bool canonical_edges_check(const Graph& g);

}  // namespace rainbow
