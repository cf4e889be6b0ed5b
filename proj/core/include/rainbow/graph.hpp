#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rainbow {

/// Largest supported vertex count; adjacency rows are 64-bit masks.
inline constexpr int kMaxVertices = 64;

/// Bit for vertex v (1-based label) in an adjacency mask.
constexpr std::uint64_t vertex_bit(int v) { return std::uint64_t{1} << (v - 1); }

/// Unordered vertex pair, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Labeled simple graph on vertex set {1, ..., n}.
///
/// Labels are significant: the Kelmans machinery orders vertices by label,
/// so any relabeling must go through `relabel`.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices, 0 <= n <= kMaxVertices.
  explicit Graph(int n);

  int order() const { return n_; }
  bool has_edge(int u, int v) const { return (rows_[u - 1] & vertex_bit(v)) != 0; }
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }
  std::uint64_t neighbors(int v) const { return rows_[v - 1]; }
  int degree(int v) const;
  int edge_count() const;
  /// Mask with the bits of all n vertices set.
  std::uint64_t vertex_mask() const;
  /// Sorted edge list, u < v.
  std::vector<Edge> edges() const;
  std::span<const std::uint64_t> rows() const { return rows_; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;
  /// Graph on the same labels with vertex v isolated.
  Graph isolate(int v) const;
  /// Induced subgraph on `keep` (sorted labels), relabeled 1..|keep| in order.
  Graph induced(std::span<const int> keep) const;
  /// Image under the permutation perm[v-1] = new label of v.
  Graph relabel(std::span<const int> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(int u, int v) const;

  int n_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Builds a graph from an edge list; duplicates collapse, loops and
/// out-of-range labels throw std::invalid_argument.
Graph new_graph(int n, std::span<const Edge> edges);
Graph new_graph(int n, std::initializer_list<Edge> edges);

int edge_count(const Graph& g);

/// Minimum degree sum over nonadjacent pairs; nullopt when g is complete.
std::optional<int> sigma2(const Graph& g);

/// Disjoint union; g1 keeps labels 1..n1, g2 is shifted to n1+1..n1+n2.
Graph disjoint_union(const Graph& g1, const Graph& g2);
/// Disjoint union plus every edge between the two sides.
Graph join(const Graph& g1, const Graph& g2);

Graph complete_graph(int n);
Graph empty_graph(int n);
Graph cycle_graph(int n);
/// Star K_{1,leaves} with center 1.
Graph star_graph(int leaves);
/// K1 v (K_{n-2} u K1): label 1 dominates, label n is the pendant vertex.
Graph extremal_graph(int n);
/// K2 v 3K1 on 5 vertices; labels 1,2 form the K2.
Graph k2_join_3k1();

/// Brute-force isomorphism test with degree and neighbour-degree pruning.
/// Intended for n <= 10.
bool is_isomorphic(const Graph& g1, const Graph& g2);
bool is_isomorphic_to_extremal(const Graph& g);

/// Hamiltonian cycle as a vertex sequence starting at 1, if one exists.
/// Throws std::invalid_argument for n < 3.
std::optional<std::vector<int>> find_hamiltonian_cycle(const Graph& g);

/// n graphs on the shared vertex set [n]; graph i carries color i (1-based).
class GraphFamily {
 public:
  GraphFamily() = default;
  explicit GraphFamily(std::vector<Graph> graphs);

  int order() const { return n_; }
  int size() const { return static_cast<int>(graphs_.size()); }
  const Graph& member(int color) const { return graphs_[color - 1]; }
  std::span<const Graph> graphs() const { return graphs_; }
  /// Union of all members.
  Graph union_graph() const;
  bool all_equal() const;

  friend bool operator==(const GraphFamily&, const GraphFamily&) = default;

 private:
  int n_ = 0;
  std::vector<Graph> graphs_;
};

GraphFamily uniform_family(const Graph& g);

/// Hamiltonian vertex cycle with one color per cycle edge.
/// colors[k] is the color of the edge vertices[k] -- vertices[(k+1) % n].
struct RainbowCycle {
  std::vector<int> vertices;
  std::vector<int> colors;

  int length() const { return static_cast<int>(vertices.size()); }
  Edge edge_at(int k) const;
  /// color c -> edge carrying it; requires a well-formed cycle.
  std::vector<Edge> edges_by_color() const;

  friend bool operator==(const RainbowCycle&, const RainbowCycle&) = default;
};

/// Reason the cycle is not a rainbow Hamiltonian cycle of `family`, or
/// nullopt when it is.
std::optional<std::string> rainbow_cycle_defect(const GraphFamily& family, const RainbowCycle& cycle);
bool is_rainbow_hamiltonian_cycle(const GraphFamily& family, const RainbowCycle& cycle);

/// Rebuilds a cycle from a color-indexed edge assignment (index c-1 holds the
/// edge of color c). Returns nullopt unless the edges form one Hamiltonian cycle.
std::optional<RainbowCycle> cycle_from_color_edges(int n, std::span<const Edge> edge_of_color);

std::string to_string(const RainbowCycle& cycle);

inline long long binomial2(long long n) { return n * (n - 1) / 2; }

/// C(n-1, 2) + 1, the size of K1 v (K_{n-2} u K1).
inline long long extremal_size(int n) { return binomial2(n - 1) + 1; }

}  // namespace rainbow
