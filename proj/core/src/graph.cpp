#include "rainbow/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rainbow {

Graph::Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxVertices) + "]");
  }
}

int Graph::degree(int v) const { return std::popcount(rows_[v - 1]); }

int Graph::edge_count() const {
  int twice = 0;
  for (auto row : rows_) twice += std::popcount(row);
  return twice / 2;
}

std::uint64_t Graph::vertex_mask() const {
  return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 1; u <= n_; ++u) {
    for (int v = u + 1; v <= n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::check_pair(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) {
    throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                "} has a label outside [1, " + std::to_string(n_) + "]");
  }
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
}

void Graph::add_edge(int u, int v) {
  check_pair(u, v);
  rows_[u - 1] |= vertex_bit(v);
  rows_[v - 1] |= vertex_bit(u);
}

void Graph::remove_edge(int u, int v) {
  check_pair(u, v);
  rows_[u - 1] &= ~vertex_bit(v);
  rows_[v - 1] &= ~vertex_bit(u);
}

Graph Graph::with_edge(int u, int v) const {
  Graph g = *this;
  g.add_edge(u, v);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  Graph g = *this;
  g.remove_edge(u, v);
  return g;
}

Graph Graph::isolate(int v) const {
  Graph g = *this;
  for (int u = 1; u <= n_; ++u) {
    if (u != v && g.has_edge(u, v)) g.remove_edge(u, v);
  }
  return g;
}

Graph Graph::induced(std::span<const int> keep) const {
  Graph g(static_cast<int>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = a + 1; b < keep.size(); ++b) {
      if (has_edge(keep[a], keep[b])) g.add_edge(static_cast<int>(a) + 1, static_cast<int>(b) + 1);
    }
  }
  return g;
}

Graph Graph::relabel(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("permutation size mismatch");
  Graph g(n_);
  for (const auto& e : edges()) g.add_edge(perm[e.u - 1], perm[e.v - 1]);
  return g;
}

Graph new_graph(int n, std::span<const Edge> edges) {
  if (n < 1) throw std::invalid_argument("graph order must be at least 1");
  Graph g(n);
  for (const auto& e : edges) g.add_edge(e.u, e.v);
  return g;
}

Graph new_graph(int n, std::initializer_list<Edge> edges) {
  return new_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

int edge_count(const Graph& g) { return g.edge_count(); }

std::optional<int> sigma2(const Graph& g) {
  std::optional<int> best;
  for (int u = 1; u <= g.order(); ++u) {
    for (int v = u + 1; v <= g.order(); ++v) {
      if (g.has_edge(u, v)) continue;
      int sum = g.degree(u) + g.degree(v);
      if (!best || sum < *best) best = sum;
    }
  }
  return best;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  Graph g(n1 + g2.order());
  for (const auto& e : g1.edges()) g.add_edge(e.u, e.v);
  for (const auto& e : g2.edges()) g.add_edge(e.u + n1, e.v + n1);
  return g;
}

Graph join(const Graph& g1, const Graph& g2) {
  Graph g = disjoint_union(g1, g2);
  for (int u = 1; u <= g1.order(); ++u) {
    for (int v = 1; v <= g2.order(); ++v) g.add_edge(u, g1.order() + v);
  }
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (int v = 1; v <= n; ++v) g.add_edge(v, v % n + 1);
  return g;
}

Graph star_graph(int leaves) { return join(complete_graph(1), empty_graph(leaves)); }

Graph extremal_graph(int n) {
  if (n < 3) throw std::invalid_argument("K1 v (K_{n-2} u K1) needs n >= 3");
  return join(complete_graph(1), disjoint_union(complete_graph(n - 2), empty_graph(1)));
}

Graph k2_join_3k1() { return join(complete_graph(2), empty_graph(3)); }

bool is_isomorphic_to_extremal(const Graph& g) {
  if (g.order() < 3 || g.edge_count() != extremal_size(g.order())) return false;
  return is_isomorphic(g, extremal_graph(g.order()));
}

namespace {

struct HamiltonSearch {
  const Graph& g;
  std::vector<int> path;
  std::uint64_t visited = 0;

  bool extend() {
    const int n = g.order();
    const int last = path.back();
    if (static_cast<int>(path.size()) == n) return g.has_edge(last, 1);
    std::uint64_t cand = g.neighbors(last) & ~visited;
    while (cand != 0) {
      const int v = std::countr_zero(cand) + 1;
      cand &= cand - 1;
      path.push_back(v);
      visited |= vertex_bit(v);
      if (extend()) return true;
      visited &= ~vertex_bit(v);
      path.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> find_hamiltonian_cycle(const Graph& g) {
  if (g.order() < 3) throw std::invalid_argument("Hamiltonicity needs n >= 3");
  for (int v = 1; v <= g.order(); ++v) {
    if (g.degree(v) < 2) return std::nullopt;
  }
  HamiltonSearch search{g, {1}, vertex_bit(1)};
  if (search.extend()) return search.path;
  return std::nullopt;
}

GraphFamily::GraphFamily(std::vector<Graph> graphs) : graphs_(std::move(graphs)) {
  n_ = static_cast<int>(graphs_.size());
  if (n_ < 1) throw std::invalid_argument("a family needs at least one graph");
  for (std::size_t i = 0; i < graphs_.size(); ++i) {
    if (graphs_[i].order() != n_) {
      throw std::invalid_argument("family of " + std::to_string(n_) + " graphs: graph " +
                                  std::to_string(i + 1) + " has order " +
                                  std::to_string(graphs_[i].order()));
    }
  }
}

Graph GraphFamily::union_graph() const {
  Graph u(n_);
  for (const auto& g : graphs_) {
    for (const auto& e : g.edges()) u.add_edge(e.u, e.v);
  }
  return u;
}

bool GraphFamily::all_equal() const {
  return std::all_of(graphs_.begin(), graphs_.end(), [&](const Graph& g) { return g == graphs_.front(); });
}

GraphFamily uniform_family(const Graph& g) {
  return GraphFamily(std::vector<Graph>(static_cast<std::size_t>(g.order()), g));
}

Edge RainbowCycle::edge_at(int k) const {
  const int n = length();
  return Edge(vertices[k], vertices[(k + 1) % n]);
}

std::vector<Edge> RainbowCycle::edges_by_color() const {
  std::vector<Edge> out(vertices.size());
  for (int k = 0; k < length(); ++k) out[colors[k] - 1] = edge_at(k);
  return out;
}

std::optional<std::string> rainbow_cycle_defect(const GraphFamily& family, const RainbowCycle& cycle) {
  const int n = family.order();
  if (cycle.length() != n) return "cycle has " + std::to_string(cycle.length()) + " vertices, expected " + std::to_string(n);
  if (static_cast<int>(cycle.colors.size()) != n) return "cycle has " + std::to_string(cycle.colors.size()) + " colors";
  std::uint64_t seen_vertices = 0;
  std::uint64_t seen_colors = 0;
  for (int k = 0; k < n; ++k) {
    const int v = cycle.vertices[k];
    const int c = cycle.colors[k];
    if (v < 1 || v > n) return "vertex label " + std::to_string(v) + " out of range";
    if (c < 1 || c > n) return "color " + std::to_string(c) + " out of range";
    if (seen_vertices & vertex_bit(v)) return "vertex " + std::to_string(v) + " repeated";
    if (seen_colors & vertex_bit(c)) return "color " + std::to_string(c) + " repeated";
    seen_vertices |= vertex_bit(v);
    seen_colors |= vertex_bit(c);
  }
  for (int k = 0; k < n; ++k) {
    const Edge e = cycle.edge_at(k);
    if (!family.member(cycle.colors[k]).has_edge(e)) {
      return "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} missing from graph " +
             std::to_string(cycle.colors[k]);
    }
  }
  return std::nullopt;
}

bool is_rainbow_hamiltonian_cycle(const GraphFamily& family, const RainbowCycle& cycle) {
  return !rainbow_cycle_defect(family, cycle).has_value();
}

std::optional<RainbowCycle> cycle_from_color_edges(int n, std::span<const Edge> edge_of_color) {
  if (static_cast<int>(edge_of_color.size()) != n || n < 3) return std::nullopt;
  // incident[v] holds up to two (neighbor, color) pairs.
  std::vector<std::vector<std::pair<int, int>>> incident(static_cast<std::size_t>(n) + 1);
  for (int c = 1; c <= n; ++c) {
    const Edge& e = edge_of_color[c - 1];
    if (e.u < 1 || e.v > n || e.u == e.v) return std::nullopt;
    incident[e.u].emplace_back(e.v, c);
    incident[e.v].emplace_back(e.u, c);
  }
  for (int v = 1; v <= n; ++v) {
    if (incident[v].size() != 2) return std::nullopt;
  }
  RainbowCycle cycle;
  int prev = 0;
  int prev_color = 0;
  int cur = 1;
  for (int step = 0; step < n; ++step) {
    cycle.vertices.push_back(cur);
    const auto& inc = incident[cur];
    // leave through the incidence not used to arrive
    const auto& out = (inc[0].first == prev && inc[0].second == prev_color) ? inc[1] : inc[0];
    cycle.colors.push_back(out.second);
    prev = cur;
    prev_color = out.second;
    cur = out.first;
  }
  if (cur != 1) return std::nullopt;
  std::vector<int> sorted = cycle.vertices;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expect(static_cast<std::size_t>(n));
  std::iota(expect.begin(), expect.end(), 1);
  if (sorted != expect) return std::nullopt;
  return cycle;
}

std::string to_string(const RainbowCycle& cycle) {
  std::ostringstream os;
  for (int k = 0; k < cycle.length(); ++k) {
    os << cycle.vertices[k] << " -[" << cycle.colors[k] << "]- ";
  }
  if (!cycle.vertices.empty()) os << cycle.vertices.front();
  return os.str();
}

}  // namespace rainbow
