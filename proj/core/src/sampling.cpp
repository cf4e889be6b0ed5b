#include "rainbow/sampling.hpp"

#include <algorithm>
#include <stdexcept>

#include "rainbow/constructions.hpp"

namespace rainbow {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng stream_rng(std::uint64_t seed, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL)));
}

Graph random_graph_with_edges(int n, int m, Rng& rng) {
  std::vector<Edge> pairs;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  }
  if (m < 0 || m > static_cast<int>(pairs.size())) throw std::invalid_argument("edge count out of range");
  // partial Fisher-Yates
  for (int k = 0; k < m; ++k) {
    std::uniform_int_distribution<int> pick(k, static_cast<int>(pairs.size()) - 1);
    std::swap(pairs[k], pairs[pick(rng)]);
  }
  pairs.resize(static_cast<std::size_t>(m));
  return new_graph(n, pairs);
}

Graph random_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph random_graph_in_size_range(int n, int lo, int hi, Rng& rng) {
  std::uniform_int_distribution<int> size(lo, hi);
  return random_graph_with_edges(n, size(rng), rng);
}

Graph random_extremal_graph(int n, Rng& rng) {
  std::uniform_int_distribution<int> vertex(1, n);
  const int pendant = vertex(rng);
  int attachment = vertex(rng);
  while (attachment == pendant) attachment = vertex(rng);
  return extremal_graph_with(n, pendant, attachment);
}

GraphFamily random_family(int n, double p, Rng& rng) {
  std::vector<Graph> graphs;
  graphs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) graphs.push_back(random_graph(n, p, rng));
  return GraphFamily(std::move(graphs));
}

}  // namespace rainbow
