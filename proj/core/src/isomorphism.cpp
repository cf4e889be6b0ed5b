#include <algorithm>
#include <bit>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {
namespace {

// Degree plus sorted neighbour degrees; equal signatures are necessary for
// a vertex pair to be matched by an isomorphism.
std::vector<std::vector<int>> signatures(const Graph& g) {
  std::vector<std::vector<int>> sig(static_cast<std::size_t>(g.order()));
  for (int v = 1; v <= g.order(); ++v) {
    auto& s = sig[v - 1];
    s.push_back(g.degree(v));
    std::uint64_t nb = g.neighbors(v);
    while (nb != 0) {
      const int u = std::countr_zero(nb) + 1;
      nb &= nb - 1;
      s.push_back(g.degree(u));
    }
    std::sort(s.begin() + 1, s.end());
  }
  return sig;
}

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  std::vector<std::vector<int>> sig_a;
  std::vector<std::vector<int>> sig_b;
  std::vector<int> order;    // vertices of a in matching order
  std::vector<int> image;    // image[v-1] in b, 0 if unmapped
  std::uint64_t used = 0;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    for (int w = 1; w <= b.order(); ++w) {
      if ((used & vertex_bit(w)) != 0 || sig_a[v - 1] != sig_b[w - 1]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const int u = order[k];
        ok = a.has_edge(u, v) == b.has_edge(image[u - 1], w);
      }
      if (!ok) continue;
      image[v - 1] = w;
      used |= vertex_bit(w);
      if (extend(depth + 1)) return true;
      used &= ~vertex_bit(w);
      image[v - 1] = 0;
    }
    return false;
  }
};

}  // namespace

bool is_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.order() != g2.order() || g1.edge_count() != g2.edge_count()) return false;
  IsoSearch search{g1, g2, signatures(g1), signatures(g2), {}, {}, 0};
  auto sa = search.sig_a;
  auto sb = search.sig_b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;

  // high-degree vertices first: they constrain the most pairs
  search.order.resize(static_cast<std::size_t>(g1.order()));
  for (int v = 1; v <= g1.order(); ++v) search.order[v - 1] = v;
  std::stable_sort(search.order.begin(), search.order.end(),
                   [&](int x, int y) { return g1.degree(x) > g1.degree(y); });
  search.image.assign(static_cast<std::size_t>(g1.order()), 0);
  return search.extend(0);
}

}  // namespace rainbow
