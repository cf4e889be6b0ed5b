#include "rainbow/spectral.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>

namespace rainbow {

DenseMatrix adjacency_matrix(const Graph& g) {
  DenseMatrix m(g.order());
  for (const auto& e : g.edges()) {
    m.at(e.u - 1, e.v - 1) = 1.0;
    m.at(e.v - 1, e.u - 1) = 1.0;
  }
  return m;
}

DenseMatrix signless_laplacian_matrix(const Graph& g) {
  DenseMatrix m = adjacency_matrix(g);
  for (int v = 1; v <= g.order(); ++v) m.at(v - 1, v - 1) = g.degree(v);
  return m;
}

double rayleigh_quotient(const DenseMatrix& m, const std::vector<double>& x) {
  double num = 0.0;
  double den = 0.0;
  for (int i = 0; i < m.dim; ++i) {
    double row = 0.0;
    for (int j = 0; j < m.dim; ++j) row += m.at(i, j) * x[j];
    num += x[i] * row;
    den += x[i] * x[i];
  }
  return den > 0.0 ? num / den : 0.0;
}

namespace {

std::vector<std::vector<int>> irreducible_blocks(const DenseMatrix& m) {
  std::vector<int> block(static_cast<std::size_t>(m.dim), -1);
  std::vector<std::vector<int>> blocks;
  for (int s = 0; s < m.dim; ++s) {
    if (block[s] >= 0) continue;
    const int id = static_cast<int>(blocks.size());
    blocks.push_back({s});
    block[s] = id;
    for (std::size_t head = 0; head < blocks[id].size(); ++head) {
      const int i = blocks[id][head];
      for (int j = 0; j < m.dim; ++j) {
        if (j != i && block[j] < 0 && m.at(i, j) != 0.0) {
          block[j] = id;
          blocks[id].push_back(j);
        }
      }
    }
    std::sort(blocks[id].begin(), blocks[id].end());
  }
  return blocks;
}

struct BlockResult {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::vector<double> vec;  // indexed like the block
  long long iterations = 0;
};

BlockResult block_perron(const DenseMatrix& m, const std::vector<int>& idx, double tol, long long budget) {
  const int d = static_cast<int>(idx.size());
  BlockResult r;
  if (d == 1) {
    const double a = m.at(idx[0], idx[0]);
    r.value = r.lower = r.upper = a;
    r.vec = {1.0};
    return r;
  }
  std::vector<double> x(static_cast<std::size_t>(d), 1.0);
  std::vector<double> y(static_cast<std::size_t>(d), 0.0);
  for (long long it = 0; it < budget; ++it) {
    for (int a = 0; a < d; ++a) {
      double s = 0.0;
      for (int b = 0; b < d; ++b) s += m.at(idx[a], idx[b]) * x[b];
      y[a] = s;
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    double num = 0.0;
    double den = 0.0;
    for (int a = 0; a < d; ++a) {
      const double ratio = y[a] / x[a];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      num += x[a] * y[a];
      den += x[a] * x[a];
    }
    const double rq = num / den;
    if (hi - lo <= tol) {
      r.value = std::clamp(rq, lo, hi);
      r.lower = lo;
      r.upper = hi;
      r.iterations = it + 1;
      const double norm = std::sqrt(den);
      r.vec.resize(static_cast<std::size_t>(d));
      for (int a = 0; a < d; ++a) r.vec[a] = x[a] / norm;
      return r;
    }
    // (M + I) x, rescaled so the largest entry is 1
    double top = 0.0;
    for (int a = 0; a < d; ++a) {
      x[a] += y[a];
      top = std::max(top, x[a]);
    }
    for (int a = 0; a < d; ++a) x[a] /= top;
  }
  throw ConvergenceError("power iteration did not reach tolerance " + std::to_string(tol) + " within " +
                         std::to_string(budget) + " iterations");
}

}  // namespace

SpectralEstimate perron_root(const DenseMatrix& m, double tol, long long budget) {
  if (m.dim < 1) throw std::invalid_argument("perron_root needs a nonempty matrix");
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  SpectralEstimate est;
  est.tolerance = tol;
  est.certificate.assign(static_cast<std::size_t>(m.dim), 0.0);
  bool first = true;
  for (const auto& idx : irreducible_blocks(m)) {
    BlockResult r = block_perron(m, idx, tol, budget);
    est.iterations += r.iterations;
    if (first) {
      est.lower = r.lower;
      est.upper = r.upper;
    } else {
      est.lower = std::max(est.lower, r.lower);
      est.upper = std::max(est.upper, r.upper);
    }
    if (first || r.value > est.value) {
      est.value = r.value;
      std::fill(est.certificate.begin(), est.certificate.end(), 0.0);
      for (std::size_t a = 0; a < idx.size(); ++a) est.certificate[idx[a]] = r.vec[a];
    }
    first = false;
  }
  return est;
}

SpectralEstimate spectral_radius(const Graph& g, double tol) { return perron_root(adjacency_matrix(g), tol); }

SpectralEstimate signless_laplacian_radius(const Graph& g, double tol) {
  return perron_root(signless_laplacian_matrix(g), tol);
}

bool stanley_check(const Graph& g) {
  const double rho = spectral_radius(g).value;
  return g.edge_count() >= rho * (rho + 1.0) / 2.0 - 1e-6;
}

std::vector<std::vector<long long>> integer_adjacency(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (const auto& e : g.edges()) {
    m[e.u - 1][e.v - 1] = 1;
    m[e.v - 1][e.u - 1] = 1;
  }
  return m;
}

std::vector<std::vector<long long>> integer_signless_laplacian(const Graph& g) {
  auto m = integer_adjacency(g);
  for (int v = 1; v <= g.order(); ++v) m[v - 1][v - 1] = g.degree(v);
  return m;
}

ThresholdDecision compare_largest_eigenvalue(const Graph& g, long long threshold, SpectralMatrix kind, double tol) {
  ThresholdDecision d;
  d.estimate = kind == SpectralMatrix::adjacency ? spectral_radius(g, tol) : signless_laplacian_radius(g, tol);
  const double t = static_cast<double>(threshold);
  if (d.estimate.value - tol > t) {
    d.result = Comparison::above;
  } else if (d.estimate.value + tol < t) {
    d.result = Comparison::below;
  } else {
    d.borderline = true;
    const auto m = kind == SpectralMatrix::adjacency ? integer_adjacency(g) : integer_signless_laplacian(g);
    const auto count = exact_eigenvalue_count(m, threshold);
    d.result = count.above > 0 ? Comparison::above : (count.equal > 0 ? Comparison::equal : Comparison::below);
  }
  return d;
}

QuotientMatrix verify_equitable_partition(const Graph& g, const std::vector<std::vector<int>>& parts) {
  const int n = g.order();
  std::vector<int> part_of(static_cast<std::size_t>(n) + 1, -1);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p].empty()) throw std::invalid_argument("part " + std::to_string(p + 1) + " is empty");
    for (int v : parts[p]) {
      if (v < 1 || v > n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
      if (part_of[v] >= 0) throw std::invalid_argument("vertex " + std::to_string(v) + " appears in two parts");
      part_of[v] = static_cast<int>(p);
    }
  }
  for (int v = 1; v <= n; ++v) {
    if (part_of[v] < 0) throw std::invalid_argument("vertex " + std::to_string(v) + " is in no part");
  }

  QuotientMatrix q;
  q.dim = static_cast<int>(parts.size());
  q.entries.assign(parts.size(), std::vector<long long>(parts.size(), 0));
  for (std::size_t p = 0; p < parts.size(); ++p) {
    q.part_sizes.push_back(static_cast<int>(parts[p].size()));
    for (std::size_t w = 0; w < parts.size(); ++w) {
      std::uint64_t target = 0;
      for (int u : parts[w]) target |= vertex_bit(u);
      const int expected = std::popcount(g.neighbors(parts[p].front()) & target);
      for (int v : parts[p]) {
        const int count = std::popcount(g.neighbors(v) & target);
        if (count != expected) {
          throw NotEquitableError(v, static_cast<int>(p) + 1, static_cast<int>(w) + 1,
                                  "vertex " + std::to_string(v) + " of part " + std::to_string(p + 1) + " has " +
                                      std::to_string(count) + " neighbours in part " + std::to_string(w + 1) +
                                      ", vertex " + std::to_string(parts[p].front()) + " has " +
                                      std::to_string(expected));
        }
      }
      q.entries[p][w] = expected;
    }
  }
  return q;
}

SpectralEstimate quotient_largest_eigenvalue(const QuotientMatrix& q, double tol) {
  DenseMatrix s(q.dim);
  for (int u = 0; u < q.dim; ++u) {
    for (int w = 0; w < q.dim; ++w) {
      s.at(u, w) = std::sqrt(static_cast<double>(q.part_sizes[u]) / q.part_sizes[w]) *
                   static_cast<double>(q.entries[u][w]);
    }
  }
  return perron_root(s, tol);
}

QuotientMatrix clique_edge_deleted_quotient(int n) {
  if (n < 5) throw std::invalid_argument("the four-part quotient needs n >= 5");
  const long long r = n - 4;
  QuotientMatrix q;
  q.dim = 4;
  q.entries = {{0, 1, 0, 0}, {1, 0, 2, r}, {0, 1, 0, r}, {0, 1, 2, r - 1}};
  q.part_sizes = {1, 1, 2, n - 4};
  return q;
}

std::vector<std::vector<int>> clique_edge_deleted_parts(int n) {
  if (n < 5) throw std::invalid_argument("the four-part quotient needs n >= 5");
  std::vector<int> rest(static_cast<std::size_t>(n - 4));
  std::iota(rest.begin(), rest.end(), 4);
  return {{n}, {1}, {2, 3}, rest};
}

namespace {
int sign_of(long long v) { return (v > 0) - (v < 0); }
}  // namespace

PolynomialSigns quotient_polynomial_signs(int n) {
  if (n < 5) throw std::invalid_argument("psi_n is defined for n >= 5");
  const auto q = clique_edge_deleted_quotient(n);
  PolynomialSigns s;
  s.value_n_minus_2 = characteristic_value(q.entries, n - 2);
  s.value_n_minus_3 = characteristic_value(q.entries, n - 3);
  s.at_n_minus_2 = sign_of(s.value_n_minus_2);
  s.at_n_minus_3 = sign_of(s.value_n_minus_3);
  return s;
}

namespace {

AuditCase audit_one(const Graph& h, int n, std::string description) {
  AuditCase c;
  c.description = std::move(description);
  const auto d = compare_largest_eigenvalue(h, n - 2, SpectralMatrix::adjacency);
  c.graph = h;
  c.versus_bound = d.result;
  c.radius = d.estimate.value;
  c.borderline = d.borderline;
  if (d.result == Comparison::equal) {
    const Graph clique = complete_graph(n - 1);
    c.expected_equality = is_isomorphic(h, clique) || is_isomorphic(h, disjoint_union(clique, empty_graph(1)));
  }
  return c;
}

void record(SubgraphAudit& audit, AuditCase c) {
  ++audit.audited;
  audit.max_radius = std::max(audit.max_radius, c.radius);
  if (c.versus_bound == Comparison::above) {
    ++audit.violations;
    audit.violation_cases.push_back(std::move(c));
  } else if (c.versus_bound == Comparison::equal) {
    if (!c.expected_equality) ++audit.unexpected_equalities;
    audit.equality_cases.push_back(std::move(c));
  }
}

}  // namespace

SubgraphAudit subgraph_radius_audit(int n) {
  if (n < 4 || n > 8) throw std::invalid_argument("subgraph audit covers 4 <= n <= 8");
  SubgraphAudit audit;
  audit.n = n;
  const Graph star = extremal_graph(n);
  const auto edges = star.edges();
  for (std::size_t a = 0; a < edges.size(); ++a) {
    const Graph one = star.without_edge(edges[a].u, edges[a].v);
    record(audit, audit_one(one, n, "minus {" + std::to_string(edges[a].u) + "," + std::to_string(edges[a].v) + "}"));
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      const Graph two = one.without_edge(edges[b].u, edges[b].v);
      record(audit, audit_one(two, n,
                              "minus {" + std::to_string(edges[a].u) + "," + std::to_string(edges[a].v) + "},{" +
                                  std::to_string(edges[b].u) + "," + std::to_string(edges[b].v) + "}"));
    }
  }
  for (int v = 1; v <= n; ++v) {
    std::vector<int> keep;
    for (int u = 1; u <= n; ++u) {
      if (u != v) keep.push_back(u);
    }
    record(audit, audit_one(star.induced(keep), n, "delete vertex " + std::to_string(v)));
  }
  return audit;
}

}  // namespace rainbow
