#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

inline constexpr double kDefaultSpectralTolerance = 1e-10;
inline constexpr long long kPowerIterationBudget = 1'000'000;

/// Largest-eigenvalue estimate with a verifiable witness.
///
/// `lower` and `upper` are Collatz-Wielandt bounds of the Perron root
/// computed from `certificate`; `value` is the Rayleigh quotient of the
/// certificate, which lies in [lower, upper] and never exceeds the true
/// largest eigenvalue.
struct SpectralEstimate {
  double value = 0.0;
  double tolerance = kDefaultSpectralTolerance;
  double lower = 0.0;
  double upper = 0.0;
  std::vector<double> certificate;
  long long iterations = 0;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Row-major square matrix with nonnegative entries.
struct DenseMatrix {
  int dim = 0;
  std::vector<double> entries;

  explicit DenseMatrix(int d = 0) : dim(d), entries(static_cast<std::size_t>(d) * d, 0.0) {}
  double& at(int r, int c) { return entries[static_cast<std::size_t>(r) * dim + c]; }
  double at(int r, int c) const { return entries[static_cast<std::size_t>(r) * dim + c]; }
};

DenseMatrix adjacency_matrix(const Graph& g);
DenseMatrix signless_laplacian_matrix(const Graph& g);

/// Perron root of a symmetric nonnegative matrix: shifted power iteration on
/// M + I, run per irreducible block, stopped once the Collatz-Wielandt
/// bracket is narrower than `tol`. Throws ConvergenceError when the budget
/// runs out.
SpectralEstimate perron_root(const DenseMatrix& m, double tol = kDefaultSpectralTolerance,
                             long long budget = kPowerIterationBudget);

SpectralEstimate spectral_radius(const Graph& g, double tol = kDefaultSpectralTolerance);
SpectralEstimate signless_laplacian_radius(const Graph& g, double tol = kDefaultSpectralTolerance);

/// x^T M x / x^T x.
double rayleigh_quotient(const DenseMatrix& m, const std::vector<double>& x);

/// e(G) >= rho(rho+1)/2 - 1e-6.
bool stanley_check(const Graph& g);

enum class SpectralMatrix { adjacency, signless_laplacian };

enum class Comparison { below, equal, above };

struct ThresholdDecision {
  Comparison result = Comparison::below;
  /// The float estimate sat within tol of the threshold and the exact
  /// inertia computation decided the outcome.
  bool borderline = false;
  SpectralEstimate estimate;
};

/// Compares the largest eigenvalue of A(G) or S(G) against an integer
/// threshold. Clear cases use the float bracket; the band
/// [threshold - tol, threshold + tol] is resolved by exact rational inertia
/// of threshold*I - M.
ThresholdDecision compare_largest_eigenvalue(const Graph& g, long long threshold, SpectralMatrix kind,
                                             double tol = kDefaultSpectralTolerance);

/// Exact count of eigenvalues of the integer symmetric matrix m that are
/// greater than / equal to t (Sylvester inertia of t*I - m).
struct EigenvalueCount {
  int above = 0;
  int equal = 0;
};
EigenvalueCount exact_eigenvalue_count(const std::vector<std::vector<long long>>& m, long long t);

std::vector<std::vector<long long>> integer_adjacency(const Graph& g);
std::vector<std::vector<long long>> integer_signless_laplacian(const Graph& g);

/// Quotient of an equitable partition; entry (u, w) is the number of
/// neighbours in part w of any vertex in part u.
struct QuotientMatrix {
  int dim = 0;
  std::vector<std::vector<long long>> entries;
  std::vector<int> part_sizes;
};

class NotEquitableError : public std::runtime_error {
 public:
  NotEquitableError(int vertex, int part, int target_part, const std::string& what)
      : std::runtime_error(what), vertex_(vertex), part_(part), target_part_(target_part) {}
  int vertex() const { return vertex_; }
  int part() const { return part_; }
  int target_part() const { return target_part_; }

 private:
  int vertex_;
  int part_;
  int target_part_;
};

/// Parts are lists of 1-based labels that must partition [n]; throws
/// std::invalid_argument otherwise and NotEquitableError naming the first
/// vertex whose neighbour count into some part differs from its part-mates.
QuotientMatrix verify_equitable_partition(const Graph& g, const std::vector<std::vector<int>>& parts);

/// Largest eigenvalue of the quotient, computed on the symmetrised form
/// D^{1/2} Q D^{-1/2} with D = diag(part sizes).
SpectralEstimate quotient_largest_eigenvalue(const QuotientMatrix& q, double tol = kDefaultSpectralTolerance);

/// det(t I - M) for an integer matrix, exact.
long long characteristic_value(const std::vector<std::vector<long long>>& m, long long t);

/// The 4x4 quotient of K1 v (K_{n-2} u K1) minus one clique edge, parts
/// ordered {pendant}, {dominating}, {ends of the deleted edge}, {rest}.
QuotientMatrix clique_edge_deleted_quotient(int n);

/// Parts realising clique_edge_deleted_quotient for extremal_graph(n) with
/// the clique edge {2,3} removed.
std::vector<std::vector<int>> clique_edge_deleted_parts(int n);

struct PolynomialSigns {
  int at_n_minus_2 = 0;
  int at_n_minus_3 = 0;
  long long value_n_minus_2 = 0;
  long long value_n_minus_3 = 0;
};

/// Signs of psi_n(n-2) and psi_n(n-3), psi_n the characteristic polynomial of
/// clique_edge_deleted_quotient(n). Exact integer arithmetic; n >= 5.
PolynomialSigns quotient_polynomial_signs(int n);

struct AuditCase {
  std::string description;
  Graph graph;
  Comparison versus_bound = Comparison::below;
  double radius = 0.0;
  bool borderline = false;
  /// For equality cases: the graph is K_{n-1} or K_{n-1} u K1.
  bool expected_equality = false;
};

struct SubgraphAudit {
  int n = 0;
  int audited = 0;
  int violations = 0;
  int unexpected_equalities = 0;
  double max_radius = 0.0;
  std::vector<AuditCase> equality_cases;
  std::vector<AuditCase> violation_cases;

  bool clean() const { return violations == 0 && unexpected_equalities == 0; }
};

/// Audits proper subgraphs of K1 v (K_{n-2} u K1): every one-edge deletion,
/// every two-edge deletion, and every single-vertex deletion. Confirms
/// rho <= n-2 and that equality only occurs at K_{n-1} and K_{n-1} u K1.
/// 4 <= n <= 8.
SubgraphAudit subgraph_radius_audit(int n);

}  // namespace rainbow
