// Exact rational/integer linear algebra for sign decisions.

#include <boost/multiprecision/cpp_int.hpp>
#include <limits>
#include <stdexcept>
#include <utility>

#include "rainbow/spectral.hpp"

namespace rainbow {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

EigenvalueCount exact_eigenvalue_count(const std::vector<std::vector<long long>>& m, long long t) {
  const std::size_t d = m.size();
  std::vector<std::vector<cpp_rational>> b(d, std::vector<cpp_rational>(d));
  for (std::size_t i = 0; i < d; ++i) {
    if (m[i].size() != d) throw std::invalid_argument("matrix is not square");
    for (std::size_t j = 0; j < d; ++j) {
      if (m[i][j] != m[j][i]) throw std::invalid_argument("matrix is not symmetric");
      b[i][j] = (i == j ? t : 0) - m[i][j];
    }
  }

  // Congruence diagonalisation of t*I - m; its negative entries count the
  // eigenvalues of m above t, its zeros the eigenvalues equal to t.
  EigenvalueCount count;
  auto swap_index = [&](std::size_t p, std::size_t k) {
    if (p == k) return;
    std::swap(b[p], b[k]);
    for (auto& row : b) std::swap(row[p], row[k]);
  };
  for (std::size_t k = 0; k < d; ++k) {
    std::size_t pivot = d;
    for (std::size_t p = k; p < d; ++p) {
      if (b[p][p] != 0) {
        pivot = p;
        break;
      }
    }
    if (pivot == d) {
      std::size_t p = d;
      std::size_t q = d;
      for (std::size_t i = k; i < d && p == d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
          if (b[i][j] != 0) {
            p = i;
            q = j;
            break;
          }
        }
      }
      if (p == d) {
        count.equal += static_cast<int>(d - k);
        return count;
      }
      // row/col p += row/col q makes the diagonal entry 2*b[p][q] != 0
      for (std::size_t j = 0; j < d; ++j) b[p][j] += b[q][j];
      for (std::size_t i = 0; i < d; ++i) b[i][p] += b[i][q];
      pivot = p;
    }
    swap_index(pivot, k);
    const cpp_rational piv = b[k][k];
    if (piv < 0) ++count.above;
    for (std::size_t i = k + 1; i < d; ++i) {
      if (b[i][k] == 0) continue;
      const cpp_rational f = b[i][k] / piv;
      for (std::size_t j = k; j < d; ++j) b[i][j] -= f * b[k][j];
    }
    for (std::size_t i = k + 1; i < d; ++i) b[k][i] = 0;
    for (std::size_t i = k + 1; i < d; ++i) b[i][k] = 0;
  }
  return count;
}

long long characteristic_value(const std::vector<std::vector<long long>>& m, long long t) {
  const std::size_t d = m.size();
  if (d == 0) return 1;
  std::vector<std::vector<cpp_int>> a(d, std::vector<cpp_int>(d));
  for (std::size_t i = 0; i < d; ++i) {
    if (m[i].size() != d) throw std::invalid_argument("matrix is not square");
    for (std::size_t j = 0; j < d; ++j) a[i][j] = cpp_int(i == j ? t : 0) - m[i][j];
  }
  // Bareiss fraction-free elimination
  int sign = 1;
  cpp_int prev = 1;
  for (std::size_t k = 0; k + 1 < d; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < d && a[p][k] == 0) ++p;
      if (p == d) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < d; ++i) {
      for (std::size_t j = k + 1; j < d; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  cpp_int det = a[d - 1][d - 1] * sign;
  if (det > cpp_int(std::numeric_limits<long long>::max()) || det < cpp_int(std::numeric_limits<long long>::min())) {
    throw std::overflow_error("characteristic value does not fit in 64 bits");
  }
  return det.convert_to<long long>();
}

}  // namespace rainbow
