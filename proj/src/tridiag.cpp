#include "xrj/tridiag.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace xrj {

int tridiag_count_below(const std::vector<double>& d, const std::vector<double>& e, double x) {
  const size_t n = d.size();
  if (e.size() + 1 != n) throw std::invalid_argument("tridiag: off-diagonal size mismatch");
  int count = 0;
  double q = d[0] - x;
  if (q < 0) ++count;
  const double tiny = std::numeric_limits<double>::min();
  for (size_t i = 1; i < n; ++i) {
    if (q == 0) q = tiny;  // standard safeguard against exact breakdown
    q = (d[i] - x) - e[i - 1] * e[i - 1] / q;
    if (q < 0) ++count;
  }
  return count;
}

double tridiag_kth(const std::vector<double>& d, const std::vector<double>& e, int j) {
  const size_t n = d.size();
  if (j < 0 || static_cast<size_t>(j) >= n)
    throw std::invalid_argument("tridiag: eigenvalue index out of range");
  // Gershgorin enclosure
  double lo = d[0], hi = d[0];
  for (size_t i = 0; i < n; ++i) {
    double r = 0;
    if (i > 0) r += std::fabs(e[i - 1]);
    if (i + 1 < n) r += std::fabs(e[i]);
    lo = std::min(lo, d[i] - r);
    hi = std::max(hi, d[i] + r);
  }
  double a = lo, b = hi;
  // invariant: count_below(a) <= j < count_below(b)
  for (int iter = 0; iter < 120 && b - a > 1e-15 * std::max(1.0, std::fabs(a) + std::fabs(b));
       ++iter) {
    double mid = 0.5 * (a + b);
    if (tridiag_count_below(d, e, mid) <= j) a = mid;
    else b = mid;
  }
  return 0.5 * (a + b);
}

std::vector<double> tridiag_smallest(const std::vector<double>& d,
                                     const std::vector<double>& e, int k) {
  const size_t n = d.size();
  if (k < 1 || static_cast<size_t>(k) > n)
    throw std::invalid_argument("tridiag: eigenvalue count out of range");
  std::vector<double> out(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) out[static_cast<size_t>(j)] = tridiag_kth(d, e, j);
  return out;
}

}  // namespace xrj
