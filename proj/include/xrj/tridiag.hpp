#pragma once
#include <vector>

namespace xrj {

// Number of eigenvalues of the symmetric tridiagonal matrix (diag d,
// off-diag e) strictly below x, by the inertia of the shifted LDL^T
// factorization.
int tridiag_count_below(const std::vector<double>& d, const std::vector<double>& e, double x);

// The j-th smallest eigenvalue (0-based), found by bisection on the inertia
// count within the Gershgorin enclosure. Deterministic; safe to call
// concurrently.
double tridiag_kth(const std::vector<double>& d, const std::vector<double>& e, int j);

// The k smallest eigenvalues (== tridiag_kth for j = 0..k-1).
std::vector<double> tridiag_smallest(const std::vector<double>& d,
                                     const std::vector<double>& e, int k);

}  // namespace xrj
