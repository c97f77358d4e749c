#pragma once
#include <string>
#include <vector>

#include "xrj/quadrature.hpp"
#include "xrj/seeds.hpp"
#include "xrj/sle.hpp"

namespace xrj {

enum class GramFamily { xr_a, xr_a_prime, xr_b, r_jacobi };

const char* gram_family_name(GramFamily f);

// Orthogonality weight of a family on (1, inf), as an exact quasi-rational
// function (denominator = squared seed polynomial for the deformed families).
QuasiRationalFn family_weight(GramFamily fam, int seed_m, const LambdaPair& lam_o);

struct GramReport {
  std::vector<int> levels;                    // included levels v
  std::vector<std::vector<double>> raw;       // inner products
  std::vector<std::vector<double>> normalized;  // |G_ij| / sqrt(G_ii G_jj)
  double max_offdiag = 0;                     // max normalized off-diagonal
  double max_error = 0;                       // max normalized quadrature error
  int total_nodes = 0;
};

// Gram matrix of the family over its normalizable levels
// (v with 2v + lam+ - lam- < -1). `parallel` selects the threaded kernel;
// both kernels produce bitwise-identical entries.
GramReport gram(GramFamily fam, int seed_m, const LambdaPair& lam_o, bool parallel = true);

struct CrossOrthoPair {
  int m1 = 0, m2 = 0;
  double value = 0;       // normalized inner product
  double error = 0;
};

struct CrossOrthoReport {
  std::vector<CrossOrthoPair> pairs;
  double max_offdiag = 0;
  double max_error = 0;
};

// Pairwise inner products of the reversed degree-(m+n) exceptional
// polynomials on (1, inf) under the shared weight
// (eta+1)^{-alpha-2} (eta-1)^{beta} / [P_n^{(beta-1, alpha+1)}]^2.
// Requires every m < (alpha - beta + 1)/2 (else RangeViolation).
CrossOrthoReport cross_ortho(const Rat& alpha, const Rat& beta, int n,
                             const std::vector<int>& ms, bool parallel = true);

struct ZeroCount {
  int left = 0;    // roots in (-inf, -1)
  int inside = 0;  // roots in (-1, 1)
  int right = 0;   // roots in (1, inf)
};

// exact root location counts of the degree-(m+n) exceptional polynomial
ZeroCount exceptional_zero_count(int m, int n, const JacobiParams& prm);

}  // namespace xrj
