#pragma once
#include <vector>

#include "xrj/qrf.hpp"

namespace xrj {

struct GaussJacobiRule {
  std::vector<double> nodes;    // ascending, interior of [-1, 1]
  std::vector<double> weights;  // for the weight (1-t)^A (1+t)^B
};

// n-point Gauss rule for the weight (1-t)^A (1+t)^B on [-1,1]; A, B > -1
GaussJacobiRule gauss_jacobi(int n, double A, double B);

struct QuadResult {
  double value = 0;
  double error = 0;  // |coarse - fine| two-level estimate
  int nodes = 0;     // nodes of the fine level, both pieces
};

// refinement level for the semi-infinite integrator (env XJACOBI_QUAD_LEVEL)
int quad_level();

// Integral of f over (1, inf). The integrand's endpoint and tail exponents
// are checked symbolically first: DivergentIntegral when either fails, and
// WeightPoleInInterval when the denominator vanishes on [1, inf).
QuadResult integrate_semiinf(const QuasiRationalFn& f);

// Integral over (-1, 1) of (1-x)^A (1+x)^B num(x)/den(x). Requires A, B > -1
// (else DivergentIntegral) and a denominator without zeros on [-1, 1] (else
// WeightPoleInInterval).
QuadResult integrate_finite_jacobi(const Rat& A, const Rat& B, const RatPoly& num,
                                   const RatPoly& den);

}  // namespace xrj
