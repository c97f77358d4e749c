#pragma once
#include <string>
#include <vector>

#include "xrj/ratpoly.hpp"

namespace xrj {

struct JacobiParams {
  Rat alpha;  // pairs with (1-x) / the eta=+1 endpoint
  Rat beta;   // pairs with (1+x) / the eta=-1 endpoint
};

enum class Quadrant { I, II, III, IV };

// Exponent-difference pair (lam_minus attached to eta=-1, lam_plus to eta=+1).
// Zero components are rejected: every construction needs a definite sign.
struct LambdaPair {
  Rat lam_minus;
  Rat lam_plus;
  LambdaPair(Rat lm, Rat lp) : lam_minus(std::move(lm)), lam_plus(std::move(lp)) {
    if (lam_minus == 0 || lam_plus == 0)
      throw RangeViolation("LambdaPair components must be nonzero");
  }
  Quadrant quadrant() const {
    if (lam_minus > 0) return lam_plus > 0 ? Quadrant::I : Quadrant::IV;
    return lam_plus > 0 ? Quadrant::II : Quadrant::III;
  }
};

// generalized binomial coefficient C(a, k) for rational a, integer k >= 0
Rat gen_binom(const Rat& a, int k);
// rising factorial (a)_k
Rat pochhammer(const Rat& a, int k);

// exact leading coefficient of the degree-n Jacobi polynomial
Rat jacobi_leading(int n, const JacobiParams& prm);

// Degree-n Jacobi polynomial built from the exact binomial double sum (valid
// for arbitrary rational parameters). Throws DegreeCollapse when the leading
// coefficient vanishes (alpha+beta in {-n-1, ..., -2n}). n = -1 gives the
// zero polynomial.
RatPoly jacobi(int n, const JacobiParams& prm);

// derivative via the parameter-shift identity; must equal
// differentiate(jacobi(n, prm)) identically
RatPoly jacobi_deriv(int n, const JacobiParams& prm);

// polynomial part of the base radial eigenfunctions in the half-line
// variable z (eta = 2z+1), as contracted: jacobi(v, {-lam_minus, lam_plus})
// composed with 2z+1
RatPoly r_jacobi(int v, const LambdaPair& lam);

struct IdentityReport {
  bool pass = true;
  int checks = 0;
  std::vector<std::string> failures;
};

// exact verification of the parameter-shift / splitting identities on random
// rational parameter pairs (deterministic RNG)
IdentityReport verify_contiguous_identities(int n_max, int samples);

}  // namespace xrj
