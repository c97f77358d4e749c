#pragma once
#include <string>
#include <utility>

#include "xrj/jacobi.hpp"

namespace xrj {

// sign pattern of a seed solution; sigma_inf = 0 means "not set"
struct SigmaPair {
  int sigma_minus = 1;
  int sigma_plus = 1;
  int sigma_inf = 0;
};

enum class XFamily { PDRaw, XB, Xm, XRa, XRaPrime, XRb };

inline const char* family_name(XFamily f) {
  switch (f) {
    case XFamily::PDRaw: return "pd-raw";
    case XFamily::XB: return "xb";
    case XFamily::Xm: return "xm";
    case XFamily::XRa: return "xr-a";
    case XFamily::XRaPrime: return "xr-a'";
    case XFamily::XRb: return "xr-b";
  }
  return "?";
}

struct XPolyResult {
  RatPoly poly;    // monic
  int kappa_minus = 0;
  int kappa_plus = 0;
  int N = 0;       // degree after endpoint-factor stripping
  XFamily family = XFamily::XB;
  Rat pre_leading; // leading coefficient before the monic normalization
  std::string provenance;
};

// S-polynomial of degree n >= 1 at parameters (lam_plus, lam_minus)
RatPoly s_poly(int n, const Rat& lam_plus, const Rat& lam_minus);

// Polynomial determinant of degrees (m, n) at lam with the sign pattern
// sigma applied to the first (degree-m) column:
//   D = P_m^{(s+ l+, s- l-)} * S_{n+1}^{(l+, l-)} - S_{m+1}^{(s+ l+, s- l-)} * P_n^{(l+, l-)}
RatPoly poly_det(int m, int n, const LambdaPair& lam, const SigmaPair& sigma);

// Strip simple endpoint factors (eta+1)^k-, (eta-1)^k+ with k in {0,1};
// throws SimpleRootViolation when a factor divides twice.
XPolyResult factor_pd(const RatPoly& d);

// Exceptional X_m Jacobi polynomial of degree m+n via the closed two-term
// form; returns the polynomial and its exact leading coefficient.
// Throws DivisionByZero when alpha+n+1 = 0.
std::pair<RatPoly, Rat> xm_jacobi(int m, int n, const JacobiParams& prm);

enum class XRFamily { a, a_prime, b };

// sign pattern handed to the determinant and the expected endpoint-stripping
// counts, both in the quadrant-II working frame
SigmaPair xr_sigma(XRFamily family);
std::pair<int, int> xr_kappa(XRFamily family);
const char* xr_family_label(XRFamily family);

// Multi-indexed exceptional polynomial for the deformed half-line families,
// built from the quadrant-II polynomial determinant and endpoint stripping.
XPolyResult xr_jacobi(XRFamily family, int seed_m, int v, const LambdaPair& lam_o);

struct ReversedXmReport {
  bool equal = false;
  bool gate_ok = false;
  RatPoly lhs;  // monic family-a polynomial
  RatPoly rhs;  // monic reflected X_m polynomial
  Rat k_hat;    // leading coefficient of the X_m polynomial
};

// family-a polynomial (seed degree seed_m, level v) versus the reflected
// X_m Jacobi polynomial at (alpha, beta) = (lam_o- - 1, lam_o+ + 1)
ReversedXmReport xr_equals_reversed_xm(int seed_m, int v, const LambdaPair& lam_o);

}  // namespace xrj
