#pragma once
#include "xrj/qrf.hpp"
#include "xrj/seeds.hpp"
#include "xrj/xconstruct.hpp"

namespace xrj {

// Energy conventions, all in one place. The "prime" value 1 - K^2 is what the
// factorization bookkeeping produces (see seed_energy_prime). The canonical
// equation and the half-line Schrodinger operator both sit one unit lower:
//   canonical epsilon = prime - 1 = -K^2, Schrodinger E = prime - 1.
inline Rat csle_from_prime(const Rat& e) { return e - 1; }
inline Rat schrodinger_from_prime(const Rat& e) { return e - 1; }
// prime energy of discrete level v: 1 - (lam- - lam+ - 2v - 1)^2
Rat eigen_prime_energy(int v, const LambdaPair& lam_o);

// density 1/(4(eta^2-1)) of the canonical equation on (1, inf)
QuasiRationalFn csle_density();

// reference Bose invariant of the undeformed equation:
//   (1-l-^2)/(4(eta+1)^2) + (1-l+^2)/(4(eta-1)^2) + (l-^2+l+^2-1)/(4(eta^2-1))
QuasiRationalFn ref_pfr(const LambdaPair& lam);

// quasi-rational seed solution at energy -K^2:
//   (eta+1)^{(s-l-+1)/2} (eta-1)^{(s+l++1)/2} P_m^{(s+l+, s-l-)}
QuasiRationalFn seed_fn(const SigmaPair& sigma, int m, const LambdaPair& lam);

// bound-state solution of the undeformed equation at level v
QuasiRationalFn eigenfunction_base(int v, const LambdaPair& lam_o);

// phi'' + (pfr + eps * density) * phi; identically zero iff phi solves the
// canonical equation at canonical energy eps
QuasiRationalFn csle_residual(const QuasiRationalFn& phi, const Rat& eps_csle,
                              const QuasiRationalFn& pfr);

// Bose invariant after one Darboux step with the seed (sigma, m): computed
// from the gauge factor (eta+1)^{-s-l-/2} (eta-1)^{-s+l+/2} / Pi
QuasiRationalFn transformed_pfr(const SigmaPair& sigma, int m, const LambdaPair& lam);

// the same invariant assembled from its pole decomposition (independent route)
QuasiRationalFn transformed_pfr_poles(const SigmaPair& sigma, int m, const LambdaPair& lam);

// exact limit of eta^2 * pfr as eta -> inf (throws unless the orders match)
Rat pfr_tail_limit(const QuasiRationalFn& pfr);

// q-coefficient of the first-order self-adjoint form implied by the gauge
// Phi = (eta-1)^{1/2} Psi with leading coefficient p = eta-1:
//   q = (eta-1)*pfr - 1/(4(eta-1)) - 1/(4(eta+1))
QuasiRationalFn prime_form_q(const LambdaPair& lam);

// Coefficients of the second-order equation satisfied by the deformed-family
// polynomials: (1-eta^2) Pi P'' + 2 B P' + (C0 - eps2/4 Pi) P = 0, with Pi the
// monic seed polynomial in the working frame.
struct HeineCoeffs {
  RatPoly pi;   // monic
  RatPoly b;
  RatPoly c0;
  Rat eps1;     // prime energy of the seed
  Rat eps2;     // prime energy of the level
};

HeineCoeffs heine_coeffs(XRFamily family, int seed_m, int v, const LambdaPair& lam_o);
RatPoly heine_residual(const HeineCoeffs& hc, const RatPoly& p);
// residual of the family polynomial itself (zero polynomial iff it satisfies
// its equation)
RatPoly heine_residual_xr(XRFamily family, int seed_m, int v, const LambdaPair& lam_o);

}  // namespace xrj
