#pragma once
#include <vector>

#include "xrj/qrf.hpp"
#include "xrj/seeds.hpp"
#include "xrj/sle.hpp"

namespace xrj {

struct PotentialSpec {
  LambdaPair lam_o;
  bool deformed = false;
  SeedSpec seed;          // meaningful when deformed
  QuasiRationalFn v_eta;  // exact potential in the eta = cosh 2r variable
  Rat g, h;               // base strengths: g(g-1)/sinh^2 r - h(h+1)/cosh^2 r
  PotentialSpec(const LambdaPair& lam, Rat g_, Rat h_)
      : lam_o(lam), seed{SigmaPair{}, 0, lam, SeedType::a, Rat(0)},
        g(std::move(g_)), h(std::move(h_)) {}
};

// undeformed hyperbolic potential, exactly
//   (1/2 - 2 lam-^2)/(eta+1) + (2 lam+^2 - 1/2)/(eta-1)
// with g = lam+ + 1/2, h = lam- - 1/2
PotentialSpec base_potential(const LambdaPair& lam_o);

// the same function assembled through the Bose-invariant route
//   -4(eta^2-1) I0(eta) + (eta^2+2)/(eta^2-1)
// (identically equal to base_potential(...).v_eta)
QuasiRationalFn base_potential_from_pfr(const LambdaPair& lam_o);

// One-step rational deformation by an admissible seed:
//   V_t = V - 4(eta^2-1) (I0_t - I0).
// Throws AdmissibilityError when the seed fails its gate (including an
// unusable type-b factorization function) and PoleInDomain if the result has
// a pole on (1, inf).
PotentialSpec build_potential(const SeedSpec& seed);

// potential value at radius r > 0
double potential_value(const PotentialSpec& spec, double r);

// bound-state energies in the Schrodinger convention (a marginal top level
// appears as exactly 0)
std::vector<Rat> analytic_energies(const LambdaPair& lam_o);

// deformed bound state at level v via the Wronskian quotient with the seed
QuasiRationalFn deformed_eigenfunction(const SeedSpec& seed, int v);

struct FdResult {
  std::vector<double> energies;      // Richardson-extrapolated
  std::vector<double> coarse, fine;  // raw eigenvalues on N and 2N points
  int n = 0;                         // coarse interior point count
  double r_min = 0, r_max = 0;
};

// Independent check: lowest k Dirichlet eigenvalues of -psi'' + V psi on
// [r_min, r_max] by central second differences on N and 2N interior points
// with Richardson extrapolation. Throws GridTooCoarse when the two grids
// disagree beyond 1e-2 * max(1, |E_0|).
FdResult fd_spectrum(const PotentialSpec& spec, double r_min, double r_max, int n,
                     int k, bool parallel = true);

}  // namespace xrj
