#pragma once
#include <string>
#include <vector>

#include "xrj/xconstruct.hpp"

namespace xrj {

enum class SeedType { a, a_prime, b, b_prime, c, d, d_prime };

inline const char* seed_type_name(SeedType t) {
  switch (t) {
    case SeedType::a: return "a";
    case SeedType::a_prime: return "a'";
    case SeedType::b: return "b";
    case SeedType::b_prime: return "b'";
    case SeedType::c: return "c";
    case SeedType::d: return "d";
    case SeedType::d_prime: return "d'";
  }
  return "?";
}

struct SeedSpec {
  SigmaPair sigma;   // sigma_inf filled in
  int m = 0;
  LambdaPair lam_o;
  SeedType type = SeedType::a;
  Rat energy_prime;  // 1 - K^2
};

// K = sigma- lam- + sigma+ lam+ + 2m + 1
Rat seed_k(const SigmaPair& sigma, int m, const LambdaPair& lam_o);
// prime-convention energy 1 - K^2
Rat seed_energy_prime(const SigmaPair& sigma, int m, const LambdaPair& lam_o);
// asymptotic sign -sign(K); throws RangeViolation when K = 0
int derive_sigma_inf(const SigmaPair& sigma, int m, const LambdaPair& lam_o);

// Jacobi parameters of the seed polynomial P_m^{(s+ l+, s- l-)}
JacobiParams seed_poly_params(const SigmaPair& sigma, const LambdaPair& lam_o);
// the seed polynomial itself (may throw DegreeCollapse for degenerate rows)
RatPoly seed_poly(const SigmaPair& sigma, int m, const LambdaPair& lam_o);

// Match (sigma-, sigma+, sigma_inf) and the degree range against the seed
// classification table. Throws NoSuchType for unlisted sign triples and
// RangeViolation when m falls outside the row's range.
SeedSpec classify(const SigmaPair& sigma, int sigma_inf, int m, const LambdaPair& lam_o);

struct Spectrum {
  LambdaPair lam_o;
  bool empty = true;
  int v_max = -1;
  std::vector<Rat> energies;  // prime convention, strictly increasing
  // true when the top level sits exactly at the K=0 boundary (prime energy 1)
  bool marginal_top = false;
};

// Discrete spectrum (prime convention). An empty spectrum is a signal, not
// an error.
Spectrum spectrum(const LambdaPair& lam_o);

struct AdmissibilityReport {
  bool admissible = false;
  bool spectrum_nonempty = false;
  bool energy_below_ground = false;  // strictly below the lowest level
  bool nodeless = false;             // Sturm count 0 on (1, inf)
  bool ff_usable = true;             // type b only: lam+ > 1/2
  bool klein_applicable = false;     // type d with even m
  bool klein_positive = false;
  bool degenerate_poly = false;      // seed polynomial degree collapsed
  std::string note;
};

// Uniform admissibility gate: nonempty spectrum, energy strictly below the
// ground level, and a nodeless seed polynomial on (1, inf). Type-specific
// diagnostics are reported alongside.
AdmissibilityReport is_admissible(const SeedSpec& seed);

}  // namespace xrj
