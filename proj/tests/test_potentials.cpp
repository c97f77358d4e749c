#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "test_util.hpp"
#include "xrj/potentials.hpp"

using namespace xrj;
using testutil::rp;

namespace {
const LambdaPair kLam(Rat(11, 2), Rat(1, 2));
}

TEST_CASE("base potential in closed form") {
  PotentialSpec spec = base_potential(kLam);
  CHECK(spec.g == Rat(1));
  CHECK(spec.h == Rat(5));
  // lam+ = 1/2 kills the centrifugal part: V = -60/(eta+1) = -30/cosh^2 r
  CHECK(spec.v_eta == QuasiRationalFn(Rat(-1), Rat(0), RatPoly::constant(Rat(-60))));
  for (double r : {0.3, 1.0, 2.5}) {
    double expect = -30.0 / std::pow(std::cosh(r), 2);
    CHECK(potential_value(spec, r) == doctest::Approx(expect).epsilon(1e-13));
  }
  // generic pair keeps both parts
  PotentialSpec both = base_potential(LambdaPair(Rat(13, 2), Rat(3, 2)));
  double r = 0.7;
  double g = to_double(both.g), h = to_double(both.h);
  double expect = g * (g - 1) / std::pow(std::sinh(r), 2) -
                  h * (h + 1) / std::pow(std::cosh(r), 2);
  CHECK(potential_value(both, r) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("potential from the invariant route agrees exactly") {
  for (const LambdaPair& lam :
       {kLam, LambdaPair(Rat(13, 2), Rat(3, 2)), LambdaPair(Rat(7, 3), Rat(5, 4))})
    CHECK(base_potential(lam).v_eta == base_potential_from_pfr(lam));
}

TEST_CASE("analytic bound energies") {
  CHECK(analytic_energies(kLam) == std::vector<Rat>{Rat(-16), Rat(-4), Rat(0)});
  CHECK(analytic_energies(LambdaPair(Rat(13, 2), Rat(1, 2))) ==
        std::vector<Rat>{Rat(-25), Rat(-9), Rat(-1)});
  CHECK(analytic_energies(LambdaPair(Rat(1), Rat(2))).empty());
}

TEST_CASE("degree-0 deformations shift parameters (shape invariance)") {
  // same-sign seed: lam -> lam + 1
  SeedSpec a0 = classify({+1, +1, 0}, -1, 0, kLam);
  PotentialSpec va = build_potential(a0);
  CHECK(va.v_eta == base_potential(LambdaPair(kLam.lam_minus + 1, kLam.lam_plus + 1)).v_eta);
  CHECK(va.deformed);

  // opposite-sign degree-0 seed: lam -> lam - 1 (needs lam+ > 1/2 + 1 for a
  // usable factorization and a nonzero shifted component)
  LambdaPair lam2(Rat(11, 2), Rat(3, 2));
  SeedSpec b0 = classify({-1, -1, 0}, +1, 0, lam2);
  PotentialSpec vb = build_potential(b0);
  CHECK(vb.v_eta == base_potential(LambdaPair(lam2.lam_minus - 1, lam2.lam_plus - 1)).v_eta);
}

TEST_CASE("admissibility gates guard construction") {
  // type b at lam+ = 1/2: admissible but unusable
  CHECK_THROWS_AS(build_potential(classify({-1, -1, 0}, +1, 0, kLam)),
                  AdmissibilityError);
  // type c: energy inside the spectrum
  CHECK_THROWS_AS(build_potential(classify({-1, +1, 0}, +1, 0, kLam)),
                  AdmissibilityError);
  // degenerate a' seed
  CHECK_THROWS_AS(build_potential(classify({-1, +1, 0}, -1, 3, kLam)),
                  AdmissibilityError);
}

TEST_CASE("deformed eigenfunctions solve the transformed equation") {
  SeedSpec seed = classify({+1, +1, 0}, -1, 1, kLam);
  QuasiRationalFn it = transformed_pfr(seed.sigma, seed.m, kLam);
  for (int v : {0, 1, 2}) {
    QuasiRationalFn phi = deformed_eigenfunction(seed, v);
    Rat eps = csle_from_prime(eigen_prime_energy(v, kLam));
    CHECK(csle_residual(phi, eps, it).is_zero());
    CHECK_FALSE(csle_residual(phi, eps + 1, it).is_zero());
  }
}

TEST_CASE("deformed eigenfunction carries the family polynomial") {
  SeedSpec seed = classify({+1, +1, 0}, -1, 1, kLam);
  for (int v : {0, 1}) {
    QuasiRationalFn phi = deformed_eigenfunction(seed, v);
    RatPoly family = xr_jacobi(XRFamily::a, seed.m, v, kLam).poly;
    CHECK(phi.num().monic() == family);
    CHECK(phi.den() == seed_poly(seed.sigma, seed.m, kLam).monic());
  }
}

TEST_CASE("box spectrum sanity: zero potential") {
  // lam = (1/2, 1/2) zeroes both strengths; Dirichlet box of width L gives
  // (k pi / L)^2
  PotentialSpec spec = base_potential(LambdaPair(Rat(1, 2), Rat(1, 2)));
  CHECK(spec.v_eta.is_zero());
  const double L = 3.14159265358979323846;
  FdResult fd = fd_spectrum(spec, 1e-9, L, 1200, 3);
  for (int k = 1; k <= 3; ++k)
    CHECK(std::fabs(fd.energies[static_cast<size_t>(k - 1)] - k * k) < 1e-6 * k * k);
}

TEST_CASE("finite-difference run reproduces the analytic spectrum") {
  PotentialSpec spec = base_potential(kLam);
  FdResult fd = fd_spectrum(spec, 1e-8, 60.0, 1500, 3);
  CHECK(std::fabs(fd.energies[0] + 16.0) / 16.0 < 1e-4);
  CHECK(std::fabs(fd.energies[1] + 4.0) / 4.0 < 1e-4);
  // the marginal top level renders as a small positive box level
  CHECK(std::fabs(fd.energies[2]) / 16.0 < 1e-3);

  // parallel and serial eigensolver passes agree bitwise
  FdResult ser = fd_spectrum(spec, 1e-8, 60.0, 1500, 3, false);
  for (size_t i = 0; i < 3; ++i) {
    CHECK(fd.coarse[i] == ser.coarse[i]);
    CHECK(fd.energies[i] == ser.energies[i]);
  }
}

TEST_CASE("finite-difference guards") {
  PotentialSpec spec = base_potential(kLam);
  CHECK_THROWS_AS(fd_spectrum(spec, -1.0, 60.0, 1500, 2), RangeViolation);
  CHECK_THROWS_AS(fd_spectrum(spec, 1.0, 0.5, 1500, 2), RangeViolation);
  CHECK_THROWS_AS(fd_spectrum(spec, 1e-8, 60.0, 8, 2), GridTooCoarse);
  CHECK_THROWS_AS(fd_spectrum(spec, 1e-8, 60.0, 1500, 1000), RangeViolation);
  // a grid that only partially resolves the well disagrees with its own
  // refinement and must be detected, not returned
  CHECK_THROWS_AS(fd_spectrum(spec, 1e-8, 60.0, 32, 2), GridTooCoarse);
}
