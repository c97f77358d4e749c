#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "xrj/seeds.hpp"

using namespace xrj;

namespace {
const LambdaPair kLam(Rat(11, 2), Rat(1, 2));
}

TEST_CASE("seed bookkeeping") {
  // K = s- l- + s+ l+ + 2m + 1
  CHECK(seed_k({+1, +1, 0}, 0, kLam) == Rat(7));
  CHECK(seed_k({-1, +1, 0}, 5, kLam) == Rat(6));
  CHECK(seed_energy_prime({+1, +1, 0}, 1, kLam) == Rat(-80));
  CHECK(derive_sigma_inf({+1, +1, 0}, 0, kLam) == -1);
  CHECK(derive_sigma_inf({-1, -1, 0}, 0, kLam) == 1);
  // K = 0 has no definite asymptotic sign
  CHECK_THROWS_AS(derive_sigma_inf({-1, -1, 0}, 1, LambdaPair(Rat(5, 2), Rat(1, 2))),
                  RangeViolation);
  JacobiParams prm = seed_poly_params({-1, +1, 0}, kLam);
  CHECK(prm.alpha == Rat(1, 2));
  CHECK(prm.beta == Rat(-11, 2));
}

TEST_CASE("classification rows") {
  // (+,+) is type a at any degree, and only with falling asymptotics
  for (int m : {0, 1, 5}) CHECK(classify({+1, +1, 0}, -1, m, kLam).type == SeedType::a);
  CHECK_THROWS_AS(classify({+1, +1, 0}, +1, 0, kLam), NoSuchType);

  // (-,+,-): a' needs 2m > lam- - lam+ - 1 = 4
  CHECK_THROWS_AS(classify({-1, +1, 0}, -1, 2, kLam), RangeViolation);
  CHECK(classify({-1, +1, 0}, -1, 3, kLam).type == SeedType::a_prime);
  CHECK(classify({-1, +1, 0}, -1, 5, kLam).type == SeedType::a_prime);

  // (-,+,+) splits on which component dominates: c here (lam- > lam+ + 1)
  CHECK(classify({-1, +1, 0}, +1, 1, kLam).type == SeedType::c);
  CHECK_THROWS_AS(classify({-1, +1, 0}, +1, 2, kLam), RangeViolation);
  // b' on the mirrored side (lam+ > lam- + 1)
  LambdaPair mirror(Rat(1, 2), Rat(7, 2));
  CHECK(classify({-1, +1, 0}, +1, 0, mirror).type == SeedType::b_prime);
  CHECK_THROWS_AS(classify({-1, +1, 0}, +1, 1, mirror), RangeViolation);
  // neither side dominates
  CHECK_THROWS_AS(classify({-1, +1, 0}, +1, 0, LambdaPair(Rat(1), Rat(3, 2))),
                  RangeViolation);

  // (-,-,+): b needs 2m < lam- + lam+ - 1 = 5
  CHECK(classify({-1, -1, 0}, +1, 2, kLam).type == SeedType::b);
  CHECK_THROWS_AS(classify({-1, -1, 0}, +1, 3, kLam), RangeViolation);
  // (-,-,-): d' needs 2m > 5
  CHECK(classify({-1, -1, 0}, -1, 3, kLam).type == SeedType::d_prime);
  CHECK_THROWS_AS(classify({-1, -1, 0}, -1, 2, kLam), RangeViolation);

  // (+,-): type d, falling asymptotics only
  CHECK(classify({+1, -1, 0}, -1, 1, kLam).type == SeedType::d);
  CHECK_THROWS_AS(classify({+1, -1, 0}, +1, 1, kLam), NoSuchType);

  // outside quadrant I
  CHECK_THROWS_AS(classify({+1, +1, 0}, -1, 0, LambdaPair(Rat(-1), Rat(1))),
                  RangeViolation);
  CHECK_THROWS_AS(classify({+1, +1, 0}, -1, -1, kLam), RangeViolation);

  SeedSpec spec = classify({+1, +1, 0}, -1, 1, kLam);
  CHECK(spec.sigma.sigma_inf == -1);
  CHECK(spec.m == 1);
  CHECK(spec.energy_prime == Rat(-80));
}

TEST_CASE("discrete spectra") {
  Spectrum sp = spectrum(kLam);
  CHECK_FALSE(sp.empty);
  CHECK(sp.v_max == 2);
  CHECK(sp.energies == std::vector<Rat>{Rat(-15), Rat(-3), Rat(1)});
  CHECK(sp.marginal_top);

  sp = spectrum(LambdaPair(Rat(13, 2), Rat(1, 2)));
  CHECK(sp.v_max == 2);
  CHECK(sp.energies == std::vector<Rat>{Rat(-24), Rat(-8), Rat(0)});
  CHECK_FALSE(sp.marginal_top);

  sp = spectrum(LambdaPair(Rat(3, 2), Rat(1, 2)));
  CHECK(sp.v_max == 0);
  CHECK(sp.energies == std::vector<Rat>{Rat(1)});
  CHECK(sp.marginal_top);

  sp = spectrum(LambdaPair(Rat(1), Rat(2)));
  CHECK(sp.empty);
  CHECK(sp.v_max == -1);
  CHECK(sp.energies.empty());
  CHECK_THROWS_AS(spectrum(LambdaPair(Rat(-1), Rat(1))), RangeViolation);
}

TEST_CASE("admissibility: type a always (nonempty spectrum)") {
  for (int m = 0; m <= 5; ++m) {
    AdmissibilityReport rep = is_admissible(classify({+1, +1, 0}, -1, m, kLam));
    CHECK(rep.admissible);
    CHECK(rep.spectrum_nonempty);
    CHECK(rep.energy_below_ground);
    CHECK(rep.nodeless);
  }
  // empty spectrum blocks everything
  AdmissibilityReport rep =
      is_admissible(classify({+1, +1, 0}, -1, 0, LambdaPair(Rat(1), Rat(2))));
  CHECK_FALSE(rep.admissible);
  CHECK_FALSE(rep.spectrum_nonempty);
}

TEST_CASE("admissibility: type a' iff m > lam- - lam+ - 1") {
  // in-range degrees below the admissibility cut (m = 3, 4 <= 4) degenerate here
  for (int m : {3, 4}) {
    AdmissibilityReport rep = is_admissible(classify({-1, +1, 0}, -1, m, kLam));
    CHECK_FALSE(rep.admissible);
    CHECK(rep.degenerate_poly);
  }
  for (int m : {5, 6, 7}) {
    AdmissibilityReport rep = is_admissible(classify({-1, +1, 0}, -1, m, kLam));
    CHECK(rep.admissible);
    CHECK_FALSE(rep.degenerate_poly);
  }
  // non-integer gap: nothing degenerates, the cut alone decides
  LambdaPair lam2(Rat(13, 2), Rat(1));
  for (int m = 3; m <= 7; ++m) {
    SeedSpec spec = classify({-1, +1, 0}, -1, m, lam2);
    AdmissibilityReport rep = is_admissible(spec);
    CHECK(rep.admissible == (Rat(m) > lam2.lam_minus - lam2.lam_plus - 1));
    CHECK_FALSE(rep.degenerate_poly);
  }
}

TEST_CASE("admissibility: type b iff m < lam+, usability iff lam+ > 1/2") {
  // lam+ = 1/2: only m = 0 is admissible and the factorization is unusable
  AdmissibilityReport rep = is_admissible(classify({-1, -1, 0}, +1, 0, kLam));
  CHECK(rep.admissible);
  CHECK_FALSE(rep.ff_usable);
  for (int m : {1, 2})
    CHECK_FALSE(is_admissible(classify({-1, -1, 0}, +1, m, kLam)).admissible);

  LambdaPair lam3(Rat(13, 2), Rat(3, 2));
  for (int m = 0; m <= 3; ++m) {
    SeedSpec spec = classify({-1, -1, 0}, +1, m, lam3);
    AdmissibilityReport r3 = is_admissible(spec);
    CHECK(r3.admissible == (Rat(m) < lam3.lam_plus));
    if (r3.admissible) CHECK(r3.ff_usable);
  }
}

TEST_CASE("admissibility: c sits at an eigenvalue, b' has no spectrum") {
  for (int m : {0, 1}) {
    SeedSpec spec = classify({-1, +1, 0}, +1, m, kLam);
    AdmissibilityReport rep = is_admissible(spec);
    CHECK_FALSE(rep.admissible);
    CHECK_FALSE(rep.energy_below_ground);  // energy equals a discrete level
    CHECK(spec.energy_prime == spectrum(kLam).energies[static_cast<size_t>(m)]);
  }
  AdmissibilityReport rep =
      is_admissible(classify({-1, +1, 0}, +1, 0, LambdaPair(Rat(1, 2), Rat(7, 2))));
  CHECK_FALSE(rep.admissible);
  CHECK_FALSE(rep.spectrum_nonempty);
}

TEST_CASE("admissibility: type d diagnostics") {
  // even degree: positivity of the classical product must match the gate
  SeedSpec spec = classify({+1, -1, 0}, -1, 2, LambdaPair(Rat(9), Rat(5, 2)));
  AdmissibilityReport rep = is_admissible(spec);
  CHECK(rep.klein_applicable);
  CHECK(rep.klein_positive);
  CHECK(rep.klein_positive == rep.nodeless);

  // odd degree: gate alone decides, note says so
  SeedSpec odd = classify({+1, -1, 0}, -1, 1, kLam);
  AdmissibilityReport rep_odd = is_admissible(odd);
  CHECK_FALSE(rep_odd.klein_applicable);
  CHECK_FALSE(rep_odd.note.empty());
}

TEST_CASE("type d Klein product agrees with the root count when applicable") {
  testutil::RatGen gen(9090);
  int tested = 0;
  while (tested < 25) {
    Rat lm = Rat(gen.integer(2, 25), 2) + Rat(1, 3);
    Rat lp = Rat(gen.integer(1, 9), 2) + Rat(1, 4);
    int m = 2 * gen.integer(1, 3);
    LambdaPair lam(lm, lp);
    SeedSpec spec{{+1, -1, 0}, m, lam, SeedType::d, seed_energy_prime({+1, -1, 0}, m, lam)};
    AdmissibilityReport rep = is_admissible(spec);
    if (rep.degenerate_poly) continue;
    ++tested;
    CHECK(rep.klein_applicable);
    CHECK(rep.klein_positive == rep.nodeless);
  }
}
