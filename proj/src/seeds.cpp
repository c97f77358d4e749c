#include "xrj/seeds.hpp"

#include "xrj/errors.hpp"

namespace xrj {

Rat seed_k(const SigmaPair& sigma, int m, const LambdaPair& lam_o) {
  return Rat(sigma.sigma_minus) * lam_o.lam_minus +
         Rat(sigma.sigma_plus) * lam_o.lam_plus + Rat(2 * m + 1);
}

Rat seed_energy_prime(const SigmaPair& sigma, int m, const LambdaPair& lam_o) {
  Rat k = seed_k(sigma, m, lam_o);
  return Rat(1) - Rat(k * k);
}

int derive_sigma_inf(const SigmaPair& sigma, int m, const LambdaPair& lam_o) {
  int s = sign(seed_k(sigma, m, lam_o));
  if (s == 0) throw RangeViolation("asymptotic sign undefined: K = 0");
  return -s;
}

JacobiParams seed_poly_params(const SigmaPair& sigma, const LambdaPair& lam_o) {
  return {Rat(sigma.sigma_plus) * lam_o.lam_plus,
          Rat(sigma.sigma_minus) * lam_o.lam_minus};
}

RatPoly seed_poly(const SigmaPair& sigma, int m, const LambdaPair& lam_o) {
  return jacobi(m, seed_poly_params(sigma, lam_o));
}

SeedSpec classify(const SigmaPair& sigma, int sigma_inf, int m, const LambdaPair& lam_o) {
  if (lam_o.quadrant() != Quadrant::I)
    throw RangeViolation("classification table assumes positive lambda pair");
  if (m < 0) throw RangeViolation("seed degree must be nonnegative");
  const Rat lm = lam_o.lam_minus, lp = lam_o.lam_plus;
  const Rat two_m(2 * m);
  const int sm = sigma.sigma_minus, sp = sigma.sigma_plus;

  SeedSpec spec{{sigma.sigma_minus, sigma.sigma_plus, sigma_inf},
                m,
                lam_o,
                SeedType::a,
                seed_energy_prime(sigma, m, lam_o)};

  auto range = [&](bool ok, SeedType t) {
    if (!ok) throw RangeViolation("degree outside the range of the matched row");
    spec.type = t;
    return spec;
  };

  if (sm == 1 && sp == 1) {
    if (sigma_inf != -1) throw NoSuchType("no row with signs (+,+,+)");
    return range(true, SeedType::a);
  }
  if (sm == -1 && sp == 1 && sigma_inf == -1)
    return range(two_m > lm - lp - 1, SeedType::a_prime);
  if (sm == -1 && sp == -1 && sigma_inf == 1)
    return range(two_m < lm + lp - 1, SeedType::b);
  if (sm == -1 && sp == 1 && sigma_inf == 1) {
    if (lm > lp + 1) return range(two_m < lm - lp - 1, SeedType::c);
    // listed with a positive asymptotic sign even though K > 0 here
    if (lp > lm + 1) return range(two_m < lp - lm - 1, SeedType::b_prime);
    throw RangeViolation("no row admits these signs when |lam- - lam+| <= 1");
  }
  if (sm == 1 && sp == -1) {
    if (sigma_inf != -1) throw NoSuchType("no row with signs (+,-,+)");
    return range(two_m > lp - lm - 1, SeedType::d);
  }
  if (sm == -1 && sp == -1 && sigma_inf == -1)
    return range(two_m > lm + lp - 1, SeedType::d_prime);
  throw NoSuchType("sign triple not in the classification table");
}

Spectrum spectrum(const LambdaPair& lam_o) {
  if (lam_o.quadrant() != Quadrant::I)
    throw RangeViolation("discrete spectrum requires a positive lambda pair");
  Spectrum sp{lam_o, true, -1, {}, false};
  Rat bound = (lam_o.lam_minus - lam_o.lam_plus - 1) / 2;
  if (sign(bound) < 0) return sp;  // empty: a signal, not an error
  long vmax = rat_floor_long(bound);
  sp.empty = false;
  sp.v_max = static_cast<int>(vmax);
  for (long v = 0; v <= vmax; ++v) {
    Rat k = lam_o.lam_minus - lam_o.lam_plus - Rat(2 * v + 1);
    sp.energies.push_back(Rat(1) - Rat(k * k));
    if (v == vmax && sign(k) == 0) sp.marginal_top = true;
  }
  return sp;
}

AdmissibilityReport is_admissible(const SeedSpec& seed) {
  AdmissibilityReport rep;
  Spectrum sp = spectrum(seed.lam_o);
  rep.spectrum_nonempty = !sp.empty;
  if (rep.spectrum_nonempty)
    rep.energy_below_ground = seed.energy_prime < sp.energies.front();

  try {
    RatPoly p = seed_poly(seed.sigma, seed.m, seed.lam_o);
    rep.nodeless = sturm_count(p, Interval::above(Rat(1))) == 0;
  } catch (const DegreeCollapse&) {
    rep.degenerate_poly = true;
    rep.nodeless = false;
    rep.note = "seed polynomial degree collapses; no usable seed at this degree";
  }

  if (seed.type == SeedType::b) {
    rep.ff_usable = seed.lam_o.lam_plus > Rat(1, 2);
    if (!rep.ff_usable)
      rep.note = "admissible but the factorization function is too singular to use";
  }
  if (seed.type == SeedType::d) {
    rep.klein_applicable = (seed.m % 2 == 0);
    Rat klein = pochhammer(seed.lam_o.lam_minus - seed.lam_o.lam_plus + Rat(seed.m + 1), seed.m) *
                pochhammer(Rat(1) - seed.lam_o.lam_plus, seed.m);
    rep.klein_positive = sign(klein) > 0;
    if (!rep.klein_applicable)
      rep.note = "odd-degree seed admitted on the node-count gate alone";
  }

  rep.admissible = rep.spectrum_nonempty && rep.energy_below_ground && rep.nodeless;
  return rep;
}

}  // namespace xrj
