#include "xrj/jacobi.hpp"

#include <random>

namespace xrj {

Rat gen_binom(const Rat& a, int k) {
  if (k < 0) return Rat(0);
  Rat num(1), den(1);
  for (int i = 0; i < k; ++i) {
    num *= a - i;
    den *= i + 1;
  }
  return num / den;
}

Rat pochhammer(const Rat& a, int k) {
  Rat r(1);
  for (int i = 0; i < k; ++i) r *= a + i;
  return r;
}

Rat jacobi_leading(int n, const JacobiParams& prm) {
  if (n < 0) return Rat(0);
  Rat num(1);
  for (int j = 1; j <= n; ++j) num *= prm.alpha + prm.beta + n + j;
  Rat den(1);
  for (int j = 1; j <= n; ++j) den *= 2 * j;
  return num / den;
}

RatPoly jacobi(int n, const JacobiParams& prm) {
  if (n == -1) return RatPoly();
  if (n < -1) throw RangeViolation("jacobi: degree must be >= -1");
  if (jacobi_leading(n, prm) == 0)
    throw DegreeCollapse("jacobi: leading coefficient vanishes for these parameters");
  RatPoly half_xm1 = RatPoly::linear(rat(-1, 2), rat(1, 2));  // (x-1)/2
  RatPoly half_xp1 = RatPoly::linear(rat(1, 2), rat(1, 2));   // (x+1)/2
  // powers of the two linear factors
  std::vector<RatPoly> pm(static_cast<size_t>(n) + 1), pp(static_cast<size_t>(n) + 1);
  pm[0] = pp[0] = RatPoly::constant(Rat(1));
  for (int i = 1; i <= n; ++i) {
    pm[static_cast<size_t>(i)] = pm[static_cast<size_t>(i) - 1] * half_xm1;
    pp[static_cast<size_t>(i)] = pp[static_cast<size_t>(i) - 1] * half_xp1;
  }
  RatPoly acc;
  for (int s = 0; s <= n; ++s) {
    Rat c = gen_binom(prm.alpha + n, s) * gen_binom(prm.beta + n, n - s);
    if (c == 0) continue;
    acc = acc + pm[static_cast<size_t>(n - s)] * pp[static_cast<size_t>(s)] * c;
  }
  return acc;
}

RatPoly jacobi_deriv(int n, const JacobiParams& prm) {
  if (n <= 0) return RatPoly();
  if (jacobi_leading(n, prm) == 0)
    throw DegreeCollapse("jacobi_deriv: underlying polynomial collapses");
  // once the degree-n leading coefficient is nonzero, the shifted family
  // below cannot collapse
  return jacobi(n - 1, {prm.alpha + 1, prm.beta + 1}) * ((prm.alpha + prm.beta + n + 1) / 2);
}

RatPoly r_jacobi(int v, const LambdaPair& lam) {
  return jacobi(v, {-lam.lam_minus, lam.lam_plus}).compose_linear(Rat(1), Rat(2));
}

namespace {

Rat random_rat(std::mt19937& rng) {
  static const long dens[] = {1, 2, 3, 4, 6};
  std::uniform_int_distribution<long> num_d(-20, 20);
  std::uniform_int_distribution<size_t> den_d(0, 4);
  return rat(num_d(rng), dens[den_d(rng)]);
}

bool collapses(int n, const JacobiParams& prm) { return jacobi_leading(n, prm) == 0; }

}  // namespace

IdentityReport verify_contiguous_identities(int n_max, int samples) {
  IdentityReport rep;
  std::mt19937 rng(712523);
  auto record = [&rep](bool ok, const std::string& what) {
    ++rep.checks;
    if (!ok) {
      rep.pass = false;
      rep.failures.push_back(what);
    }
  };
  int produced = 0;
  while (produced < samples) {
    Rat a = random_rat(rng), b = random_rat(rng);
    JacobiParams prm{a, b};
    // reject parameter pairs that collapse anywhere in the tested range
    // (including the shifted families the identities reference)
    bool bad = false;
    for (int n = 0; n <= n_max && !bad; ++n) {
      bad = collapses(n, prm) || collapses(n, {a + 1, b + 1}) || collapses(n, {a + 1, b - 1}) ||
            collapses(n, {a - 1, b + 1}) || collapses(n, {a, b + 1}) || collapses(n, {a + 1, b});
    }
    if (bad) continue;
    ++produced;
    for (int n = 0; n <= n_max; ++n) {
      RatPoly p = jacobi(n, prm);
      RatPoly dp = p.derivative();
      std::string tag = " n=" + std::to_string(n) + " alpha=" + to_string(a) +
                        " beta=" + to_string(b);
      // derivative via parameter shift
      record(jacobi_deriv(n, prm) == dp, "derivative-shift" + tag);
      // beta-lowering: b*P + (x+1)*P' = (b+n)*P[a+1, b-1]
      record(p * b + RatPoly::linear(Rat(1), Rat(1)) * dp ==
                 jacobi(n, {a + 1, b - 1}) * (b + n),
             "beta-lowering" + tag);
      // alpha-lowering: a*P + (x-1)*P' = (a+n)*P[a-1, b+1]
      record(p * a + RatPoly::linear(Rat(-1), Rat(1)) * dp ==
                 jacobi(n, {a - 1, b + 1}) * (a + n),
             "alpha-lowering" + tag);
      // beta-raising split: P[a, b+1] - P = (x-1)/2 * P_{n-1}[a+1, b+1]
      record(jacobi(n, {a, b + 1}) - p ==
                 RatPoly::linear(rat(-1, 2), rat(1, 2)) * jacobi(n - 1, {a + 1, b + 1}),
             "beta-raising-split" + tag);
      // alpha-raising split: P[a+1, b] - P = (x+1)/2 * P_{n-1}[a+1, b+1]
      record(jacobi(n, {a + 1, b}) - p ==
                 RatPoly::linear(rat(1, 2), rat(1, 2)) * jacobi(n - 1, {a + 1, b + 1}),
             "alpha-raising-split" + tag);
      // exact leading coefficient
      if (n >= 1)
        record(p.leading() == jacobi_leading(n, prm), "leading-coefficient" + tag);
    }
  }
  return rep;
}

}  // namespace xrj
