#include "xrj/xconstruct.hpp"

namespace xrj {

RatPoly s_poly(int n, const Rat& lam_plus, const Rat& lam_minus) {
  if (n < 1) throw RangeViolation("s_poly: degree must be >= 1");
  JacobiParams prm{lam_plus, lam_minus};
  RatPoly p = jacobi(n - 1, prm);
  RatPoly lin = RatPoly::linear((lam_plus - lam_minus) / 2, (lam_minus + lam_plus + 2) / 2);
  RatPoly eta2m1({Rat(-1), Rat(0), Rat(1)});
  return lin * p + eta2m1 * jacobi_deriv(n - 1, prm);
}

RatPoly poly_det(int m, int n, const LambdaPair& lam, const SigmaPair& sigma) {
  if (m < 0 || n < 0) throw RangeViolation("poly_det: degrees must be >= 0");
  Rat sl_plus = sigma.sigma_plus * lam.lam_plus;
  Rat sl_minus = sigma.sigma_minus * lam.lam_minus;
  JacobiParams plain{lam.lam_plus, lam.lam_minus};
  JacobiParams flipped{sl_plus, sl_minus};
  return jacobi(m, flipped) * s_poly(n + 1, lam.lam_plus, lam.lam_minus) -
         s_poly(m + 1, sl_plus, sl_minus) * jacobi(n, plain);
}

XPolyResult factor_pd(const RatPoly& d) {
  if (d.is_zero()) throw ZeroPolynomial("factor_pd: zero polynomial determinant");
  XPolyResult res;
  RatPoly p = d;
  const Rat one(1), minus_one(-1);
  if (p.evaluate(minus_one) == 0) {
    p = divide_exact(p, RatPoly::linear(Rat(1), Rat(1)));
    res.kappa_minus = 1;
    if (p.evaluate(minus_one) == 0)
      throw SimpleRootViolation("factor_pd: (eta+1) divides with multiplicity > 1");
  }
  if (p.evaluate(one) == 0) {
    p = divide_exact(p, RatPoly::linear(Rat(-1), Rat(1)));
    res.kappa_plus = 1;
    if (p.evaluate(one) == 0)
      throw SimpleRootViolation("factor_pd: (eta-1) divides with multiplicity > 1");
  }
  res.pre_leading = p.leading();
  res.poly = p.monic();
  res.N = res.poly.degree();
  res.family = XFamily::XB;
  return res;
}

std::pair<RatPoly, Rat> xm_jacobi(int m, int n, const JacobiParams& prm) {
  if (m < 0 || n < 0) throw RangeViolation("xm_jacobi: indices must be >= 0");
  const Rat& a = prm.alpha;
  const Rat& b = prm.beta;
  if (a + n + 1 == 0) throw DivisionByZero("xm_jacobi: alpha+n+1 = 0");
  JacobiParams inner{a + 1, b - 1};
  RatPoly first = jacobi(m, {-a - 2, b}) * jacobi(n, inner) * (a + 1 - m);
  RatPoly second =
      RatPoly::linear(Rat(-1), Rat(1)) * jacobi(m, {-a - 1, b - 1}) * jacobi_deriv(n, inner);
  RatPoly poly = (first + second) / (a + n + 1);
  if (poly.degree() != m + n)
    throw DegreeCollapse("xm_jacobi: degree fell below m+n for these parameters");
  return {poly, poly.leading()};
}

namespace {

struct FamilyPattern {
  SigmaPair sigma;      // pattern handed to poly_det in the quadrant-II frame
  int kappa_minus;      // expected endpoint stripping
  int kappa_plus;
  XFamily tag;
};

FamilyPattern pattern_for(XRFamily family) {
  switch (family) {
    case XRFamily::a:
      return {{-1, +1, 0}, 0, 1, XFamily::XRa};
    case XRFamily::a_prime:
      return {{+1, +1, 0}, 1, 1, XFamily::XRaPrime};
    case XRFamily::b:
      return {{+1, -1, 0}, 1, 0, XFamily::XRb};
  }
  throw RangeViolation("xr_jacobi: unknown family");
}

const char* xr_family_name(XRFamily f) {
  switch (f) {
    case XRFamily::a: return "a";
    case XRFamily::a_prime: return "a'";
    case XRFamily::b: return "b";
  }
  return "?";
}

}  // namespace

SigmaPair xr_sigma(XRFamily family) { return pattern_for(family).sigma; }

std::pair<int, int> xr_kappa(XRFamily family) {
  FamilyPattern fp = pattern_for(family);
  return {fp.kappa_minus, fp.kappa_plus};
}

const char* xr_family_label(XRFamily family) { return xr_family_name(family); }

XPolyResult xr_jacobi(XRFamily family, int seed_m, int v, const LambdaPair& lam_o) {
  if (lam_o.quadrant() != Quadrant::I)
    throw RangeViolation("xr_jacobi: lam_o must be quadrant I");
  if (seed_m < 0) throw RangeViolation("xr_jacobi: seed degree must be >= 0");
  // strict level range: 0 <= v < (lam- - lam+ - 1)/2
  if (v < 0 || Rat(2 * v) >= lam_o.lam_minus - lam_o.lam_plus - 1)
    throw RangeViolation("xr_jacobi: level v outside the strict eigenlevel range");
  // seed validity per classification row
  if (family == XRFamily::a_prime &&
      Rat(2 * seed_m) <= lam_o.lam_minus - lam_o.lam_plus - 1)
    throw RangeViolation("xr_jacobi: a' seed degree below the classification range");
  if (family == XRFamily::b &&
      Rat(2 * seed_m) >= lam_o.lam_minus + lam_o.lam_plus - 1)
    throw RangeViolation("xr_jacobi: b seed degree above the classification range");

  FamilyPattern fp = pattern_for(family);
  LambdaPair lam_ii(-lam_o.lam_minus, lam_o.lam_plus);
  RatPoly d = poly_det(seed_m, v, lam_ii, fp.sigma);
  XPolyResult res = factor_pd(d);
  if (res.kappa_minus != fp.kappa_minus || res.kappa_plus != fp.kappa_plus)
    throw SimpleRootViolation("xr_jacobi: endpoint factor pattern differs from the family rule");
  int expected_n = seed_m + v + 1 - fp.kappa_minus - fp.kappa_plus;
  if (res.N != expected_n)
    throw DegreeCollapse("xr_jacobi: stripped degree differs from the family bookkeeping");
  res.family = fp.tag;
  res.provenance = std::string("family=") + xr_family_name(family) +
                   " seed_m=" + std::to_string(seed_m) + " v=" + std::to_string(v) +
                   " lam_o=(" + to_string(lam_o.lam_minus) + "," + to_string(lam_o.lam_plus) + ")";
  return res;
}

ReversedXmReport xr_equals_reversed_xm(int seed_m, int v, const LambdaPair& lam_o) {
  ReversedXmReport rep;
  // gate: 0 <= v < (lam- - lam+ - 1)/2 < lam- - 1
  rep.gate_ok = v >= 0 && Rat(2 * v) < lam_o.lam_minus - lam_o.lam_plus - 1 &&
                lam_o.lam_minus - lam_o.lam_plus - 1 < 2 * (lam_o.lam_minus - 1);
  if (!rep.gate_ok) return rep;
  XPolyResult xr = xr_jacobi(XRFamily::a, seed_m, v, lam_o);
  auto [xm, k_hat] = xm_jacobi(v, seed_m, {lam_o.lam_minus - 1, lam_o.lam_plus + 1});
  rep.lhs = xr.poly;
  rep.rhs = xm.reflect().monic();
  rep.k_hat = k_hat;
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace xrj
