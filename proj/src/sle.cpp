#include "xrj/sle.hpp"

namespace xrj {

namespace {
const RatPoly& one_minus_eta2() {  // 1 - eta^2
  static const RatPoly p({Rat(1), Rat(0), Rat(-1)});
  return p;
}
}  // namespace

Rat eigen_prime_energy(int v, const LambdaPair& lam_o) {
  Rat k = lam_o.lam_minus - lam_o.lam_plus - Rat(2 * v + 1);
  return Rat(1) - Rat(k * k);
}

QuasiRationalFn csle_density() {
  return QuasiRationalFn(Rat(-1), Rat(-1), RatPoly::constant(Rat(1, 4)));
}

QuasiRationalFn ref_pfr(const LambdaPair& lam) {
  Rat lm2 = Rat(lam.lam_minus * lam.lam_minus);
  Rat lp2 = Rat(lam.lam_plus * lam.lam_plus);
  QuasiRationalFn t1(Rat(-2), Rat(0), RatPoly::constant(Rat(Rat(1) - lm2) / 4));
  QuasiRationalFn t2(Rat(0), Rat(-2), RatPoly::constant(Rat(Rat(1) - lp2) / 4));
  QuasiRationalFn t3(Rat(-1), Rat(-1), RatPoly::constant(Rat(lm2 + lp2 - 1) / 4));
  return t1 + t2 + t3;
}

QuasiRationalFn seed_fn(const SigmaPair& sigma, int m, const LambdaPair& lam) {
  Rat sl_minus = Rat(sigma.sigma_minus) * lam.lam_minus;
  Rat sl_plus = Rat(sigma.sigma_plus) * lam.lam_plus;
  RatPoly p = jacobi(m, {sl_plus, sl_minus});
  return QuasiRationalFn(Rat(sl_minus + 1) / 2, Rat(sl_plus + 1) / 2, p);
}

QuasiRationalFn eigenfunction_base(int v, const LambdaPair& lam_o) {
  RatPoly p = jacobi(v, {lam_o.lam_plus, -lam_o.lam_minus});
  return QuasiRationalFn(Rat(Rat(1) - lam_o.lam_minus) / 2,
                         Rat(lam_o.lam_plus + 1) / 2, p);
}

QuasiRationalFn csle_residual(const QuasiRationalFn& phi, const Rat& eps_csle,
                              const QuasiRationalFn& pfr) {
  return phi.derivative().derivative() + pfr * phi + eps_csle * (csle_density() * phi);
}

QuasiRationalFn transformed_pfr(const SigmaPair& sigma, int m, const LambdaPair& lam) {
  Rat sl_minus = Rat(sigma.sigma_minus) * lam.lam_minus;
  Rat sl_plus = Rat(sigma.sigma_plus) * lam.lam_plus;
  RatPoly pi = jacobi(m, {sl_plus, sl_minus}).monic();
  QuasiRationalFn gauge(Rat(-sl_minus) / 2, Rat(-sl_plus) / 2,
                        RatPoly::constant(Rat(1)), pi);
  Rat eps1 = csle_from_prime(seed_energy_prime(sigma, m, lam));
  QuasiRationalFn second = gauge.derivative().derivative();
  return Rat(-1) * (second / gauge) - eps1 * csle_density();
}

QuasiRationalFn transformed_pfr_poles(const SigmaPair& sigma, int m, const LambdaPair& lam) {
  Rat sl_minus = Rat(sigma.sigma_minus) * lam.lam_minus;
  Rat sl_plus = Rat(sigma.sigma_plus) * lam.lam_plus;
  RatPoly pi = jacobi(m, {sl_plus, sl_minus}).monic();
  RatPoly pid = pi.derivative();
  Rat k = seed_k(sigma, m, lam);
  Rat lhm2 = Rat((sl_minus + 1) * (sl_minus + 1));
  Rat lhp2 = Rat((sl_plus + 1) * (sl_plus + 1));

  // polynomial correction: (K^2 - 2 s-l- s+l+) Pi - 4 [(eta+1) s+l+ + (eta-1) s-l-] Pi'
  RatPoly lin = RatPoly::linear(Rat(sl_plus - sl_minus), Rat(sl_plus + sl_minus));
  RatPoly ohat = pi * Rat(Rat(k * k) - 2 * Rat(sl_minus * sl_plus)) - Rat(4) * (lin * pid);

  QuasiRationalFn t1(Rat(-2), Rat(0), RatPoly::constant(Rat(Rat(1) - lhm2) / 4));
  QuasiRationalFn t2(Rat(0), Rat(-2), RatPoly::constant(Rat(Rat(1) - lhp2) / 4));
  QuasiRationalFn t3(Rat(-1), Rat(-1), RatPoly::constant(Rat(Rat(1) - lhm2 - lhp2) / 4));
  QuasiRationalFn t4(Rat(-1), Rat(-1), ohat / Rat(2), pi);
  QuasiRationalFn t5(Rat(-1), Rat(-1), RatPoly::x() * pid * Rat(-2), pi);
  QuasiRationalFn t6(Rat(0), Rat(0), pid * pid * Rat(-2), pi * pi);
  return t1 + t2 + t3 + t4 + t5 + t6;
}

Rat pfr_tail_limit(const QuasiRationalFn& pfr) {
  if (pfr.is_zero()) throw RangeViolation("tail limit of the zero function");
  Rat total = pfr.p_minus() + pfr.p_plus();
  if (!is_integer(total))
    throw RangeViolation("tail limit needs an integer total exponent");
  long shift = mpz_get_si(Rat(total).get_num().get_mpz_t());
  long num_deg = pfr.num().degree() + shift;
  if (num_deg + 2 != pfr.den().degree())
    throw RangeViolation("eta^2 * pfr does not tend to a finite nonzero limit");
  return pfr.num().leading() / pfr.den().leading();
}

QuasiRationalFn prime_form_q(const LambdaPair& lam) {
  QuasiRationalFn p_factor(Rat(0), Rat(1), RatPoly::constant(Rat(1)));
  QuasiRationalFn t2(Rat(0), Rat(-1), RatPoly::constant(Rat(-1, 4)));
  QuasiRationalFn t3(Rat(-1), Rat(0), RatPoly::constant(Rat(-1, 4)));
  return p_factor * ref_pfr(lam) + t2 + t3;
}

HeineCoeffs heine_coeffs(XRFamily family, int seed_m, int v, const LambdaPair& lam_o) {
  if (lam_o.quadrant() != Quadrant::I)
    throw RangeViolation("heine_coeffs: lam_o must be quadrant I");
  LambdaPair lam_ii(-lam_o.lam_minus, lam_o.lam_plus);
  SigmaPair sigma = xr_sigma(family);
  auto [km, kp] = xr_kappa(family);

  Rat sl_minus = Rat(sigma.sigma_minus) * lam_ii.lam_minus;
  Rat sl_plus = Rat(sigma.sigma_plus) * lam_ii.lam_plus;

  HeineCoeffs hc;
  hc.pi = jacobi(seed_m, {sl_plus, sl_minus}).monic();
  RatPoly pid = hc.pi.derivative();

  Rat a_bar = Rat(-sl_minus) / 2;
  Rat b_bar = Rat(-sl_plus) / 2;
  Rat a_hat = a_bar + Rat(km) * Rat(sl_minus + 1);
  Rat b_hat = b_bar + Rat(kp) * Rat(sl_plus + 1);

  hc.eps1 = seed_energy_prime(sigma, seed_m, lam_ii);
  Rat k2 = lam_ii.lam_minus + lam_ii.lam_plus + Rat(2 * v + 1);
  hc.eps2 = Rat(1) - Rat(k2 * k2);

  // B = [a^(1-eta) - b^(1+eta)] Pi - (1-eta^2) Pi'
  RatPoly lin1 = RatPoly::linear(Rat(a_hat - b_hat), Rat(-(a_hat + b_hat)));
  hc.b = lin1 * hc.pi - one_minus_eta2() * pid;

  // C0 = -2(a^b^ - a-b-) Pi + 2[(a^-a-)(eta-1) + (b^-b-)(eta+1)] Pi' + eps1/4 Pi
  RatPoly lin2 = RatPoly::linear(Rat(b_hat - b_bar - (a_hat - a_bar)),
                                 Rat(a_hat - a_bar + b_hat - b_bar));
  hc.c0 = hc.pi * Rat(-2 * Rat(a_hat * b_hat - Rat(a_bar * b_bar))) +
          Rat(2) * (lin2 * pid) + hc.pi * Rat(hc.eps1 / 4);
  return hc;
}

RatPoly heine_residual(const HeineCoeffs& hc, const RatPoly& p) {
  return one_minus_eta2() * hc.pi * p.derivative().derivative() +
         Rat(2) * (hc.b * p.derivative()) + (hc.c0 - hc.pi * Rat(hc.eps2 / 4)) * p;
}

RatPoly heine_residual_xr(XRFamily family, int seed_m, int v, const LambdaPair& lam_o) {
  HeineCoeffs hc = heine_coeffs(family, seed_m, v, lam_o);
  XPolyResult xr = xr_jacobi(family, seed_m, v, lam_o);
  return heine_residual(hc, xr.poly);
}

}  // namespace xrj
