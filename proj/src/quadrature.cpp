#include "xrj/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "xrj/errors.hpp"
#include "xrj/tridiag.hpp"

namespace xrj {

namespace {

// orthonormal-recurrence coefficients for the weight (1-t)^A (1+t)^B
void jacobi_recurrence(int n, double A, double B, std::vector<double>& alpha,
                       std::vector<double>& beta) {
  alpha.assign(static_cast<size_t>(n), 0.0);
  beta.assign(static_cast<size_t>(n), 0.0);  // beta[k] = b_k (off-diagonal), beta[0] unused
  double ab = A + B;
  alpha[0] = (B - A) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    double den = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
    alpha[static_cast<size_t>(k)] = (B * B - A * A) / den;
    double b2;
    if (k == 1) {
      b2 = 4.0 * (1.0 + A) * (1.0 + B) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      b2 = 4.0 * k * (k + A) * (k + B) * (k + ab) /
           ((2.0 * k + ab) * (2.0 * k + ab) * (2.0 * k + ab + 1.0) * (2.0 * k + ab - 1.0));
    }
    beta[static_cast<size_t>(k)] = std::sqrt(b2);
  }
}

}  // namespace

GaussJacobiRule gauss_jacobi(int n, double A, double B) {
  if (n < 1) throw RangeViolation("gauss_jacobi: need at least one node");
  if (A <= -1.0 || B <= -1.0)
    throw DivergentIntegral("gauss_jacobi: weight exponents must exceed -1");
  std::vector<double> alpha, beta;
  jacobi_recurrence(n, A, B, alpha, beta);
  std::vector<double> off(beta.begin() + 1, beta.end());
  GaussJacobiRule rule;
  rule.nodes = tridiag_smallest(alpha, off, n);
  // total mass 2^{A+B+1} Beta(A+1, B+1)
  double mu0 = std::exp((A + B + 1.0) * std::log(2.0) + std::lgamma(A + 1.0) +
                        std::lgamma(B + 1.0) - std::lgamma(A + B + 2.0));
  rule.weights.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    double x = rule.nodes[static_cast<size_t>(i)];
    // Christoffel weight 1 / sum_k phat_k(x)^2 with orthonormal phat
    double pm1 = 0.0, p0 = 1.0 / std::sqrt(mu0);
    double sum = p0 * p0;
    for (int k = 0; k + 1 < n; ++k) {
      double bk = beta[static_cast<size_t>(k)];  // zero for k = 0
      double p1 = ((x - alpha[static_cast<size_t>(k)]) * p0 - bk * pm1) /
                  beta[static_cast<size_t>(k + 1)];
      pm1 = p0;
      p0 = p1;
      sum += p0 * p0;
    }
    rule.weights[static_cast<size_t>(i)] = 1.0 / sum;
  }
  return rule;
}

int quad_level() {
  const char* s = std::getenv("XJACOBI_QUAD_LEVEL");
  if (!s) return 0;
  int v = std::atoi(s);
  return std::clamp(v, 0, 6);
}

namespace {

RatPoly reversed(const RatPoly& p) {
  std::vector<Rat> c(p.coeffs().rbegin(), p.coeffs().rend());
  return RatPoly(std::move(c));
}

// one evaluation of the split integral at a given node count
double semiinf_pass(const QuasiRationalFn& f, double mu, int n_nodes) {
  const double p = to_double(f.p_minus());
  const double q = to_double(f.p_plus());
  // near piece: eta = 2 + t on [1,3], Gauss-Jacobi weight (1+t)^q
  GaussJacobiRule near = gauss_jacobi(n_nodes, 0.0, q);
  double near_sum = 0.0;
  for (int i = 0; i < n_nodes; ++i) {
    double t = near.nodes[static_cast<size_t>(i)];
    double eta = 2.0 + t;
    double g = std::pow(eta + 1.0, p) * f.num().evaluate_double(eta) /
               f.den().evaluate_double(eta);
    near_sum += near.weights[static_cast<size_t>(i)] * g;
  }
  // far piece: eta = 1/s, s = (1+t)/6 on (0, 1/3], integrand s^mu * analytic
  RatPoly nrev = reversed(f.num());
  RatPoly drev = reversed(f.den());
  GaussJacobiRule far = gauss_jacobi(n_nodes, 0.0, mu);
  double far_sum = 0.0;
  for (int i = 0; i < n_nodes; ++i) {
    double t = far.nodes[static_cast<size_t>(i)];
    double s = (1.0 + t) / 6.0;
    double h = std::pow(1.0 + s, p) * std::pow(1.0 - s, q) *
               nrev.evaluate_double(s) / drev.evaluate_double(s);
    far_sum += far.weights[static_cast<size_t>(i)] * h;
  }
  far_sum *= std::pow(6.0, -(mu + 1.0));
  return near_sum + far_sum;
}

}  // namespace

QuadResult integrate_semiinf(const QuasiRationalFn& f) {
  QuadResult res;
  if (f.is_zero()) return res;
  // symbolic endpoint gate at eta = 1
  if (!(f.p_plus() > -1))
    throw DivergentIntegral("integrate_semiinf: endpoint exponent at eta=1 is <= -1");
  // symbolic tail gate: integrand ~ eta^{deg num + p + q - deg den}
  Rat tail_mu = Rat(f.den().degree() - f.num().degree()) - f.p_minus() - f.p_plus() - 2;
  if (!(tail_mu > -1))
    throw DivergentIntegral("integrate_semiinf: tail decays too slowly");
  if (sturm_count(f.den(), Interval::closed(Rat(1), Rat(3))) > 0 ||
      sturm_count(f.den(), Interval::above(Rat(3))) > 0)
    throw WeightPoleInInterval("integrate_semiinf: denominator vanishes on [1, inf)");

  const double mu = to_double(tail_mu);
  const int lvl = quad_level();
  const int coarse_n = 64 << lvl;
  const int fine_n = 128 << lvl;
  double coarse = semiinf_pass(f, mu, coarse_n);
  double fine = semiinf_pass(f, mu, fine_n);
  res.value = fine;
  res.error = std::fabs(fine - coarse);
  res.nodes = 2 * fine_n;
  return res;
}

QuadResult integrate_finite_jacobi(const Rat& A, const Rat& B, const RatPoly& num,
                                   const RatPoly& den) {
  if (!(A > -1) || !(B > -1))
    throw DivergentIntegral("integrate_finite_jacobi: weight exponents must exceed -1");
  if (den.is_zero()) throw DivisionByZero("integrate_finite_jacobi: zero denominator");
  if (sturm_count(den, Interval::closed(Rat(-1), Rat(1))) > 0)
    throw WeightPoleInInterval("integrate_finite_jacobi: denominator vanishes on [-1, 1]");

  QuadResult res;
  if (num.is_zero()) return res;
  const int lvl = quad_level();
  auto pass = [&](int n_nodes) {
    GaussJacobiRule rule = gauss_jacobi(n_nodes, to_double(A), to_double(B));
    double sum = 0.0;
    for (int i = 0; i < n_nodes; ++i) {
      double x = rule.nodes[static_cast<size_t>(i)];
      sum += rule.weights[static_cast<size_t>(i)] * num.evaluate_double(x) /
             den.evaluate_double(x);
    }
    return sum;
  };
  const int coarse_n = 64 << lvl;
  const int fine_n = 128 << lvl;
  double coarse = pass(coarse_n);
  double fine = pass(fine_n);
  res.value = fine;
  res.error = std::fabs(fine - coarse);
  res.nodes = fine_n;
  return res;
}

}  // namespace xrj
