#include "xrj/potentials.hpp"

#include <cmath>

#include "xrj/tridiag.hpp"

namespace xrj {

PotentialSpec base_potential(const LambdaPair& lam_o) {
  PotentialSpec spec(lam_o, Rat(lam_o.lam_plus + Rat(1, 2)),
                     Rat(lam_o.lam_minus - Rat(1, 2)));
  Rat lm2 = Rat(lam_o.lam_minus * lam_o.lam_minus);
  Rat lp2 = Rat(lam_o.lam_plus * lam_o.lam_plus);
  QuasiRationalFn t1(Rat(-1), Rat(0), RatPoly::constant(Rat(Rat(1, 2) - 2 * lm2)));
  QuasiRationalFn t2(Rat(0), Rat(-1), RatPoly::constant(Rat(2 * lp2 - Rat(1, 2))));
  spec.v_eta = t1 + t2;
  return spec;
}

QuasiRationalFn base_potential_from_pfr(const LambdaPair& lam_o) {
  QuasiRationalFn stretch(Rat(1), Rat(1), RatPoly::constant(Rat(-4)));
  QuasiRationalFn schwarz(Rat(-1), Rat(-1), RatPoly({Rat(2), Rat(0), Rat(1)}));
  return stretch * ref_pfr(lam_o) + schwarz;
}

PotentialSpec build_potential(const SeedSpec& seed) {
  AdmissibilityReport rep = is_admissible(seed);
  if (!rep.admissible)
    throw AdmissibilityError("build_potential: seed fails the admissibility gate" +
                             (rep.note.empty() ? "" : ": " + rep.note));
  if (seed.type == SeedType::b && !rep.ff_usable)
    throw AdmissibilityError("build_potential: " + rep.note);

  PotentialSpec spec = base_potential(seed.lam_o);
  spec.deformed = true;
  spec.seed = seed;
  QuasiRationalFn stretch(Rat(1), Rat(1), RatPoly::constant(Rat(-4)));
  QuasiRationalFn delta =
      transformed_pfr(seed.sigma, seed.m, seed.lam_o) - ref_pfr(seed.lam_o);
  spec.v_eta = spec.v_eta + stretch * delta;
  if (sturm_count(spec.v_eta.den(), Interval::above(Rat(1))) > 0)
    throw PoleInDomain("build_potential: deformed potential has a pole on (1, inf)");
  return spec;
}

double potential_value(const PotentialSpec& spec, double r) {
  return spec.v_eta.evaluate_double(std::cosh(2.0 * r));
}

std::vector<Rat> analytic_energies(const LambdaPair& lam_o) {
  Spectrum sp = spectrum(lam_o);
  std::vector<Rat> out;
  out.reserve(sp.energies.size());
  for (const Rat& e : sp.energies) out.push_back(schrodinger_from_prime(e));
  return out;
}

QuasiRationalFn deformed_eigenfunction(const SeedSpec& seed, int v) {
  QuasiRationalFn phi = seed_fn(seed.sigma, seed.m, seed.lam_o);
  QuasiRationalFn psi = eigenfunction_base(v, seed.lam_o);
  // 1/sqrt(density) = 2 (eta+1)^{1/2} (eta-1)^{1/2}
  QuasiRationalFn inv_sqrt_rho(Rat(1, 2), Rat(1, 2), RatPoly::constant(Rat(2)));
  return inv_sqrt_rho * qrf_wronskian(phi, psi) / phi;
}

namespace {

std::vector<double> fd_pass(const PotentialSpec& spec, double r_min, double r_max,
                            int n, int k, bool parallel) {
  const double step = (r_max - r_min) / (n + 1);
  std::vector<double> d(static_cast<size_t>(n)), e(static_cast<size_t>(n - 1));
  const double inv_h2 = 1.0 / (step * step);
  for (int i = 0; i < n; ++i) {
    double r = r_min + (i + 1) * step;
    d[static_cast<size_t>(i)] = 2.0 * inv_h2 + potential_value(spec, r);
  }
  for (int i = 0; i + 1 < n; ++i) e[static_cast<size_t>(i)] = -inv_h2;
  std::vector<double> out(static_cast<size_t>(k));
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int j = 0; j < k; ++j) out[static_cast<size_t>(j)] = tridiag_kth(d, e, j);
  } else {
    for (int j = 0; j < k; ++j) out[static_cast<size_t>(j)] = tridiag_kth(d, e, j);
  }
  return out;
}

}  // namespace

FdResult fd_spectrum(const PotentialSpec& spec, double r_min, double r_max, int n,
                     int k, bool parallel) {
  if (!(r_min > 0) || !(r_max > r_min))
    throw RangeViolation("fd_spectrum: need 0 < r_min < r_max");
  if (n < 16) throw GridTooCoarse("fd_spectrum: fewer than 16 interior points");
  if (k < 1 || k > n / 4) throw RangeViolation("fd_spectrum: level count out of range");

  FdResult res;
  res.n = n;
  res.r_min = r_min;
  res.r_max = r_max;
  res.coarse = fd_pass(spec, r_min, r_max, n, k, parallel);
  res.fine = fd_pass(spec, r_min, r_max, 2 * n + 1, k, parallel);
  res.energies.resize(static_cast<size_t>(k));
  double scale = std::max(1.0, std::fabs(res.fine[0]));
  for (int j = 0; j < k; ++j) {
    double c = res.coarse[static_cast<size_t>(j)], f = res.fine[static_cast<size_t>(j)];
    if (std::fabs(c - f) > 1e-2 * scale)
      throw GridTooCoarse("fd_spectrum: grid halving moves an eigenvalue too much");
    res.energies[static_cast<size_t>(j)] = (4.0 * f - c) / 3.0;
  }
  return res;
}

}  // namespace xrj
