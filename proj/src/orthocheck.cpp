#include "xrj/orthocheck.hpp"

#include <cmath>

namespace xrj {

const char* gram_family_name(GramFamily f) {
  switch (f) {
    case GramFamily::xr_a: return "a";
    case GramFamily::xr_a_prime: return "a'";
    case GramFamily::xr_b: return "b";
    case GramFamily::r_jacobi: return "base";
  }
  return "?";
}

QuasiRationalFn family_weight(GramFamily fam, int seed_m, const LambdaPair& lam_o) {
  const Rat& lm = lam_o.lam_minus;
  const Rat& lp = lam_o.lam_plus;
  const RatPoly one = RatPoly::constant(Rat(1));
  switch (fam) {
    case GramFamily::xr_a: {
      RatPoly pi = jacobi(seed_m, {lp, lm}).monic();
      return QuasiRationalFn(Rat(-lm - 1), Rat(lp + 1), one, pi * pi);
    }
    case GramFamily::xr_a_prime: {
      RatPoly pi = jacobi(seed_m, {lp, -lm}).monic();
      return QuasiRationalFn(Rat(1 - lm), Rat(lp + 1), one, pi * pi);
    }
    case GramFamily::xr_b: {
      RatPoly pi = jacobi(seed_m, {-lp, -lm}).monic();
      return QuasiRationalFn(Rat(1 - lm), Rat(lp - 1), one, pi * pi);
    }
    case GramFamily::r_jacobi:
      return QuasiRationalFn(Rat(-lm), Rat(lp), one);
  }
  throw RangeViolation("family_weight: unknown family");
}

namespace {

std::vector<int> normalizable_levels(const LambdaPair& lam_o) {
  std::vector<int> vs;
  for (int v = 0; Rat(2 * v) + lam_o.lam_plus - lam_o.lam_minus < -1; ++v)
    vs.push_back(v);
  return vs;
}

RatPoly level_poly(GramFamily fam, int seed_m, int v, const LambdaPair& lam_o) {
  switch (fam) {
    case GramFamily::xr_a: return xr_jacobi(XRFamily::a, seed_m, v, lam_o).poly;
    case GramFamily::xr_a_prime:
      return xr_jacobi(XRFamily::a_prime, seed_m, v, lam_o).poly;
    case GramFamily::xr_b: return xr_jacobi(XRFamily::b, seed_m, v, lam_o).poly;
    case GramFamily::r_jacobi: return jacobi(v, {lam_o.lam_plus, -lam_o.lam_minus});
  }
  throw RangeViolation("level_poly: unknown family");
}

struct EntryTask {
  int i, j;
};

template <typename Fn>
void run_tasks(size_t count, bool parallel, Fn&& fn) {
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < static_cast<long>(count); ++idx)
      fn(static_cast<size_t>(idx));
  } else {
    for (size_t idx = 0; idx < count; ++idx) fn(idx);
  }
}

}  // namespace

GramReport gram(GramFamily fam, int seed_m, const LambdaPair& lam_o, bool parallel) {
  GramReport rep;
  rep.levels = normalizable_levels(lam_o);
  const int n = static_cast<int>(rep.levels.size());
  if (n == 0) return rep;

  QuasiRationalFn w = family_weight(fam, seed_m, lam_o);
  std::vector<RatPoly> polys;
  polys.reserve(static_cast<size_t>(n));
  for (int v : rep.levels) polys.push_back(level_poly(fam, seed_m, v, lam_o));

  rep.raw.assign(static_cast<size_t>(n), std::vector<double>(static_cast<size_t>(n), 0.0));
  std::vector<std::vector<double>> err(static_cast<size_t>(n),
                                       std::vector<double>(static_cast<size_t>(n), 0.0));
  std::vector<EntryTask> tasks;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) tasks.push_back({i, j});

  std::vector<int> nodes(tasks.size(), 0);
  run_tasks(tasks.size(), parallel, [&](size_t idx) {
    const EntryTask& t = tasks[idx];
    QuasiRationalFn integrand =
        QuasiRationalFn::from_poly(polys[static_cast<size_t>(t.i)] *
                                   polys[static_cast<size_t>(t.j)]) * w;
    QuadResult q = integrate_semiinf(integrand);
    rep.raw[static_cast<size_t>(t.i)][static_cast<size_t>(t.j)] = q.value;
    rep.raw[static_cast<size_t>(t.j)][static_cast<size_t>(t.i)] = q.value;
    err[static_cast<size_t>(t.i)][static_cast<size_t>(t.j)] = q.error;
    nodes[idx] = q.nodes;
  });
  for (size_t k = 0; k < tasks.size(); ++k) rep.total_nodes += nodes[k];

  rep.normalized.assign(static_cast<size_t>(n),
                        std::vector<double>(static_cast<size_t>(n), 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double scale = std::sqrt(rep.raw[static_cast<size_t>(i)][static_cast<size_t>(i)] *
                               rep.raw[static_cast<size_t>(j)][static_cast<size_t>(j)]);
      double nv = std::fabs(rep.raw[static_cast<size_t>(i)][static_cast<size_t>(j)]) / scale;
      rep.normalized[static_cast<size_t>(i)][static_cast<size_t>(j)] = nv;
      rep.normalized[static_cast<size_t>(j)][static_cast<size_t>(i)] = nv;
      if (i != j) rep.max_offdiag = std::max(rep.max_offdiag, nv);
      rep.max_error = std::max(rep.max_error,
                               err[static_cast<size_t>(i)][static_cast<size_t>(j)] / scale);
    }
  }
  return rep;
}

CrossOrthoReport cross_ortho(const Rat& alpha, const Rat& beta, int n,
                             const std::vector<int>& ms, bool parallel) {
  for (int m : ms) {
    if (m < 0) throw RangeViolation("cross_ortho: negative index");
    if (!(Rat(2 * m) < alpha - beta + 1))
      throw RangeViolation("cross_ortho: index outside the convergent range");
  }
  const int k = static_cast<int>(ms.size());
  QuasiRationalFn w(Rat(-alpha - 2), beta,
                    RatPoly::constant(Rat(1)),
                    [&] {
                      RatPoly p = jacobi(n, {beta - 1, alpha + 1});
                      return p * p;
                    }());
  std::vector<RatPoly> polys;
  for (int m : ms) polys.push_back(xm_jacobi(m, n, {alpha, beta}).first.reflect());

  std::vector<std::vector<double>> raw(static_cast<size_t>(k),
                                       std::vector<double>(static_cast<size_t>(k), 0.0));
  std::vector<std::vector<double>> err(static_cast<size_t>(k),
                                       std::vector<double>(static_cast<size_t>(k), 0.0));
  std::vector<EntryTask> tasks;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j) tasks.push_back({i, j});
  run_tasks(tasks.size(), parallel, [&](size_t idx) {
    const EntryTask& t = tasks[idx];
    QuasiRationalFn integrand =
        QuasiRationalFn::from_poly(polys[static_cast<size_t>(t.i)] *
                                   polys[static_cast<size_t>(t.j)]) * w;
    QuadResult q = integrate_semiinf(integrand);
    raw[static_cast<size_t>(t.i)][static_cast<size_t>(t.j)] = q.value;
    err[static_cast<size_t>(t.i)][static_cast<size_t>(t.j)] = q.error;
  });

  CrossOrthoReport rep;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      double scale = std::sqrt(raw[static_cast<size_t>(i)][static_cast<size_t>(i)] *
                               raw[static_cast<size_t>(j)][static_cast<size_t>(j)]);
      CrossOrthoPair pr;
      pr.m1 = ms[static_cast<size_t>(i)];
      pr.m2 = ms[static_cast<size_t>(j)];
      pr.value = std::fabs(raw[static_cast<size_t>(i)][static_cast<size_t>(j)]) / scale;
      pr.error = err[static_cast<size_t>(i)][static_cast<size_t>(j)] / scale;
      rep.pairs.push_back(pr);
      rep.max_offdiag = std::max(rep.max_offdiag, pr.value);
      rep.max_error = std::max(rep.max_error, pr.error);
    }
  }
  return rep;
}

ZeroCount exceptional_zero_count(int m, int n, const JacobiParams& prm) {
  RatPoly p = xm_jacobi(m, n, prm).first;
  ZeroCount zc;
  zc.left = sturm_count(p, Interval::below(Rat(-1)));
  zc.inside = sturm_count(p, Interval::open(Rat(-1), Rat(1)));
  zc.right = sturm_count(p, Interval::above(Rat(1)));
  return zc;
}

}  // namespace xrj
