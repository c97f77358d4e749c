#include "xrj/cli_run.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "xrj/orthocheck.hpp"
#include "xrj/potentials.hpp"

namespace xrj {

namespace {

using nlohmann::json;

json rat_json(const Rat& r) { return to_string(r); }

json coeffs_json(const RatPoly& p) {
  json a = json::array();
  for (const Rat& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

int parse_sign(const std::string& s) {
  if (s == "+" || s == "+1" || s == "1") return 1;
  if (s == "-" || s == "-1") return -1;
  throw RangeViolation("sign token must be one of +, -, +1, -1");
}

XRFamily parse_xr_family(const std::string& s) {
  if (s == "a") return XRFamily::a;
  if (s == "a'" || s == "ap" || s == "a_prime") return XRFamily::a_prime;
  if (s == "b") return XRFamily::b;
  throw RangeViolation("family must be one of a, a', b");
}

GramFamily parse_gram_family(const std::string& s) {
  if (s == "a") return GramFamily::xr_a;
  if (s == "a'" || s == "ap" || s == "a_prime") return GramFamily::xr_a_prime;
  if (s == "b") return GramFamily::xr_b;
  if (s == "base") return GramFamily::r_jacobi;
  throw RangeViolation("family must be one of a, a', b, base");
}

struct TypeRow {
  const char* token;
  SeedType type;
  int sm, sp, sinf;
};

constexpr TypeRow kTypeRows[] = {
    {"a", SeedType::a, +1, +1, -1},   {"a'", SeedType::a_prime, -1, +1, -1},
    {"b", SeedType::b, -1, -1, +1},   {"b'", SeedType::b_prime, -1, +1, +1},
    {"c", SeedType::c, -1, +1, +1},   {"d", SeedType::d, +1, -1, -1},
    {"d'", SeedType::d_prime, -1, -1, -1},
};

SeedSpec seed_from_type(const std::string& token, int m, const LambdaPair& lam_o) {
  for (const TypeRow& row : kTypeRows) {
    if (token == row.token) {
      SeedSpec spec = classify({row.sm, row.sp, 0}, row.sinf, m, lam_o);
      if (spec.type != row.type)
        throw RangeViolation("parameters select a different row than requested");
      return spec;
    }
  }
  throw NoSuchType("unknown seed type token: " + token);
}

json matrix_json(const std::vector<std::vector<double>>& m) {
  json rows = json::array();
  for (const auto& r : m) rows.push_back(r);
  return rows;
}

// ---- canned residual suites ----

struct SuiteResult {
  int checks = 0;
  int failures = 0;
  json detail = json::array();
};

void suite_check(SuiteResult& sr, const std::string& label, bool ok) {
  ++sr.checks;
  if (!ok) {
    ++sr.failures;
    sr.detail.push_back(label);
  }
}

SuiteResult residuals_heine() {
  SuiteResult sr;
  LambdaPair lam(rat(11, 2), rat(1, 2));
  struct Case { XRFamily fam; int m; };
  std::vector<Case> cases;
  for (int m : {0, 1, 2}) cases.push_back({XRFamily::a, m});
  for (int m : {5, 6}) cases.push_back({XRFamily::a_prime, m});
  for (int m : {0, 1, 2}) cases.push_back({XRFamily::b, m});
  for (const Case& c : cases)
    for (int v : {0, 1}) {
      std::string label = std::string("heine ") + xr_family_label(c.fam) + " m=" +
                          std::to_string(c.m) + " v=" + std::to_string(v);
      suite_check(sr, label, heine_residual_xr(c.fam, c.m, v, lam).is_zero());
    }
  return sr;
}

SuiteResult residuals_csle() {
  SuiteResult sr;
  struct Case {
    const char* label;
    SigmaPair sigma;
    int m;
    LambdaPair lam;
  };
  const std::vector<Case> cases = {
      {"a", {+1, +1, 0}, 1, LambdaPair(rat(11, 2), rat(1, 2))},
      {"a'", {-1, +1, 0}, 5, LambdaPair(rat(11, 2), rat(1, 2))},
      {"b", {-1, -1, 0}, 1, LambdaPair(rat(13, 2), rat(3, 2))},
      {"b'", {-1, +1, 0}, 0, LambdaPair(rat(1, 2), rat(7, 2))},
      {"c", {-1, +1, 0}, 1, LambdaPair(rat(11, 2), rat(1, 2))},
      {"d", {+1, -1, 0}, 1, LambdaPair(rat(11, 2), rat(1, 2))},
      {"d'", {-1, -1, 0}, 3, LambdaPair(rat(11, 2), rat(1))},
  };
  for (const Case& c : cases) {
    QuasiRationalFn phi = seed_fn(c.sigma, c.m, c.lam);
    Rat eps = csle_from_prime(seed_energy_prime(c.sigma, c.m, c.lam));
    QuasiRationalFn res = csle_residual(phi, eps, ref_pfr(c.lam));
    suite_check(sr, std::string("csle seed ") + c.label, res.is_zero());
  }
  LambdaPair lam(rat(11, 2), rat(1, 2));
  for (int v : {0, 1, 2}) {
    QuasiRationalFn phi = eigenfunction_base(v, lam);
    Rat eps = csle_from_prime(eigen_prime_energy(v, lam));
    QuasiRationalFn res = csle_residual(phi, eps, ref_pfr(lam));
    suite_check(sr, "csle eigen v=" + std::to_string(v), res.is_zero());
  }
  return sr;
}

SuiteResult residuals_pfr() {
  SuiteResult sr;
  struct Case {
    const char* label;
    SigmaPair sigma;
    int m;
    LambdaPair lam;
  };
  const std::vector<Case> cases = {
      {"a m=1", {+1, +1, 0}, 1, LambdaPair(rat(3), rat(1))},
      {"a m=2", {+1, +1, 0}, 2, LambdaPair(rat(11, 2), rat(1, 2))},
      {"a' m=5", {-1, +1, 0}, 5, LambdaPair(rat(11, 2), rat(1, 2))},
      {"b m=1", {-1, -1, 0}, 1, LambdaPair(rat(13, 2), rat(3, 2))},
      {"d m=1", {+1, -1, 0}, 1, LambdaPair(rat(11, 2), rat(1, 2))},
  };
  for (const Case& c : cases) {
    QuasiRationalFn direct = transformed_pfr(c.sigma, c.m, c.lam);
    QuasiRationalFn poles = transformed_pfr_poles(c.sigma, c.m, c.lam);
    suite_check(sr, std::string("pfr dual route ") + c.label, direct == poles);
    suite_check(sr, std::string("pfr tail ") + c.label,
                pfr_tail_limit(direct) == Rat(1, 4));
  }
  return sr;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exceptional and deformed Jacobi polynomial toolkit"};
  app.require_subcommand(1);
  bool csv = false, dump = false;
  app.add_flag("--csv", csv, "CSV output where supported");
  app.add_flag("--dump-samples", dump, "include sampling detail in the output");

  std::string s_n, s_m, s_v, s_alpha, s_beta, s_lm, s_lp, s_family, s_case;
  std::string s_sm, s_sp, s_sinf, s_seed;
  int i_n = 0, i_m = 0, i_v = 0, nmax = 12, samples = 20;
  std::vector<int> m_list;
  std::vector<double> fd_args;

  CLI::App* c_jacobi = app.add_subcommand("jacobi", "Jacobi polynomial coefficients");
  c_jacobi->add_option("n", i_n)->required();
  c_jacobi->add_option("alpha", s_alpha)->required();
  c_jacobi->add_option("beta", s_beta)->required();

  CLI::App* c_xm = app.add_subcommand("xmjacobi", "exceptional polynomial of codimension m");
  c_xm->add_option("m", i_m)->required();
  c_xm->add_option("n", i_n)->required();
  c_xm->add_option("alpha", s_alpha)->required();
  c_xm->add_option("beta", s_beta)->required();

  CLI::App* c_xr = app.add_subcommand("xr", "deformed-family polynomial");
  c_xr->add_option("family", s_family)->required();
  c_xr->add_option("m", i_m)->required();
  c_xr->add_option("v", i_v)->required();
  c_xr->add_option("lam_minus", s_lm)->required();
  c_xr->add_option("lam_plus", s_lp)->required();

  CLI::App* c_classify = app.add_subcommand("classify", "seed classification row");
  c_classify->add_option("sigma_minus", s_sm)->required();
  c_classify->add_option("sigma_plus", s_sp)->required();
  c_classify->add_option("sigma_inf", s_sinf)->required();
  c_classify->add_option("m", i_m)->required();
  c_classify->add_option("lam_minus", s_lm)->required();
  c_classify->add_option("lam_plus", s_lp)->required();

  CLI::App* c_spectrum = app.add_subcommand("spectrum", "discrete spectrum");
  c_spectrum->add_option("lam_minus", s_lm)->required();
  c_spectrum->add_option("lam_plus", s_lp)->required();

  CLI::App* c_gram = app.add_subcommand("gram", "family Gram matrix");
  c_gram->add_option("family", s_family)->required();
  c_gram->add_option("m", i_m)->required();
  c_gram->add_option("lam_minus", s_lm)->required();
  c_gram->add_option("lam_plus", s_lp)->required();

  CLI::App* c_cross = app.add_subcommand("cross-ortho", "pairwise inner products");
  c_cross->add_option("alpha", s_alpha)->required();
  c_cross->add_option("beta", s_beta)->required();
  c_cross->add_option("n", i_n)->required();
  c_cross->add_option("m", m_list)->required();

  CLI::App* c_zeros = app.add_subcommand("zeros", "root location counts");
  c_zeros->add_option("m", i_m)->required();
  c_zeros->add_option("n", i_n)->required();
  c_zeros->add_option("alpha", s_alpha)->required();
  c_zeros->add_option("beta", s_beta)->required();

  CLI::App* c_ident = app.add_subcommand("identities", "parameter-shift identity suite");
  c_ident->add_option("--nmax", nmax);
  c_ident->add_option("--samples", samples);

  CLI::App* c_res = app.add_subcommand("residuals", "exact residual suites");
  c_res->add_option("case", s_case)->required()->check(CLI::IsMember({"heine", "csle", "pfr"}));

  CLI::App* c_pot = app.add_subcommand("potential", "hyperbolic potential and spectra");
  c_pot->add_option("lam_minus", s_lm)->required();
  c_pot->add_option("lam_plus", s_lp)->required();
  c_pot->add_option("--seed", s_seed, "deform with seed type,m (e.g. a,1)");
  c_pot->add_option("--fd", fd_args, "finite-difference run: rmin rmax N")->expected(3);

  CLI::App* c_batch = app.add_subcommand("batch", "line-delimited JSON requests on stdin");

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << json{{"error", "usage"}, {"what", e.what()}}.dump() << "\n";
    return 2;
  }

  try {
    if (c_jacobi->parsed()) {
      RatPoly p = jacobi(i_n, {rat_from_string(s_alpha), rat_from_string(s_beta)});
      out << coeffs_json(p).dump() << "\n";
      return 0;
    }

    if (c_xm->parsed()) {
      auto [p, lead] = xm_jacobi(i_m, i_n, {rat_from_string(s_alpha), rat_from_string(s_beta)});
      json j{{"m", i_m}, {"n", i_n}, {"alpha", s_alpha}, {"beta", s_beta},
             {"degree", p.degree()}, {"leading", rat_json(lead)}, {"coeffs", coeffs_json(p)}};
      out << j.dump() << "\n";
      return 0;
    }

    if (c_xr->parsed()) {
      LambdaPair lam(rat_from_string(s_lm), rat_from_string(s_lp));
      XPolyResult res = xr_jacobi(parse_xr_family(s_family), i_m, i_v, lam);
      json j{{"family", family_name(res.family)}, {"seed_m", i_m}, {"v", i_v},
             {"lam", {s_lm, s_lp}}, {"kappa", {res.kappa_minus, res.kappa_plus}},
             {"degree", res.N}, {"pre_leading", rat_json(res.pre_leading)},
             {"coeffs", coeffs_json(res.poly)}};
      out << j.dump() << "\n";
      return 0;
    }

    if (c_classify->parsed()) {
      LambdaPair lam(rat_from_string(s_lm), rat_from_string(s_lp));
      SigmaPair sigma{parse_sign(s_sm), parse_sign(s_sp), 0};
      SeedSpec spec = classify(sigma, parse_sign(s_sinf), i_m, lam);
      json j{{"type", seed_type_name(spec.type)}, {"m", spec.m},
             {"K", rat_json(seed_k(sigma, i_m, lam))},
             {"energy_prime", rat_json(spec.energy_prime)},
             {"energy", rat_json(csle_from_prime(spec.energy_prime))}};
      out << j.dump() << "\n";
      return 0;
    }

    if (c_spectrum->parsed()) {
      LambdaPair lam(rat_from_string(s_lm), rat_from_string(s_lp));
      Spectrum sp = spectrum(lam);
      if (csv) {
        out << "v,energy_prime,energy\n";
        for (size_t v = 0; v < sp.energies.size(); ++v)
          out << v << "," << to_string(sp.energies[v]) << ","
              << to_string(schrodinger_from_prime(sp.energies[v])) << "\n";
        return 0;
      }
      json energies = json::array();
      for (const Rat& e : sp.energies) energies.push_back(to_string(e));
      json j{{"v_max", sp.v_max}, {"energies", energies}, {"empty", sp.empty},
             {"marginal_top", sp.marginal_top}};
      out << j.dump() << "\n";
      return 0;
    }

    if (c_gram->parsed()) {
      LambdaPair lam(rat_from_string(s_lm), rat_from_string(s_lp));
      GramReport rep = gram(parse_gram_family(s_family), i_m, lam);
      if (csv) {
        out << "i,j,v_i,v_j,raw,normalized\n";
        for (size_t i = 0; i < rep.levels.size(); ++i)
          for (size_t j = 0; j < rep.levels.size(); ++j)
            out << i << "," << j << "," << rep.levels[i] << "," << rep.levels[j] << ","
                << rep.raw[i][j] << "," << rep.normalized[i][j] << "\n";
        return 0;
      }
      json j{{"family", s_family}, {"seed_m", i_m}, {"lam", {s_lm, s_lp}},
             {"levels", rep.levels}, {"normalized", matrix_json(rep.normalized)},
             {"max_offdiag", rep.max_offdiag}, {"max_error", rep.max_error}};
      if (dump) {
        j["raw"] = matrix_json(rep.raw);
        j["total_nodes"] = rep.total_nodes;
      }
      out << j.dump() << "\n";
      return 0;
    }

    if (c_cross->parsed()) {
      CrossOrthoReport rep =
          cross_ortho(rat_from_string(s_alpha), rat_from_string(s_beta), i_n, m_list);
      json pairs = json::array();
      for (const CrossOrthoPair& p : rep.pairs)
        pairs.push_back(json{{"m1", p.m1}, {"m2", p.m2}, {"value", p.value},
                             {"error", p.error}});
      bool pass = rep.max_offdiag < 1e-8;
      json j{{"alpha", s_alpha}, {"beta", s_beta}, {"n", i_n}, {"pairs", pairs},
             {"max_offdiag", rep.max_offdiag}, {"max_error", rep.max_error},
             {"pass", pass}};
      out << j.dump() << "\n";
      return pass ? 0 : 1;
    }

    if (c_zeros->parsed()) {
      ZeroCount zc = exceptional_zero_count(
          i_m, i_n, {rat_from_string(s_alpha), rat_from_string(s_beta)});
      bool pass = zc.left == i_m && zc.inside == i_n && zc.right == 0;
      json j{{"left", zc.left}, {"inside", zc.inside}, {"right", zc.right}, {"pass", pass}};
      out << j.dump() << "\n";
      return pass ? 0 : 1;
    }

    if (c_ident->parsed()) {
      IdentityReport rep = verify_contiguous_identities(nmax, samples);
      json j{{"pass", rep.pass}, {"checks", rep.checks}, {"failures", rep.failures}};
      out << j.dump() << "\n";
      return rep.pass ? 0 : 1;
    }

    if (c_res->parsed()) {
      SuiteResult sr;
      if (s_case == "heine") sr = residuals_heine();
      else if (s_case == "csle") sr = residuals_csle();
      else sr = residuals_pfr();
      bool pass = sr.failures == 0;
      json j{{"case", s_case}, {"checks", sr.checks}, {"pass", pass}};
      if (!pass) j["failures"] = sr.detail;
      out << j.dump() << "\n";
      return pass ? 0 : 1;
    }

    if (c_pot->parsed()) {
      LambdaPair lam(rat_from_string(s_lm), rat_from_string(s_lp));
      PotentialSpec spec = base_potential(lam);
      json j{{"lam", {s_lm, s_lp}}, {"g", rat_json(spec.g)}, {"h", rat_json(spec.h)},
             {"deformed", false}};
      if (!s_seed.empty()) {
        auto comma = s_seed.find(',');
        if (comma == std::string::npos)
          throw RangeViolation("--seed expects type,m (e.g. a,1)");
        SeedSpec seed = seed_from_type(s_seed.substr(0, comma),
                                       std::stoi(s_seed.substr(comma + 1)), lam);
        spec = build_potential(seed);
        j["deformed"] = true;
        j["seed"] = {{"type", seed_type_name(seed.type)}, {"m", seed.m},
                     {"energy_prime", rat_json(seed.energy_prime)}};
      }
      j["potential_eta"] = spec.v_eta.to_string();
      json energies = json::array();
      for (const Rat& e : analytic_energies(lam)) energies.push_back(to_string(e));
      j["analytic_energies"] = energies;
      if (!fd_args.empty()) {
        int n = static_cast<int>(fd_args[2]);
        int k = std::max<int>(1, static_cast<int>(energies.size()));
        FdResult fd = fd_spectrum(spec, fd_args[0], fd_args[1], n, k);
        json jf{{"r_min", fd.r_min}, {"r_max", fd.r_max}, {"n", fd.n},
                {"energies", fd.energies}};
        if (dump) {
          jf["coarse"] = fd.coarse;
          jf["fine"] = fd.fine;
        }
        j["fd"] = jf;
      }
      out << j.dump() << "\n";
      return 0;
    }

    if (c_batch->parsed()) {
      std::string line;
      int worst = 0;
      while (std::getline(std::cin, line)) {
        if (line.empty()) continue;
        json req = json::parse(line, nullptr, false);
        if (req.is_discarded() || !req.is_array()) {
          out << json{{"exit", 2}, {"error", "each line must be a JSON array of arguments"}}.dump()
              << "\n";
          worst = std::max(worst, 2);
          continue;
        }
        std::vector<std::string> sub_args;
        for (const auto& v : req) sub_args.push_back(v.get<std::string>());
        std::ostringstream so, se;
        int code = run(sub_args, so, se);
        json rec{{"exit", code}};
        json parsed = json::parse(so.str(), nullptr, false);
        rec["result"] = parsed.is_discarded() ? json(so.str()) : parsed;
        if (!se.str().empty()) {
          json perr = json::parse(se.str(), nullptr, false);
          rec["stderr"] = perr.is_discarded() ? json(se.str()) : perr;
        }
        out << rec.dump() << "\n";
        worst = std::max(worst, code);
      }
      return worst;
    }
  } catch (const Error& e) {
    err << json{{"error", e.kind()}, {"what", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << json{{"error", "error"}, {"what", e.what()}}.dump() << "\n";
    return 2;
  }
  err << json{{"error", "usage"}, {"what", "no subcommand"}}.dump() << "\n";
  return 2;
}

}  // namespace xrj
