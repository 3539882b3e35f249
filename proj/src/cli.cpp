#include "htau/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "htau/analytic.hpp"
#include "htau/errors.hpp"
#include "htau/hurwitz.hpp"
#include "htau/table_io.hpp"
#include "htau/tau_series.hpp"
#include "htau/weights.hpp"

namespace htau::cli {

namespace {

using Json = nlohmann::ordered_json;

struct GenFlags {
  std::string gen = "trivial";
  std::string c;
  std::string d;
  std::string q;
};

void add_gen_flags(CLI::App* app, GenFlags& f) {
  app->add_option("--gen", f.gen, "weight family: trivial, product, rational, quantum")
      ->check(CLI::IsMember({"trivial", "product", "rational", "quantum"}));
  app->add_option("--c", f.c, "comma-separated rationals c_1,c_2,...");
  app->add_option("--d", f.d, "comma-separated rationals d_1,d_2,... (rational family)");
  app->add_option("--q", f.q, "quantum parameter, 0 < |q| < 1");
}

Rational parse_flag_rational(const std::string& flag, const std::string& text, std::size_t offset = 0) {
  try {
    return Rational::parse(text);
  } catch (const ParseError& e) {
    throw ParseError(flag + ": " + e.what(), offset + e.position());
  }
}

std::vector<Rational> parse_rational_list(const std::string& flag, const std::string& text) {
  std::vector<Rational> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string::npos ? text.size() : comma;
    out.push_back(parse_flag_rational(flag, text.substr(start, end - start), start));
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

WeightGen make_gen(const GenFlags& f) {
  if (f.gen == "trivial") return WeightGen::trivial();
  if (f.gen == "product") return WeightGen::finite_product(parse_rational_list("--c", f.c));
  if (f.gen == "rational") {
    return WeightGen::rational(parse_rational_list("--c", f.c), parse_rational_list("--d", f.d));
  }
  if (f.q.empty()) throw UsageError("--gen quantum requires --q");
  return WeightGen::quantum(parse_flag_rational("--q", f.q));
}

Partition parse_flag_partition(const std::string& flag, const std::string& text) {
  try {
    return Partition::parse(text);
  } catch (const ParseError& e) {
    throw ParseError(flag + ": " + e.what(), e.position());
  }
}

Json partition_json(const Partition& p) {
  Json a = Json::array();
  for (int part : p.parts()) a.push_back(part);
  return a;
}

Json profiles_json(const std::vector<Partition>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(partition_json(p));
  return a;
}

// ---------------------------------------------------------------------------
// verify

struct Check {
  std::string suite;
  std::string identity;
  std::string params;
  bool passed;
  std::string detail;
};

class CheckLog {
public:
  void add(Check c) { checks_.push_back(std::move(c)); }

  // Runs fn, turning a library error into a failed check with its reason.
  void guarded(const std::string& suite, const std::string& identity, const std::string& params,
               const std::function<Check()>& fn) {
    try {
      add(fn());
    } catch (const Error& e) {
      add({suite, identity, params, false, std::string(error_code_name(e.code())) + ": " + e.what()});
    }
  }

  int failures() const {
    return static_cast<int>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed; }));
  }

  void print(std::ostream& out) const {
    std::size_t w_id = 8, w_params = 6;
    for (const auto& c : checks_) {
      w_id = std::max(w_id, c.suite.size() + 1 + c.identity.size());
      w_params = std::max(w_params, c.params.size());
    }
    auto pad = [](std::string s, std::size_t w) {
      s.resize(std::max(w, s.size()), ' ');
      return s;
    };
    out << "status  " << pad("identity", w_id) << "  " << pad("params", w_params) << "  detail\n";
    for (const auto& c : checks_) {
      out << (c.passed ? "PASS    " : "FAIL    ") << pad(c.suite + "/" + c.identity, w_id) << "  "
          << pad(c.params, w_params) << "  " << c.detail << "\n";
    }
    out << "summary: " << checks_.size() - static_cast<std::size_t>(failures()) << " passed, " << failures()
        << " failed\n";
  }

private:
  std::vector<Check> checks_;
};

std::string describe_report(const IdentityReport& r) {
  std::ostringstream s;
  s << "through j=" << r.checked_through;
  if (!r.passed) {
    s << ", " << r.nonzero << " nonzero";
    if (r.first_failure) s << ", first at j=" << *r.first_failure;
  }
  if (r.approximate) s << " (tolerance 1e-9)";
  return s.str();
}

Check from_report(const std::string& suite, const std::string& params, const IdentityReport& r) {
  return {suite, r.identity, params, r.passed, describe_report(r)};
}

struct VerifyFlags {
  std::string suite = "all";
  std::string beta = "1/7";
  int kmax = 6;
  int order = 20;
  int quantum_terms = 60;
  int nmax = 4;
  int deg = 3;
};

void verify_hurwitz(CheckLog& log) {
  int cases = 0, mismatches = 0;
  std::string first;
  for (int n = 2; n <= 4; ++n) {
    const auto parts = enumerate_partitions(n);
    for (int k = 1; k <= 3; ++k) {
      std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
      while (true) {
        std::vector<Partition> ps;
        for (auto i : idx) ps.push_back(parts[i]);
        const ProfileTuple pt(n, ps);
        ++cases;
        if (hurwitz_number(pt) != hurwitz_oracle(pt)) {
          if (mismatches++ == 0) first = "N=" + std::to_string(n) + " " + profiles_json(ps).dump();
        }
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == parts.size()) idx[pos++] = 0;
        if (pos == idx.size()) break;
      }
    }
  }
  log.add({"hurwitz", "character_sum_vs_factorizations", "N<=4, 1-3 profiles", mismatches == 0,
           std::to_string(cases) + " tuples" + (mismatches ? ", first mismatch " + first : "")});
}

void verify_tables(CheckLog& log, const WeightGen& g, const VerifyFlags& f) {
  const std::string params = "N<=" + std::to_string(f.nmax) + ", d<=" + std::to_string(f.deg);
  log.guarded("tables", "tau_vs_weighted_count", params, [&]() -> Check {
    const TauTable table(g, f.deg, f.nmax);
    int cases = 0, bad = 0;
    for (int n = 1; n <= f.nmax; ++n)
      for (const auto& mu : enumerate_partitions(n))
        for (const auto& nu : enumerate_partitions(n))
          for (int d = 0; d <= f.deg; ++d) {
            ++cases;
            if (extract_H(table, d, mu, nu) != weighted_hurwitz(g, d, mu, nu)) ++bad;
          }
    return {"tables", "tau_vs_weighted_count", params, bad == 0,
            std::to_string(cases) + " cases" + (bad ? ", " + std::to_string(bad) + " mismatches" : "")};
  });
  log.guarded("tables", "single_vs_double", params, [&]() -> Check {
    const TauTable dbl(g, f.deg, f.nmax);
    const SingleTauTable single(g, f.deg, f.nmax);
    int cases = 0, bad = 0;
    for (int n = 1; n <= f.nmax; ++n)
      for (const auto& mu : enumerate_partitions(n))
        for (int d = 0; d <= f.deg; ++d) {
          ++cases;
          if (single.entry(mu, d) != extract_H(dbl, d, mu, Partition::identity(n))) ++bad;
        }
    return {"tables", "single_vs_double", params, bad == 0,
            std::to_string(cases) + " cases" + (bad ? ", " + std::to_string(bad) + " mismatches" : "")};
  });
  log.guarded("tables", "degree_zero_orthogonality", "N<=" + std::to_string(f.nmax), [&]() -> Check {
    const TauTable table(g, 0, f.nmax);
    int bad = 0;
    for (int n = 0; n <= f.nmax; ++n)
      for (const auto& mu : enumerate_partitions(n))
        for (const auto& nu : enumerate_partitions(n)) {
          const Rational expect = mu == nu ? Rational(1) / z_of(mu) : Rational(0);
          if (extract_H(table, 0, mu, nu) != expect) ++bad;
        }
    return {"tables", "degree_zero_orthogonality", "N<=" + std::to_string(f.nmax), bad == 0,
            bad ? std::to_string(bad) + " mismatches" : "delta/z_mu"};
  });
}

void verify_analytic(CheckLog& log, const WeightGen& g, const VerifyFlags& f) {
  const Rational beta = parse_flag_rational("--beta", f.beta);
  const std::optional<int> m = g.is_quantum() ? std::optional<int>(f.quantum_terms) : std::nullopt;
  const std::string b = "beta=" + beta.str();
  const bool rational_ode = [&] {
    const auto* r = std::get_if<WeightGen::RationalGen>(&g.variant());
    return r && std::none_of(r->c.begin(), r->c.end(), [](const Rational& c) { return c.is_zero(); });
  }();

  for (int k = 1; k <= f.kmax; ++k) {
    const std::string params = "k=" + std::to_string(k) + " " + b + " J=" + std::to_string(f.order);
    if (g.is_trivial()) {
      log.guarded("analytic", "trivial_closed_form", params, [&] {
        return from_report("analytic", params, check_trivial_closed_form(phi_k(g, beta, k, f.order, m)));
      });
    }
    if (k >= 2) {
      log.guarded("analytic", "recursion", params,
                  [&] { return from_report("analytic", params, check_recursion(g, beta, k, f.order, m)); });
    }
    log.guarded("analytic", "spectral", params,
                [&] { return from_report("analytic", params, check_spectral(g, beta, k, f.order, m)); });
    if (rational_ode) {
      log.guarded("analytic", "rational_ode", params, [&] {
        return from_report("analytic", params, check_rational_ode(g, phi_k(g, beta, k, f.order, m)));
      });
    }
  }

  // Negative controls: a single perturbed rho value must be detected.
  if (f.kmax >= 2 && f.order >= 3) {
    const std::string params = "k=2 " + b + " rho_1 += 1";
    log.guarded("analytic", "perturbed_rho_detected", params, [&]() -> Check {
      const RhoTable rho(g, beta, -2, f.order, m);
      const RhoTable bad = rho.perturbed(1, Rational(1));
      PhiSeries phi2 = phi_from_rho(bad, 2, f.order);
      PhiSeries phi1 = phi_from_rho(rho, 1, f.order);
      phi2.approximate = phi1.approximate = g.is_quantum();
      const IdentityReport rec = check_recursion(phi2, phi1);
      const IdentityReport spectral = check_spectral(g, phi2, m);
      return {"analytic", "perturbed_rho_detected", params, !rec.passed && !spectral.passed,
              std::string("recursion ") + (rec.passed ? "missed" : "failed") + ", spectral " +
                  (spectral.passed ? "missed" : "failed")};
    });
  }

  // Determinantal forms at x_i = t y_i; series in t compared degree by degree.
  const int det_order = std::min(f.order, 12);
  std::vector<Rational> y;
  for (int n = 1; n <= 3; ++n) {
    y.push_back(Rational(1, 100 * n));
    const std::string params = "n=" + std::to_string(n) + " " + b + " J=" + std::to_string(det_order);
    log.guarded("analytic", "calibration", params, [&]() -> Check {
      const auto cal = calibrate(det_rep_literal(g, beta, y, det_order, m), beta);
      const bool ok = cal && cal->sign == 1 && cal->beta_exponent == n * kRowCalibrationExponent;
      return {"analytic", "calibration", params, ok,
              cal ? "beta_exponent=" + std::to_string(cal->beta_exponent) + " (" +
                        std::to_string(kRowCalibrationExponent) + " per row)"
                  : "no power of beta normalizes the constant term"};
    });
    log.guarded("analytic", "det_vs_series", params, [&]() -> Check {
      const TauRepresentation det = tau_det_rep(g, beta, y, det_order, m);
      const auto direct = tau_matrix_degree_parts(g, beta, y, det.exact_through, m);
      int bad = 0;
      for (int deg = 0; deg <= det.exact_through; ++deg)
        if (det.series.coeff(deg) != direct[static_cast<std::size_t>(deg)]) ++bad;
      return {"analytic", "det_vs_series", params, bad == 0,
              "degrees 0.." + std::to_string(det.exact_through) + (bad ? ", " + std::to_string(bad) + " differ" : "")};
    });
    log.guarded("analytic", "wronskian_vs_det", params, [&]() -> Check {
      const TauRepresentation det = tau_det_rep(g, beta, y, det_order, m);
      const TauRepresentation wr = tau_wronskian(g, beta, y, det_order, m);
      const int top = std::min(det.exact_through, wr.exact_through);
      int bad = 0;
      for (int deg = 0; deg <= top; ++deg)
        if (det.series.coeff(deg) != wr.series.coeff(deg)) ++bad;
      return {"analytic", "wronskian_vs_det", params, bad == 0,
              "degrees 0.." + std::to_string(top) + (bad ? ", " + std::to_string(bad) + " differ" : "")};
    });
  }
}

// ---------------------------------------------------------------------------

int dispatch(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"Exact Hurwitz numbers and hypergeometric tau-function checks", "htau"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::function<int()> action;

  // hurwitz
  int h_n = 0;
  std::string h_profiles;
  bool h_oracle = false;
  auto* hurwitz = app.add_subcommand("hurwitz", "classical Hurwitz number from the character formula");
  hurwitz->add_option("--n", h_n, "sheet count N")->required();
  hurwitz->add_option("--profiles", h_profiles, "profiles, e.g. \"[2],[2]\"")->required();
  hurwitz->add_flag("--oracle", h_oracle, "also count permutation factorizations (N <= 5, at most 4 profiles)");
  hurwitz->callback([&] {
    action = [&] {
      std::vector<Partition> ps;
      try {
        ps = parse_partition_list(h_profiles);
      } catch (const ParseError& e) {
        throw ParseError(std::string("--profiles: ") + e.what(), e.position());
      }
      const ProfileTuple pt(h_n, ps);
      const RiemannHurwitzData rh = riemann_hurwitz(pt);
      Json j;
      j["N"] = h_n;
      j["profiles"] = profiles_json(ps);
      j["H"] = hurwitz_number(pt).str();
      j["d"] = rh.d;
      j["chi"] = rh.chi;
      if (h_oracle) j["H_oracle"] = hurwitz_oracle(pt).str();
      out << j.dump() << "\n";
      return kExitOk;
    };
  });

  // weighted
  GenFlags w_gen;
  int w_deg = 0;
  std::string w_mu, w_nu;
  bool w_trace = false;
  auto* weighted = app.add_subcommand("weighted", "weighted double Hurwitz number");
  add_gen_flags(weighted, w_gen);
  weighted->add_option("--deg", w_deg, "total colength d of the weighted branch points")->required();
  weighted->add_option("--mu", w_mu, "profile over 0, e.g. [2,1]")->required();
  weighted->add_option("--nu", w_nu, "profile over infinity")->required();
  weighted->add_flag("--trace", w_trace, "list every contributing configuration with its weight");
  weighted->callback([&] {
    action = [&] {
      const WeightGen g = make_gen(w_gen);
      const Partition mu = parse_flag_partition("--mu", w_mu);
      const Partition nu = parse_flag_partition("--nu", w_nu);
      const WeightedCount wc = weighted_hurwitz_detailed(g, w_deg, mu, nu);
      Json j;
      j["gen"] = g.describe();
      j["d"] = w_deg;
      j["mu"] = partition_json(mu);
      j["nu"] = partition_json(nu);
      j["H"] = wc.value.str();
      Json terms = Json::array();
      for (const auto& t : wc.terms) {
        Json e;
        e["profiles"] = profiles_json(t.c_block);
        if (std::holds_alternative<WeightGen::RationalGen>(g.variant())) e["dual_profiles"] = profiles_json(t.d_block);
        if (w_trace) {
          e["orderings"] = t.arrangements;
          e["weight"] = t.weight.str();
          e["hurwitz"] = t.hurwitz.str();
        }
        terms.push_back(std::move(e));
      }
      j["terms"] = std::move(terms);
      out << j.dump() << "\n";
      return kExitOk;
    };
  });

  // tau-coeffs
  GenFlags t_gen;
  int t_order = 3, t_nmax = 4;
  std::string t_format = "csv";
  bool t_single = false;
  auto* tau = app.add_subcommand("tau-coeffs", "power-sum coefficients of the tau-function");
  add_gen_flags(tau, t_gen);
  tau->add_option("--order", t_order, "beta truncation D (d = 0..D)");
  tau->add_option("--nmax", t_nmax, "largest weight |mu|");
  tau->add_option("--out,--format", t_format, "csv or json");
  tau->add_flag("--single", t_single, "single tau-function rows (mu, d, H) instead of (mu, nu, d, H)");
  tau->callback([&] {
    action = [&] {
      const TableFormat fmt = parse_table_format(t_format);
      const WeightGen g = make_gen(t_gen);
      out << (t_single ? emit_table(tau_rows(tau_single_table(g, t_order, t_nmax)), fmt)
                       : emit_table(tau_rows(tau_double_table(g, t_order, t_nmax)), fmt));
      return kExitOk;
    };
  });

  // chartable
  int c_n = 0;
  std::string c_format = "csv";
  auto* chartable = app.add_subcommand("chartable", "character table of S_n");
  chartable->add_option("--n", c_n, "n")->required()->check(CLI::Range(0, 30));
  chartable->add_option("--out,--format", c_format, "csv or json");
  chartable->callback([&] {
    action = [&] {
      out << emit_table(character_rows(c_n), parse_table_format(c_format));
      return kExitOk;
    };
  });

  // phi
  GenFlags p_gen;
  std::string p_beta;
  int p_k = 1, p_order = 10, p_m = 60;
  std::string p_format = "csv";
  auto* phi = app.add_subcommand("phi", "coefficients of the adapted basis element phi_k");
  add_gen_flags(phi, p_gen);
  phi->add_option("--beta", p_beta, "beta as p/q")->required();
  phi->add_option("--k", p_k, "basis index k >= 1");
  phi->add_option("--order", p_order, "x-order J");
  phi->add_option("--M", p_m, "quantum product truncation");
  phi->add_option("--out,--format", p_format, "csv or json");
  phi->callback([&] {
    action = [&] {
      const TableFormat fmt = parse_table_format(p_format);
      const WeightGen g = make_gen(p_gen);
      const PhiSeries ph = phi_k(g, parse_flag_rational("--beta", p_beta), p_k, p_order,
                                 g.is_quantum() ? std::optional<int>(p_m) : std::nullopt);
      Table t{{"j", "exponent", "coeff"}, {}};
      for (int j = 0; j <= p_order; ++j)
        t.rows.push_back({std::to_string(j), std::to_string(ph.lead_exp() + j), ph.coeff(j).str()});
      out << emit_table(t, fmt);
      return kExitOk;
    };
  });

  // verify
  GenFlags v_gen;
  VerifyFlags vf;
  auto* verify = app.add_subcommand("verify", "run identity checks; exit 1 if any fails");
  add_gen_flags(verify, v_gen);
  verify->add_option("--suite", vf.suite, "hurwitz, tables, analytic or all")
      ->check(CLI::IsMember({"hurwitz", "tables", "analytic", "all"}));
  verify->add_option("--beta", vf.beta, "numeric beta for the analytic suite");
  verify->add_option("--kmax", vf.kmax, "largest basis index k")->check(CLI::Range(1, 12));
  verify->add_option("--order", vf.order, "x-order J of the basis series")->check(CLI::Range(0, 200));
  verify->add_option("--M", vf.quantum_terms, "quantum product truncation")->check(CLI::Range(1, 1000));
  verify->add_option("--nmax", vf.nmax, "largest weight for the table suite")->check(CLI::Range(0, 6));
  verify->add_option("--deg", vf.deg, "largest d for the table suite")->check(CLI::Range(0, 6));
  verify->callback([&] {
    action = [&] {
      const WeightGen g = make_gen(v_gen);
      CheckLog log;
      const bool all = vf.suite == "all";
      if (all || vf.suite == "hurwitz") verify_hurwitz(log);
      if (all || vf.suite == "tables") verify_tables(log, g, vf);
      if (all || vf.suite == "analytic") verify_analytic(log, g, vf);
      out << "gen: " << g.describe() << "\n";
      log.print(out);
      return log.failures() == 0 ? kExitOk : kExitCheckFailed;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  return action ? action() : kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out);
  } catch (const Error& e) {
    Json j;
    j["error"] = std::string(error_code_name(e.code()));
    j["message"] = e.what();
    if (const auto* pe = dynamic_cast<const ParseError*>(&e)) j["position"] = pe->position();
    err << j.dump() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    Json j;
    j["error"] = "internal";
    j["message"] = e.what();
    err << j.dump() << "\n";
    return kExitError;
  }
}

} // namespace htau::cli
