#include "normeuclid/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"
#include "normeuclid/constants.hpp"
#include "normeuclid/errors.hpp"
#include "normeuclid/format.hpp"
#include "normeuclid/lenstra.hpp"
#include "normeuclid/reproduce.hpp"
#include "normeuclid/rogers.hpp"
#include "normeuclid/zimmert.hpp"

namespace normeuclid::cli {
namespace {

using Json = nlohmann::ordered_json;
using Value = std::variant<double, long, bool, std::string>;

// An ordered list of named results, rendered as `quantity,value` CSV or as a
// flat JSON object.
class Report {
 public:
  Report& add(std::string key, Value v) {
    entries_.emplace_back(std::move(key), std::move(v));
    return *this;
  }
  Report& add(std::string key, const Evaluation& e) {
    add(key, e.value);
    return add(key + "_err", e.err_estimate);
  }

  std::string render(OutputFormat format) const {
    if (format == OutputFormat::json) {
      Json j = Json::object();
      for (const auto& [k, v] : entries_) std::visit([&](const auto& x) { j[k] = x; }, v);
      return j.dump(2) + "\n";
    }
    std::string out = "quantity,value\n";
    for (const auto& [k, v] : entries_) out += k + "," + text(v) + "\n";
    return out;
  }

 private:
  static std::string text(const Value& v) {
    if (const auto* d = std::get_if<double>(&v)) return fmt(*d);
    if (const auto* l = std::get_if<long>(&v)) return std::to_string(*l);
    if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
    return std::get<std::string>(v);
  }
  std::vector<std::pair<std::string, Value>> entries_;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open output file " + path);
  f << text;
  if (!f) throw DomainError("failed writing " + path);
}

Report rogers_report(long n, const RunConfig& cfg) {
  Report r;
  r.add("n", n).add("kappa", std::sqrt(0.5 * static_cast<double>(n))).add("theta", cfg.theta);
  r.add("sigma_upper_log", rogers::sigma_upper_log(n));
  const auto leech = rogers::leech_gap(n);
  r.add("leech_log2", leech.leech_log2).add("leech_predicted_gap", leech.predicted_gap);
  r.add("leech_actual_gap", leech.actual_gap);
  if (n < 1152) {
    r.add("f_lower", std::string("undefined (requires n >= 1152)"));
    return r;
  }
  const auto ctx = rogers::RogersContext::from_degree(n, cfg.theta);
  const auto c = rogers::error_constants(ctx);
  r.add("c1", c.c1).add("c2", c.c2).add("c3", c.c3).add("c41", c.c41).add("c42", c.c42);
  const auto t = rogers::f_lower_terms(ctx, cfg.tol);
  r.add("u_threshold", t.u_threshold).add("central_integral", t.integral);
  r.add("edge_term", t.edge_term).add("core_term", t.core_term).add("tail_term", t.tail_term);
  r.add("f_lower", t.value);
  const auto lower = rogers::sigma_lower_log(n, cfg.theta, cfg.tol);
  if (lower) {
    r.add("sigma_lower_log", *lower);
  } else {
    r.add("sigma_lower_log", std::string("vacuous"));
  }
  return r;
}

Report crossing_report(long n_min, long n_max, const RunConfig& cfg) {
  const long n = lenstra::find_crossing(cfg.theta, n_min, n_max, cfg.jobs);
  Report r;
  r.add("theta", cfg.theta).add("n_min", n_min).add("n_max", n_max).add("crossing", n);
  const auto at = lenstra::main_gap(n, 0, cfg.theta, cfg.tol);
  if (at) r.add("gap_at_crossing", *at);
  if (n > n_min) {
    const auto before = lenstra::main_gap(n - 1, 0, cfg.theta, cfg.tol);
    if (before) r.add("gap_before_crossing", *before);
  }
  return r;
}

Report check_report(long n, long r_real, double log_disc, double log_m, const RunConfig& cfg) {
  if ((n - r_real) % 2 != 0 || r_real > n || r_real < 0) {
    throw DomainError("lenstra-check: n - r must be even and 0 <= r <= n");
  }
  const auto sig = lenstra::FieldSignature::make(n, r_real, (n - r_real) / 2, log_disc);
  const auto input = lenstra::CriterionInput::make(sig, log_m);
  const auto v = lenstra::criterion_check(input, cfg.theta);
  Report r;
  r.add("n", n).add("r", r_real).add("s", sig.s).add("log_disc", log_disc).add("log_m", log_m);
  r.add("delta1_star_log", lenstra::delta1_star_log(n, sig.s));
  r.add("delta2_star_log_upper", lenstra::delta2_star_log_upper(n));
  r.add("delta1_holds", v.delta1_holds).add("delta2_holds", v.delta2_holds);
  r.add("max_log_disc_delta2", v.max_log_disc_delta2);
  r.add("uncond_lower_main", lenstra::uncond_lower_main(n, r_real));
  r.add("remark_condition", lenstra::remark_condition(static_cast<double>(r_real) / static_cast<double>(n)));
  if (n >= 2) {
    const double grh = lenstra::poitou_grh_lower(n, r_real);
    r.add("poitou_grh_lower", grh);
    r.add("grh_consistent", log_disc / static_cast<double>(n) >= grh);
  }
  return r;
}

Report zeta_report(long m, double s, cyclo::ZetaMethod method, const RunConfig& cfg) {
  cyclo::ZetaOptions opt;
  opt.method = method;
  opt.prime_limit = static_cast<std::uint64_t>(cfg.prime_limit);
  opt.jobs = cfg.jobs;
  const auto z = cyclo::zeta_cyclotomic(m, s, opt);
  const auto [r_real, s_cx] = cyclo::cyclo_signature(m);
  Report r;
  r.add("m", m).add("s", s).add("method", std::string(method == cyclo::ZetaMethod::hurwitz ? "hurwitz" : "euler"));
  r.add("degree", cyclo::cyclo_degree(m)).add("r", r_real).add("s_complex", s_cx);
  r.add("log_disc", cyclo::cyclo_disc_log(m));
  r.add("min_proper_ideal_norm", std::to_string(cyclo::min_proper_ideal_norm(m)));
  r.add("zeta", z).add("terms_used", static_cast<long>(z.terms_used));
  if (method == cyclo::ZetaMethod::hurwitz) r.add("logderiv", cyclo::zeta_cyclotomic_logderiv(m, s));
  return r;
}

Report zimmert_report(long a, long b, double beta) {
  if (a < 0 || b < 0) throw DomainError("zimmert: requires a, b >= 0");
  const auto z = zimmert::f_terms(beta);
  Report r;
  r.add("beta", beta).add("a", a).add("b", b);
  r.add("F1", z.f1_series).add("f1", z.f1_point).add("F2", z.f2_series).add("f2", z.f2_point).add("F3", z.f3);
  r.add("F1_plus_f1", z.f1_series.value + z.f1_point).add("F2_plus_f2", z.f2_series.value + z.f2_point);
  r.add("F_ab", z.combined(a, b));
  r.add("limit_F1_plus_f1", zimmert::limit_f1()).add("limit_F2_plus_f2", zimmert::limit_f2());
  return r;
}

Report verify_report(long m, double beta) {
  const auto a = zimmert::satz4_check(m, beta);
  const auto b = zimmert::min_norm_check(m, beta);
  Report r;
  r.add("m", m).add("beta", beta);
  r.add("satz4_lhs", a.lhs).add("satz4_rhs", a.rhs).add("satz4_holds", a.holds);
  r.add("min_norm_lhs", b.lhs).add("min_norm_rhs", b.rhs).add("min_norm_holds", b.holds);
  return r;
}

Report constants_report() {
  Report r;
  r.add("euler_gamma", kEulerGamma).add("pi", kPi).add("log2", kLog2).add("zeta3", kZeta3);
  r.add("lambda3", kLambda3).add("beta3", kBeta3);
  r.add("log_4_pi_e", lenstra::disc_cap_limit()).add("log_8_pi_e_gamma", lenstra::serre_limit());
  r.add("serre_gap", lenstra::serre_limit() - lenstra::disc_cap_limit());
  r.add("two_e_gamma_minus_1", 2.0 * std::exp(kEulerGamma - 1.0));
  const auto rog = zimmert::zeta_lenstra_threshold(zimmert::rogers_exponent());
  const auto kl = zimmert::zeta_lenstra_threshold(zimmert::kabatjanskii_levenshtein_exponent());
  r.add("zeta_threshold_rogers", rog.threshold).add("zeta_threshold_rogers_denominator", rog.denominator);
  r.add("zeta_threshold_kl", kl.threshold).add("zeta_threshold_kl_denominator", kl.denominator);
  r.add("limit_F1_plus_f1", zimmert::limit_f1()).add("limit_F2_plus_f2", zimmert::limit_f2());
  return r;
}

}  // namespace

std::string scan_csv(const std::vector<cyclo::ScanRow>& rows) {
  std::string out = "m,phi,epsilon,s,zeta_value,err_estimate\n";
  for (const auto& row : rows) {
    out += std::to_string(row.m) + "," + std::to_string(row.phi) + "," + fmt(row.epsilon) + "," + fmt(row.s) +
           "," + fmt(row.zeta_value) + "," + fmt(row.err_estimate, 6) + "\n";
  }
  return out;
}

std::string scan_json(const std::vector<cyclo::ScanRow>& rows) {
  Json j = Json::array();
  for (const auto& row : rows) {
    j.push_back({{"m", row.m},
                 {"phi", row.phi},
                 {"epsilon", row.epsilon},
                 {"s", row.s},
                 {"zeta_value", row.zeta_value},
                 {"err_estimate", row.err_estimate}});
  }
  return j.dump(2) + "\n";
}

std::string scan_svg(const std::vector<cyclo::ScanRow>& rows, double bound) {
  constexpr double kW = 800, kH = 600, kPad = 50;
  double x_max = 1, y_max = bound;
  for (const auto& row : rows) {
    x_max = std::max(x_max, static_cast<double>(row.phi));
    y_max = std::max(y_max, row.zeta_value);
  }
  y_max *= 1.05;
  const auto px = [&](double x) { return kPad + x / x_max * (kW - 2 * kPad); };
  const auto py = [&](double y) { return kH - kPad - y / y_max * (kH - 2 * kPad); };
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
  s << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
  s << "<line x1=\"" << kPad << "\" y1=\"" << kH - kPad << "\" x2=\"" << kW - kPad << "\" y2=\"" << kH - kPad
    << "\" stroke=\"black\"/>\n";
  s << "<line x1=\"" << kPad << "\" y1=\"" << kPad << "\" x2=\"" << kPad << "\" y2=\"" << kH - kPad
    << "\" stroke=\"black\"/>\n";
  s << "<text x=\"" << kW / 2 << "\" y=\"" << kH - 12 << "\" text-anchor=\"middle\">phi(m)</text>\n";
  s << "<text x=\"14\" y=\"" << kH / 2 << "\" transform=\"rotate(-90 14 " << kH / 2
    << ")\" text-anchor=\"middle\">zeta</text>\n";
  s << "<text x=\"" << kW - kPad << "\" y=\"" << kH - kPad + 18 << "\" text-anchor=\"end\">" << fmt(x_max, 6)
    << "</text>\n";
  s << "<text x=\"" << kPad - 4 << "\" y=\"" << kPad << "\" text-anchor=\"end\">" << fmt(y_max, 4) << "</text>\n";
  s << "<line x1=\"" << kPad << "\" y1=\"" << fmt(py(bound), 8) << "\" x2=\"" << kW - kPad << "\" y2=\""
    << fmt(py(bound), 8) << "\" stroke=\"red\" stroke-dasharray=\"6 4\"/>\n";
  for (const auto& row : rows) {
    s << "<circle cx=\"" << fmt(px(static_cast<double>(row.phi)), 8) << "\" cy=\"" << fmt(py(row.zeta_value), 8)
      << "\" r=\"3\" fill=\"steelblue\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Explicit bounds for norm-Euclidean number fields"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "csv";
  app.add_option("--tol", cfg.tol, "Quadrature tolerance")->check(CLI::PositiveNumber);
  app.add_option("--prime-limit", cfg.prime_limit, "Euler-product prime limit")->check(CLI::Range(1000L, 4000000000L));
  app.add_option("--jobs", cfg.jobs, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  const auto theta_check = CLI::Range(1e-9, 1.0 / 3.0 - 1e-12);

  long n = 0;
  auto* rog = app.add_subcommand("rogers", "Rogers-constant bounds at degree n");
  rog->add_option("--n", n, "Degree")->required()->check(CLI::Range(1L, 1000000000L));
  rog->add_option("--theta", cfg.theta, "Cut-off exponent")->check(theta_check);

  long n_min = 55000, n_max = 70000;
  auto* cross = app.add_subcommand("lenstra-crossing", "First degree where the ball criterion contradicts GRH");
  cross->add_option("--theta", cfg.theta, "Cut-off exponent")->check(theta_check);
  cross->add_option("--n-min", n_min, "Range start")->check(CLI::Range(1152L, 1000000000L));
  cross->add_option("--n-max", n_max, "Range end")->check(CLI::Range(1152L, 1000000000L));

  long r_real = 0;
  double log_disc = 0, log_m = 0;
  auto* check = app.add_subcommand("lenstra-check", "Evaluate both Lenstra criteria for a signature");
  check->add_option("--n", n, "Degree")->required()->check(CLI::Range(1L, 100000000L));
  check->add_option("--r", r_real, "Real embeddings")->required()->check(CLI::NonNegativeNumber);
  check->add_option("--log-disc", log_disc, "ln|Delta|")->required()->check(CLI::NonNegativeNumber);
  check->add_option("--log-m", log_m, "ln M")->required();
  check->add_option("--theta", cfg.theta, "Cut-off exponent")->check(theta_check);

  long m = 1;
  double s = 2.0;
  std::string method = "hurwitz";
  auto* zeta = app.add_subcommand("cyclo-zeta", "Dedekind zeta of Q(zeta_m)");
  zeta->add_option("--m", m, "Conductor")->required()->check(CLI::Range(1L, 100000L));
  zeta->add_option("--s", s, "Real argument > 1")->required()->check(CLI::Range(1.0 + 1e-12, 1e6));
  zeta->add_option("--method", method, "hurwitz or euler")->check(CLI::IsMember({"hurwitz", "euler"}));

  long m_max = 350;
  double epsilon = 0.75;
  std::string svg_path;
  bool skip_duplicates = false;
  auto* sc = app.add_subcommand("cyclo-scan", "zeta(1 + phi(m)^-eps) for 1 <= m <= m_max");
  sc->add_option("--m-max", m_max, "Largest m")->required()->check(CLI::Range(1L, 20000L));
  sc->add_option("--epsilon", epsilon, "Exponent in (0, 1)")->required()->check(CLI::Range(1e-9, 1.0 - 1e-9));
  sc->add_option("--out", cfg.output_path, "Write rows here instead of stdout");
  sc->add_option("--svg", svg_path, "Also write an 800x600 scatter plot");
  sc->add_flag("--skip-duplicates", skip_duplicates, "Omit m = 2 (mod 4)");

  long a = 0, b = 0;
  double beta = 0.1;
  auto* zim = app.add_subcommand("zimmert", "Zimmert's F_{a,b}(beta) and its pieces");
  zim->add_option("--a", a, "Coefficient a")->required()->check(CLI::NonNegativeNumber);
  zim->add_option("--b", b, "Coefficient b")->required()->check(CLI::NonNegativeNumber);
  zim->add_option("--beta", beta, "beta in [1e-4, 1/4)")->required();

  auto* ver = app.add_subcommand("zimmert-verify", "Check the two inequality chains for Q(zeta_m)");
  ver->add_option("--m", m, "Conductor")->required()->check(CLI::Range(1L, 100000L));
  ver->add_option("--beta", beta, "beta in [1e-4, 1/4)")->required();

  app.add_subcommand("constants", "Constants used throughout");

  bool fast = false;
  auto* rep = app.add_subcommand("reproduce", "Run every acceptance criterion");
  rep->add_flag("--fast", fast, "Smaller ranges for a quick run");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  cfg.format = format == "json" ? OutputFormat::json : OutputFormat::csv;

  try {
    if (*rog) {
      out << rogers_report(n, cfg).render(cfg.format);
    } else if (*cross) {
      if (n_max < n_min) {
        err << "usage error: --n-max must be >= --n-min\n";
        return 2;
      }
      out << crossing_report(n_min, n_max, cfg).render(cfg.format);
    } else if (*check) {
      out << check_report(n, r_real, log_disc, log_m, cfg).render(cfg.format);
    } else if (*zeta) {
      out << zeta_report(m, s, method == "euler" ? cyclo::ZetaMethod::euler : cyclo::ZetaMethod::hurwitz, cfg)
                 .render(cfg.format);
    } else if (*sc) {
      cyclo::ScanOptions opt;
      opt.keep_duplicates = !skip_duplicates;
      opt.jobs = cfg.jobs;
      const auto rows = cyclo::scan(m_max, epsilon, opt);
      const std::string text = cfg.format == OutputFormat::json ? scan_json(rows) : scan_csv(rows);
      if (cfg.output_path.empty()) {
        out << text;
      } else {
        write_file(cfg.output_path, text);
      }
      if (!svg_path.empty()) write_file(svg_path, scan_svg(rows, 1.44));
    } else if (*zim) {
      out << zimmert_report(a, b, beta).render(cfg.format);
    } else if (*ver) {
      out << verify_report(m, beta).render(cfg.format);
    } else if (*rep) {
      reproduce::ReproduceOptions opt;
      opt.fast = fast;
      opt.jobs = cfg.jobs;
      bool all = true;
      for (const auto& res : reproduce::run_all(opt)) {
        all &= res.passed;
        out << "criterion " << res.id << " [" << (res.passed ? "PASS" : "FAIL") << "] " << res.name << ": "
            << res.detail << " (" << fmt(res.seconds, 3) << " s)\n";
      }
      return all ? 0 : 1;
    } else {
      out << constants_report().render(cfg.format);
    }
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const ConvergenceError& e) {
    err << "convergence error: " << e.what() << "\n";
    return 1;
  } catch (const BracketError& e) {
    err << "bracket error: " << e.what() << "\n";
    return 1;
  } catch (const NotFoundError& e) {
    err << "not found: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace normeuclid::cli
