#include "expurg/channel.hpp"
#include "expurg/curves.hpp"
#include "expurg/enumerator.hpp"
#include "expurg/errors.hpp"
#include "expurg/exponents.hpp"
#include "expurg/gaussian.hpp"
#include "expurg/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr double kLn2 = 0.6931471805599453;

constexpr int kExitFile = 2;
constexpr int kExitValidation = 3;

struct CommonArgs {
  std::string channel_path;
  std::string q_csv;
  std::string rates_spec;
  double rho_max = 1e4;
  std::string format = "csv";
  std::string out_prefix = "curves";
  bool reproducible = false;
  bool bits = false;
  std::uint64_t seed = 1;
};

std::vector<double> parse_rates(const std::string& spec, bool bits) {
  double lo = 0.0, hi = 0.0;
  int count = 0;
  char c1 = 0, c2 = 0;
  std::istringstream ss(spec);
  if (!(ss >> lo >> c1 >> hi >> c2 >> count) || c1 != ':' || c2 != ':')
    throw expurg::DomainError("rates spec must be min:max:count, got \"" +
                              spec + "\"");
  if (count < 2) throw expurg::DomainError("rate grid needs count >= 2");
  if (!(lo >= 0.0) || !(hi >= lo))
    throw expurg::DomainError("rate grid needs 0 <= min <= max");
  const double scale = bits ? kLn2 : 1.0;
  return expurg::linear_grid(lo * scale, hi * scale, count);
}

expurg::InputDistribution parse_q(const std::string& csv) {
  std::vector<double> vals;
  std::istringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) vals.push_back(std::stod(tok));
  expurg::Vector q(static_cast<expurg::Index>(vals.size()));
  for (expurg::Index i = 0; i < q.size(); ++i)
    q(i) = vals[static_cast<size_t>(i)];
  return expurg::validate_input_distribution(q);
}

expurg::ExponentInputs load_inputs(const CommonArgs& a) {
  expurg::ChannelSpec spec = expurg::load_channel_spec(a.channel_path);
  expurg::InputDistribution q =
      !a.q_csv.empty() ? parse_q(a.q_csv)
      : spec.q         ? *spec.q
                       : expurg::uniform_input(spec.channel.input_size());
  return expurg::ExponentInputs(std::move(spec.channel), std::move(q));
}

void write_curve_files(const expurg::ExponentCurve& curve,
                       const CommonArgs& a) {
  const expurg::ExportOptions opts{a.reproducible, a.bits};
  const std::string base = a.out_prefix + "_" + expurg::to_string(curve.kind);
  if (a.format == "json") {
    std::ofstream os(base + ".json");
    if (!os) throw expurg::FileError("cannot write " + base + ".json");
    os << expurg::curve_to_json(curve, opts).dump(2) << "\n";
    std::cout << "wrote " << base << ".json\n";
  } else {
    std::ofstream os(base + ".csv");
    if (!os) throw expurg::FileError("cannot write " + base + ".csv");
    expurg::write_curve_csv(os, curve, opts);
    std::cout << "wrote " << base << ".csv\n";
  }
}

double display(double v, bool bits) { return bits ? v / kLn2 : v; }

int run_exponent(const CommonArgs& a, double rho, const std::string& s_flag,
                 bool optimize_s) {
  const expurg::ExponentInputs in = load_inputs(a);

  std::optional<std::vector<double>> rates;
  if (!a.rates_spec.empty()) rates = parse_rates(a.rates_spec, a.bits);

  json report;
  if (!rates) {
    const double s = s_flag.empty() ? 0.5 : std::stod(s_flag);
    const double eg = expurg::gallager_EG(rho, 0.5, in);
    const double e_fixed = expurg::ckm_E(rho, s, in);
    const auto best = expurg::maximize_concave_unit(
        [&](double sv) { return expurg::ckm_E(rho, sv, in); });

    report["rho"] = rho;
    report["E_G"] = display(eg, a.bits);
    report["E_fixed_s"] = display(e_fixed, a.bits);
    report["s_fixed"] = s;
    report["E_opt_s"] = display(best.value, a.bits);
    report["s_star"] = best.arg;
    if (a.format == "json") {
      std::cout << report.dump(2) << "\n";
    } else {
      std::cout << "rho " << expurg::format_number(rho) << "\n"
                << "E_G(rho,Q)        " << expurg::format_number(display(eg, a.bits))
                << "\n"
                << "E(rho," << expurg::format_number(s) << ",Q)     "
                << expurg::format_number(display(e_fixed, a.bits)) << "\n"
                << "max_s E(rho,s,Q)  "
                << expurg::format_number(display(best.value, a.bits))
                << "  at s* = " << expurg::format_number(best.arg) << "\n";
    }
    return 0;
  }

  (void)optimize_s;
  const expurg::CurveOptions copts{a.rho_max, 1e-9, 33};
  const expurg::ExponentCurve g = expurg::curve_gallager(in, *rates, copts);
  const expurg::ExponentCurve c = expurg::curve_ckm(in, *rates, copts);
  const expurg::ExponentCurve n = expurg::curve_chernoff_new(in, *rates, copts);

  if (a.format == "json") {
    const expurg::ExportOptions opts{a.reproducible, a.bits};
    report["gallager"] = expurg::curve_to_json(g, opts);
    report["ckm_bhatt"] = expurg::curve_to_json(c, opts);
    report["chernoff_new"] = expurg::curve_to_json(n, opts);
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << "R,gallager,ckm_bhatt,chernoff_new,rho_star,s_star\n";
    for (size_t i = 0; i < rates->size(); ++i) {
      const auto& p = n.points[i];
      std::cout << expurg::format_number(display((*rates)[i], a.bits)) << ','
                << expurg::format_number(display(g.points[i].value, a.bits))
                << ','
                << expurg::format_number(display(c.points[i].value, a.bits))
                << ',' << expurg::format_number(display(p.value, a.bits)) << ','
                << expurg::format_number(p.rho_star) << ','
                << expurg::format_number(p.s_star) << "\n";
    }
  }
  return 0;
}

int run_curve(const CommonArgs& a, bool sweep_q) {
  const expurg::ExponentInputs in = load_inputs(a);
  const expurg::CurveOptions copts{a.rho_max, 1e-9, 33};

  const std::vector<double> rates =
      !a.rates_spec.empty()
          ? parse_rates(a.rates_spec, a.bits)
          : expurg::default_rate_grid(in, expurg::CurveKind::chernoff_new,
                                      copts);

  write_curve_files(expurg::curve_gallager(in, rates, copts), a);
  write_curve_files(expurg::curve_ckm(in, rates, copts), a);
  write_curve_files(expurg::curve_chernoff_new(in, rates, copts), a);

  if (!sweep_q) return 0;

  if (in.channel().input_size() != 2)
    throw expurg::DomainError("--sweep-q needs a binary-input channel");

  const std::array<expurg::CurveKind, 3> kinds = {
      expurg::CurveKind::gallager, expurg::CurveKind::ckm_bhatt,
      expurg::CurveKind::chernoff_new};
  for (const auto kind : kinds) {
    std::vector<double> best_value(rates.size(),
                                   -std::numeric_limits<double>::infinity());
    std::vector<double> best_q1(rates.size(), 0.0);
    for (int step = 1; step <= 19; ++step) {
      const double q1 = 0.05 * step;
      expurg::Vector qv(2);
      qv << 1.0 - q1, q1;
      expurg::ExponentInputs swept(in.channel(),
                                   expurg::validate_input_distribution(qv));
      expurg::ExponentCurve curve =
          kind == expurg::CurveKind::gallager
              ? expurg::curve_gallager(swept, rates, copts)
          : kind == expurg::CurveKind::ckm_bhatt
              ? expurg::curve_ckm(swept, rates, copts)
              : expurg::curve_chernoff_new(swept, rates, copts);
      for (size_t i = 0; i < rates.size(); ++i) {
        if (curve.points[i].value > best_value[i]) {
          best_value[i] = curve.points[i].value;
          best_q1[i] = q1;
        }
      }
    }
    const std::string path =
        a.out_prefix + "_" + expurg::to_string(kind) + "_sweepq.csv";
    std::ofstream os(path);
    if (!os) throw expurg::FileError("cannot write " + path);
    os << "R,value,best_q1\n";
    for (size_t i = 0; i < rates.size(); ++i)
      os << expurg::format_number(display(rates[i], a.bits)) << ','
         << expurg::format_number(display(best_value[i], a.bits)) << ','
         << expurg::format_number(best_q1[i]) << "\n";
    std::cout << "wrote " << path << "\n";
  }
  return 0;
}

int run_gaussian(const CommonArgs& a, double S, double sigma2) {
  const expurg::GaussianParams p{S, sigma2};
  std::vector<double> rates;
  if (!a.rates_spec.empty()) {
    rates = parse_rates(a.rates_spec, a.bits);
  } else {
    const double r1 = expurg::gaussian_critical_rate(p);
    const double hi = 1.2 * (r1 + expurg::gaussian_D_of_R(p, r1));
    rates = expurg::linear_grid(0.0, hi > 1e-9 ? hi : 0.1, 201);
  }
  write_curve_files(expurg::gaussian_exponent_curve(p, rates), a);
  return 0;
}

int run_mc(const CommonArgs& a, int n, double rate, double iexp, double rho,
           const std::string& mode, long long trials) {
  const double scale = a.bits ? kLn2 : 1.0;
  const expurg::EnumeratorModel model{n, rate * scale, iexp * scale, rho};
  const expurg::MomentMode mm = mode == "exact"
                                    ? expurg::MomentMode::exact_binomial
                                    : expurg::MomentMode::monte_carlo;
  const double theory = expurg::moment_exponent_theory_effective(model);
  const expurg::MomentEstimate est =
      expurg::moment_exponent_empirical(model, mm, trials, a.seed);

  json report;
  report["model"] = {{"n", model.n},
                     {"R", display(model.R, a.bits)},
                     {"I", display(model.I, a.bits)},
                     {"rho", model.rho},
                     {"M", model.num_codewords()}};
  report["theory_exponent"] = display(theory, a.bits);
  report["theory_exponent_nominal"] =
      display(expurg::moment_exponent_theory(model), a.bits);
  report["empirical_exponent"] = display(est.exponent, a.bits);
  report["gap"] = std::abs(est.exponent - theory) / (a.bits ? kLn2 : 1.0);
  report["mode"] = mode == "exact" ? "exact_binomial" : "monte_carlo";
  report["seed"] = a.seed;
  report["trials"] = mode == "exact" ? 0 : trials;
  report["underflow"] = est.underflow;
  std::cout << report.dump(2) << "\n";
  return 0;
}

int run_compare(const CommonArgs& a) {
  const expurg::ExponentInputs in = load_inputs(a);
  const expurg::CurveOptions copts{a.rho_max, 1e-9, 33};
  const std::vector<double> rates =
      !a.rates_spec.empty()
          ? parse_rates(a.rates_spec, a.bits)
          : expurg::default_rate_grid(in, expurg::CurveKind::chernoff_new,
                                      copts);

  const expurg::ExponentCurve g = expurg::curve_gallager(in, rates, copts);
  const expurg::ExponentCurve c = expurg::curve_ckm(in, rates, copts);
  const expurg::ExponentCurve n = expurg::curve_chernoff_new(in, rates, copts);

  if (a.format == "json") {
    const expurg::ExportOptions opts{a.reproducible, a.bits};
    json report;
    report["gallager"] = expurg::curve_to_json(g, opts);
    report["ckm_bhatt"] = expurg::curve_to_json(c, opts);
    report["chernoff_new"] = expurg::curve_to_json(n, opts);
    report["R1"] = {{"gallager", g.R1}, {"ckm_bhatt", c.R1},
                    {"chernoff_new", n.R1}};
    std::cout << report.dump(2) << "\n";
    return 0;
  }

  std::cout << "R,gallager,ckm_bhatt,chernoff_new,ordering_ok\n";
  for (size_t i = 0; i < rates.size(); ++i) {
    const bool ok = n.points[i].value >= c.points[i].value - 1e-9 &&
                    c.points[i].value >= g.points[i].value - 1e-9;
    std::cout << expurg::format_number(display(rates[i], a.bits)) << ','
              << expurg::format_number(display(g.points[i].value, a.bits))
              << ','
              << expurg::format_number(display(c.points[i].value, a.bits))
              << ','
              << expurg::format_number(display(n.points[i].value, a.bits))
              << ',' << (ok ? "1" : "0") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"expurgated error-exponent bounds for memoryless channels"};
  app.require_subcommand(1);

  CommonArgs a;
  double rho = 1.0;
  std::string s_flag;
  bool optimize_s = false;
  bool sweep_q = false;
  double S = 1.0, sigma2 = 1.0;
  int mc_n = 12;
  double mc_rate = kLn2, mc_iexp = kLn2, mc_rho = 2.0;
  std::string mc_mode = "exact";
  long long mc_trials = 100000;

  const auto add_common = [&](CLI::App* cmd, bool with_channel) {
    if (with_channel)
      cmd->add_option("--channel", a.channel_path, "channel spec JSON file")
          ->required();
    cmd->add_option("--q", a.q_csv, "input distribution, comma separated");
    cmd->add_option("--rates", a.rates_spec, "rate grid min:max:count");
    cmd->add_option("--rho-max", a.rho_max, "cap for the rho search");
    cmd->add_option("--format", a.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", a.out_prefix, "output file prefix");
    cmd->add_option("--seed", a.seed, "RNG seed (recorded in reports)");
    cmd->add_flag("--reproducible", a.reproducible,
                  "suppress timestamps in outputs");
    cmd->add_flag("--bits", a.bits, "rates and exponents in bits at the CLI");
  };

  CLI::App* exponent =
      app.add_subcommand("exponent", "single-letter exponents at fixed rho");
  add_common(exponent, true);
  exponent->add_option("--rho", rho, "fixed rho (default 1)");
  exponent->add_option("--s", s_flag, "fixed Chernoff s");
  exponent->add_flag("--optimize-s", optimize_s, "optimize s (always shown)");

  CLI::App* curve =
      app.add_subcommand("curve", "exponent-vs-rate curves to files");
  add_common(curve, true);
  curve->add_flag("--sweep-q", sweep_q,
                  "coarse sweep over binary-input q(1) in {0.05..0.95}");

  CLI::App* gaussian =
      app.add_subcommand("gaussian", "Gaussian-channel closed-form curve");
  add_common(gaussian, false);
  gaussian->add_option("--S", S, "input power");
  gaussian->add_option("--sigma2", sigma2, "noise variance");

  CLI::App* mc = app.add_subcommand(
      "mc", "type-enumerator fractional-moment verification");
  add_common(mc, false);
  mc->add_option("--n", mc_n, "blocklength");
  mc->add_option("--rate", mc_rate, "code rate R");
  mc->add_option("--iexp", mc_iexp, "pairwise type exponent I");
  mc->add_option("--rho", mc_rho, "moment order rho >= 1");
  mc->add_option("--mode", mc_mode, "exact|mc")
      ->check(CLI::IsMember({"exact", "mc"}));
  mc->add_option("--trials", mc_trials, "Monte Carlo trials");

  CLI::App* compare =
      app.add_subcommand("compare", "three bounds side by side on one grid");
  add_common(compare, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitFile;
  }

  try {
    if (exponent->parsed()) return run_exponent(a, rho, s_flag, optimize_s);
    if (curve->parsed()) return run_curve(a, sweep_q);
    if (gaussian->parsed()) return run_gaussian(a, S, sigma2);
    if (mc->parsed()) return run_mc(a, mc_n, mc_rate, mc_iexp, mc_rho, mc_mode,
                                    mc_trials);
    if (compare->parsed()) return run_compare(a);
  } catch (const expurg::FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFile;
  } catch (const expurg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
