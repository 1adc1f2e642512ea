#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "resonant/closed_form.hpp"
#include "resonant/errors.hpp"
#include "resonant/minimizer.hpp"
#include "resonant/oracle_suite.hpp"
#include "resonant/real_case.hpp"
#include "resonant/resonance.hpp"
#include "resonant/word_format.hpp"

namespace resonant::cli {

std::string format_real(double value) {
  if (std::isinf(value)) return value < 0 ? "-inf" : "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

namespace {

using nlohmann::json;

json log_json(double log_value) {
  if (std::isfinite(log_value)) return log_value;
  return format_real(log_value);
}

struct ParamFlags {
  double lambda = 2.0;
  double delta = 0.5;
  double epsilon = 0.5;

  void attach(CLI::App& app) {
    app.add_option("--lambda", lambda, "growth factor lambda > 1")->capture_default_str();
    app.add_option("--delta", delta, "resonance exponent in (0,1)")->capture_default_str();
    app.add_option("--epsilon", epsilon, "rotation budget fraction in (0,1)")->capture_default_str();
  }
  Params make() const { return Params(lambda, delta, epsilon); }
};

std::string join_profile(const std::vector<std::uint64_t>& profile) {
  std::string out;
  for (std::uint64_t j : profile) {
    if (!out.empty()) out += ';';
    out += std::to_string(j);
  }
  return out;
}

json certificate_json(const ResonanceCertificate& cert, double theta, const Params& params) {
  json j;
  j["theta"] = theta;
  if (const auto* r = std::get_if<Resonant>(&cert)) {
    j["verdict"] = "Resonant";
    j["n"] = r->n;
    j["witness"] = r->witness_profile;
    j["log_norm"] = log_json(r->witness_norm.log());
    j["log_threshold"] = params.log_threshold(r->n);
    j["verified"] = verify_certificate(*r, theta, params);
  } else if (const auto* nr = std::get_if<NonResonantUpTo>(&cert)) {
    j["verdict"] = "NonResonantUpTo";
    j["N"] = nr->horizon;
  } else {
    j["verdict"] = "Unknown";
  }
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Norm growth and resonant sets for products of h = diag(lambda, 0) and rotations"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "write results to PATH instead of stdout");

  // norm-curve
  auto* norm_curve = app.add_subcommand("norm-curve", "log norm of a word over a uniform theta grid");
  std::string curve_word;
  double curve_lambda = 2.0;
  std::size_t curve_grid = 1024;
  bool curve_real = false;
  std::optional<double> curve_stats_delta;
  norm_curve->add_option("--word", curve_word, "word, e.g. H:5,R:2,H:5")->required();
  norm_curve->add_option("--lambda", curve_lambda)->capture_default_str();
  norm_curve->add_option("--grid", curve_grid)->capture_default_str()->check(CLI::Range(2ul, 1ul << 26));
  norm_curve->add_flag("--real", curve_real, "use H = diag(lambda, 1/lambda) instead of h");
  norm_curve->add_option("--stats", curve_stats_delta,
                         "emit JSON curve statistics with threshold lambda^(DELTA n) instead of CSV");

  // fmin
  auto* fmin = app.add_subcommand("fmin", "f_n over a theta grid with resonance flags");
  ParamFlags fmin_params;
  fmin_params.attach(*fmin);
  std::uint64_t fmin_n = 10;
  std::size_t fmin_grid = 1024;
  fmin->add_option("--n", fmin_n)->required()->check(CLI::PositiveNumber);
  fmin->add_option("--grid", fmin_grid)->capture_default_str()->check(CLI::Range(2ul, 1ul << 26));

  // measure
  auto* measure = app.add_subcommand("measure", "two-sided bracket for the measure of the resonant set");
  ParamFlags measure_params;
  measure_params.attach(*measure);
  std::uint64_t measure_a = kDefaultTruncation;
  measure->add_option("--A", measure_a, "truncation level")->capture_default_str()->check(CLI::PositiveNumber);

  // certify
  auto* certify_cmd = app.add_subcommand("certify", "resonance certificate for one angle");
  ParamFlags certify_params;
  certify_params.attach(*certify_cmd);
  double certify_theta = 0.0;
  std::optional<std::uint64_t> certify_horizon;
  certify_cmd->add_option("--theta", certify_theta)->required();
  certify_cmd->add_option("--N", certify_horizon, "horizon (default ceil(10/epsilon))")
      ->check(CLI::PositiveNumber);

  // compare
  auto* compare = app.add_subcommand("compare", "two norm curves on a shared grid");
  std::string word_a, word_b, case_a = "model", case_b = "real";
  double compare_lambda = 2.0;
  std::size_t compare_grid = 1024;
  compare->add_option("--word-a", word_a)->required();
  compare->add_option("--word-b", word_b)->required();
  compare->add_option("--case-a", case_a)->capture_default_str()->check(CLI::IsMember({"model", "real"}));
  compare->add_option("--case-b", case_b)->capture_default_str()->check(CLI::IsMember({"model", "real"}));
  compare->add_option("--lambda", compare_lambda)->capture_default_str();
  compare->add_option("--grid", compare_grid)->capture_default_str()->check(CLI::Range(2ul, 1ul << 26));

  // verify
  auto* verify = app.add_subcommand("verify", "run the oracle-equivalence suite");
  std::uint64_t verify_seed = 20240601;
  verify->add_option("--seed", verify_seed)->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    err << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "error: cannot open " << out_path << " for writing\n";
      return kExitFailure;
    }
  }
  std::ostream& sink = out_path.empty() ? out : file;

  try {
    if (*norm_curve) {
      if (!(curve_lambda > 1.0)) throw std::invalid_argument("lambda must be > 1");
      const Word word = parse_word(curve_word);
      const std::vector<double> thetas = uniform_grid(curve_grid);
      std::vector<double> logs;
      logs.reserve(thetas.size());
      for (double theta : thetas) {
        logs.push_back(curve_real ? real_log_norm(word, theta, curve_lambda)
                                  : closed_form_norm(word, theta, curve_lambda).log());
      }
      if (curve_stats_delta) {
        const double delta = *curve_stats_delta;
        if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("--stats needs delta in (0,1)");
        const double threshold = delta * static_cast<double>(word.h_total()) * std::log(curve_lambda);
        const CurveStats stats = curve_stats(thetas, logs, threshold);
        json j{{"word", format_word(word)},
               {"case", curve_real ? "real" : "model"},
               {"min_log_norm", log_json(stats.min_log_norm)},
               {"argmin_theta", stats.argmin_theta},
               {"log_threshold", threshold},
               {"sublevel_fraction", stats.sublevel_fraction}};
        sink << j.dump(2) << "\n";
      } else {
        sink << "theta,log_norm\n";
        for (std::size_t i = 0; i < thetas.size(); ++i) {
          sink << format_real(thetas[i]) << ',' << format_real(logs[i]) << '\n';
        }
      }
    } else if (*fmin) {
      const Params params = fmin_params.make();
      sink << "theta,log_f_n,resonant_flag,witness\n";
      for (double theta : uniform_grid(fmin_grid)) {
        const MinResult r = f_n(theta, fmin_n, params);
        const bool resonant = r.log_f_n.log() < params.log_threshold(fmin_n);
        sink << format_real(theta) << ',' << format_real(r.log_f_n.log()) << ','
             << (resonant ? 1 : 0) << ',' << join_profile(r.witness_profile) << '\n';
      }
    } else if (*measure) {
      const Params params = measure_params.make();
      const MeasureBracket b = resonant_measure_bracket(params, measure_a);
      json j{{"lower", b.lower},
             {"upper", b.upper},
             {"paper_asymptotic", b.first_order_estimate},
             {"geometric_sum", b.geometric_sum},
             {"tail_bound", b.tail_bound},
             {"A", measure_a},
             {"lambda", params.lambda()},
             {"delta", params.delta()},
             {"epsilon", params.epsilon()}};
      sink << j.dump(2) << "\n";
    } else if (*certify_cmd) {
      const Params params = certify_params.make();
      const std::uint64_t horizon = certify_horizon.value_or(default_horizon(params));
      const ResonanceCertificate cert = certify(certify_theta, params, horizon);
      sink << certificate_json(cert, certify_theta, params).dump(2) << "\n";
    } else if (*compare) {
      if (!(compare_lambda > 1.0)) throw std::invalid_argument("lambda must be > 1");
      const Word a = parse_word(word_a);
      const Word b = parse_word(word_b);
      auto eval = [&](const Word& w, const std::string& which, double theta) {
        return which == "real" ? real_log_norm(w, theta, compare_lambda)
                               : closed_form_norm(w, theta, compare_lambda).log();
      };
      sink << "theta,log_norm_a,log_norm_b\n";
      for (double theta : uniform_grid(compare_grid)) {
        sink << format_real(theta) << ',' << format_real(eval(a, case_a, theta)) << ','
             << format_real(eval(b, case_b, theta)) << '\n';
      }
    } else if (*verify) {
      const OracleCheck checks[] = {
          check_closed_form_against_products(6, 4, 100, verify_seed),
          check_minimizer_against_brute_force(8, 25, verify_seed + 1),
      };
      bool ok = true;
      for (const OracleCheck& c : checks) {
        sink << (c.passed() ? "PASS " : "FAIL ") << c.name << ": " << c.cases << " cases, "
             << c.failures << " failures, worst relative error " << format_real(c.worst_error)
             << '\n';
        if (!c.passed()) sink << "  first failure: " << c.first_failure << '\n';
        ok = ok && c.passed();
      }
      return ok ? kExitOk : kExitFailure;
    }
  } catch (const NumericGuardError& e) {
    err << "numeric guard: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace resonant::cli
