// Command-line surface: solve a parameter point, sweep a region of the
// phase diagram, emit the closed-form critical curves, or run the
// verification suite.  CSV output is deterministic: fixed %.17g floats,
// '.' decimal point, theta-major row order.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wr/brackets.hpp"
#include "wr/oracle.hpp"
#include "wr/periodic.hpp"
#include "wr/tisgm.hpp"
#include "wr/verification.hpp"

namespace {

using nlohmann::json;

std::string g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

int worker_count() {
  if (const char* env = std::getenv("WR_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

json critical_json(const wr::CriticalValues& cv) {
  json j;
  const auto put = [&](const char* key, const std::optional<double>& v) {
    if (v) j[key] = *v;
  };
  switch (cv.regime) {
    case wr::CriticalRegime::antiferro: j["regime"] = "antiferro"; break;
    case wr::CriticalRegime::ferro_k2: j["regime"] = "ferro_k2"; break;
    case wr::CriticalRegime::ferro_k3: j["regime"] = "ferro_k3"; break;
    case wr::CriticalRegime::ferro_kge4: j["regime"] = "ferro_kge4"; break;
  }
  put("theta_cr_anti", cv.theta_cr_anti);
  put("lambda_cr_anti_low", cv.lambda_cr_anti_low);
  put("lambda_cr_anti_high", cv.lambda_cr_anti_high);
  put("theta_c", cv.theta_c);
  put("lambda_cr", cv.lambda_cr);
  put("theta_c_prime", cv.theta_c_prime);
  put("lambda_cr_prime", cv.lambda_cr_prime);
  return j;
}

json law_json(const wr::BoundaryLawPair& bl, const wr::ModelParams& p) {
  json j;
  j["x"] = bl.x;
  j["y"] = bl.y;
  j["residual"] = wr::exy_residual(bl, p);
  // Single-site marginals for both root conventions, side by side.
  const auto mk = wr::marginal_from_boundary_law(bl, p, p.k);
  const auto mk1 = wr::marginal_from_boundary_law(bl, p, p.k + 1);
  j["marginal_root_degree_k"] = {mk[0], mk[1], mk[2]};
  j["marginal_root_degree_k_plus_1"] = {mk1[0], mk1[1], mk1[2]};
  return j;
}

int cmd_solve(int k, double theta, double lambda) {
  const wr::ModelParams p = wr::ModelParams::from_theta(k, theta, lambda);
  const wr::PhaseReport rep = wr::classify_phase(p);

  json out;
  out["params"] = {{"k", p.k},
                   {"theta", p.theta},
                   {"lambda", p.lambda},
                   {"activity_root", p.activity_root}};
  out["count"] = wr::to_string(rep.count);
  out["deciding_theorem"] = wr::to_string(rep.deciding_theorem);
  out["critical"] = critical_json(rep.critical);
  out["method"] = wr::to_string(rep.solutions.method);
  out["max_residual"] = rep.solutions.residual;

  json diag = json::array();
  for (double x : rep.solutions.diagonal) diag.push_back(law_json({x, x}, p));
  json off = json::array();
  for (const auto& bl : rep.solutions.offdiagonal) {
    json j = law_json(bl, p);
    j["factor_residual"] = wr::offdiag_factor_residual(bl, p);
    off.push_back(j);
  }
  out["solutions"] = {{"diagonal", diag}, {"offdiagonal", off}};

  if (p.theta < 1.0) {
    const wr::UniquenessCertificate cert = wr::uniqueness_certificate(p);
    out["uniqueness_certificate"] = {
        {"status", wr::to_string(cert.status)},
        {"z1_lo", cert.quadruple.z1_lo},
        {"z1_hi", cert.quadruple.z1_hi},
        {"z2_lo", cert.quadruple.z2_lo},
        {"z2_hi", cert.quadruple.z2_hi},
        {"iterations", cert.quadruple.iterations}};
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

struct SweepRow {
  double theta = 0.0, lambda = 0.0;
  std::string count, theorem;
  double residual = 0.0;
};

int cmd_sweep(int k, double th_lo, double th_hi, int th_steps, double lam_lo,
              double lam_hi, int lam_steps, bool log_lambda,
              const std::string& output, const std::string& format) {
  if (k < 2) {
    std::cerr << "sweep: requires k >= 2\n";
    return 2;
  }
  if (th_steps < 2 || lam_steps < 2) {
    std::cerr << "sweep: steps must be >= 2\n";
    return 2;
  }
  if (!(th_hi > th_lo) || !(lam_hi > lam_lo) || !(lam_lo > 0.0) ||
      !(th_lo >= 0.0)) {
    std::cerr << "sweep: ranges must be positive with hi > lo\n";
    return 2;
  }
  const std::size_t total = static_cast<std::size_t>(th_steps) *
                            static_cast<std::size_t>(lam_steps);
  std::vector<SweepRow> rows(total);
  const auto theta_at = [&](int i) {
    return th_lo + (th_hi - th_lo) * i / (th_steps - 1);
  };
  const auto lambda_at = [&](int j) {
    if (log_lambda)
      return std::exp(std::log(lam_lo) +
                      (std::log(lam_hi) - std::log(lam_lo)) * j /
                          (lam_steps - 1));
    return lam_lo + (lam_hi - lam_lo) * j / (lam_steps - 1);
  };

  const int nw = worker_count();
  std::vector<std::thread> pool;
  std::vector<std::string> errors(static_cast<std::size_t>(nw));
  for (int w = 0; w < nw; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t idx = static_cast<std::size_t>(w); idx < total;
             idx += static_cast<std::size_t>(nw)) {
          const int i = static_cast<int>(idx) / lam_steps;
          const int j = static_cast<int>(idx) % lam_steps;
          const double theta = theta_at(i);
          const double lambda = lambda_at(j);
          const wr::PhaseReport rep =
              wr::classify_phase(wr::ModelParams::from_theta(k, theta, lambda));
          rows[idx] = {theta, lambda, wr::to_string(rep.count),
                       wr::to_string(rep.deciding_theorem),
                       rep.solutions.residual};
        }
      } catch (const std::exception& e) {
        errors[static_cast<std::size_t>(w)] = e.what();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& err : errors)
    if (!err.empty()) {
      std::cerr << "sweep: " << err << "\n";
      return 2;
    }

  std::ofstream out(output);
  if (!out) {
    std::cerr << "sweep: cannot write " << output << "\n";
    return 2;
  }
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows)
      arr.push_back({{"k", k},
                     {"theta", r.theta},
                     {"lambda", r.lambda},
                     {"count", r.count},
                     {"deciding_theorem", r.theorem},
                     {"residual", r.residual}});
    out << arr.dump(2) << "\n";
  } else {
    out << "k,theta,lambda,count,deciding_theorem,residual\n";
    for (const auto& r : rows)
      out << k << ',' << g17(r.theta) << ',' << g17(r.lambda) << ','
          << r.count << ',' << r.theorem << ',' << g17(r.residual) << '\n';
  }
  return 0;
}

int cmd_curves(int k, const std::string& regime, int steps,
               std::optional<double> th_lo, std::optional<double> th_hi,
               const std::string& output) {
  if (steps < 2) {
    std::cerr << "curves: steps must be >= 2\n";
    return 2;
  }
  std::ofstream out(output);
  if (!out) {
    std::cerr << "curves: cannot write " << output << "\n";
    return 2;
  }

  if (regime == "ferro") {
    const double theta_c = static_cast<double>(k - 1) / (k + 1);
    const double lo = th_lo.value_or(0.0);
    const double hi = th_hi.value_or(theta_c * (1.0 - 1e-6));
    if (!(hi < theta_c)) {
      std::cerr << "curves: ferro regime needs theta < (k-1)/(k+1)\n";
      return 2;
    }
    out << "k,theta,lambda_cr,lambda_cr_prime,ordering_ok\n";
    for (int i = 0; i < steps; ++i) {
      const double th = lo + (hi - lo) * i / (steps - 1);
      const wr::CriticalValues cv = wr::critical_values(k, th);
      out << k << ',' << g17(th) << ',' << g17(*cv.lambda_cr) << ',';
      if (cv.lambda_cr_prime) {
        out << g17(*cv.lambda_cr_prime) << ','
            << (*cv.lambda_cr_prime < *cv.lambda_cr ? 1 : 0) << '\n';
      } else {
        out << ",1\n";
      }
    }
    return 0;
  }
  if (regime == "antiferro") {
    const wr::CriticalValues base = wr::critical_values(k, 2.0);
    const double theta_cr = *base.theta_cr_anti;
    const double lo = th_lo.value_or(theta_cr * (1.0 + 1e-6));
    const double hi = th_hi.value_or(theta_cr * 3.0);
    if (!(lo > theta_cr)) {
      std::cerr << "curves: antiferro regime needs theta > theta_cr = "
                << g17(theta_cr) << "\n";
      return 2;
    }
    out << "k,theta,lambda_cr_low,lambda_cr_high,ordering_ok\n";
    for (int i = 0; i < steps; ++i) {
      const double th = lo + (hi - lo) * i / (steps - 1);
      const wr::CriticalValues cv = wr::critical_values(k, th);
      out << k << ',' << g17(th) << ',' << g17(*cv.lambda_cr_anti_low) << ','
          << g17(*cv.lambda_cr_anti_high) << ','
          << (*cv.lambda_cr_anti_low < *cv.lambda_cr_anti_high ? 1 : 0)
          << '\n';
    }
    return 0;
  }
  if (regime == "periodic") {
    const wr::PeriodicWindow probe = wr::periodic_window(k, 0.0);
    if (!probe.has_window) {
      std::cerr << "curves: periodic window hypothesis violated: "
                << probe.violated_hypothesis << "\n";
      return 2;
    }
    const double theta_max =
        (static_cast<double>(k) * k - 6.0 * k + 1.0) / ((k + 1.0) * (k + 1.0));
    const double lo = th_lo.value_or(0.0);
    const double hi = th_hi.value_or(theta_max * (1.0 - 1e-6));
    out << "k,theta,s_minus,s_plus,lambda_minus,lambda_plus,ordering_ok\n";
    for (int i = 0; i < steps; ++i) {
      const double th = lo + (hi - lo) * i / (steps - 1);
      const wr::PeriodicWindow w = wr::periodic_window(k, th);
      if (!w.has_window) {
        std::cerr << "curves: " << w.violated_hypothesis << " at theta = "
                  << g17(th) << "\n";
        return 2;
      }
      out << k << ',' << g17(th) << ',' << g17(w.s_minus) << ','
          << g17(w.s_plus) << ',' << g17(w.lambda_minus) << ','
          << g17(w.lambda_plus) << ','
          << (w.lambda_minus < w.lambda_plus ? 1 : 0) << '\n';
    }
    return 0;
  }
  std::cerr << "curves: unknown regime '" << regime
            << "' (expected ferro|antiferro|periodic)\n";
  return 2;
}

int cmd_verify(const std::string& level, const std::string& report_path) {
  const wr::VerifyLevel lv =
      level == "quick" ? wr::VerifyLevel::quick : wr::VerifyLevel::full;
  const auto results = wr::run_acceptance(lv);
  json arr = json::array();
  for (const auto& r : results) {
    std::printf("[%s] criterion %2d: %s%s%s (%.2fs)\n",
                r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.detail.empty() ? "" : " -- ", r.detail.c_str(), r.seconds);
    arr.push_back({{"id", r.id},
                   {"name", r.name},
                   {"passed", r.passed},
                   {"detail", r.detail},
                   {"seconds", r.seconds}});
  }
  const bool ok = wr::all_passed(results);
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    out << json{{"level", level}, {"all_passed", ok}, {"criteria", arr}}.dump(2)
        << "\n";
  }
  std::printf("%s\n", ok ? "ALL CRITERIA PASSED" : "VERIFICATION FAILED");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Widom-Rowlinson boundary laws on Cayley trees"};
  app.require_subcommand(1);

  int k = 2;
  double theta = 0.0, lambda = 1.0;
  auto* solve = app.add_subcommand("solve", "classify one parameter point");
  solve->add_option("--k", k, "branching number")->required();
  solve->add_option("--theta", theta, "theta = exp(-J beta)")->required();
  solve->add_option("--lambda", lambda, "activity")->required();

  double th_lo = 0.0, th_hi = 1.0, lam_lo = 0.1, lam_hi = 10.0;
  int th_steps = 2, lam_steps = 2;
  bool log_lambda = false;
  std::string output = "sweep.csv", format = "csv";
  auto* sweep = app.add_subcommand("sweep", "grid sweep of the phase diagram");
  sweep->add_option("--k", k)->required();
  sweep->add_option("--theta-min", th_lo)->required();
  sweep->add_option("--theta-max", th_hi)->required();
  sweep->add_option("--theta-steps", th_steps)->required();
  sweep->add_option("--lambda-min", lam_lo)->required();
  sweep->add_option("--lambda-max", lam_hi)->required();
  sweep->add_option("--lambda-steps", lam_steps)->required();
  sweep->add_flag("--log-lambda", log_lambda, "log-spaced lambda grid");
  sweep->add_option("--output", output)->required();
  sweep->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  std::string regime = "ferro";
  int steps = 64;
  std::optional<double> copt_lo, copt_hi;
  std::string curves_out = "curves.csv";
  auto* curves = app.add_subcommand("curves", "sample the critical curves");
  curves->add_option("--k", k)->required();
  curves->add_option("--regime", regime)
      ->required()
      ->check(CLI::IsMember({"ferro", "antiferro", "periodic"}));
  curves->add_option("--steps", steps);
  curves->add_option("--theta-min", copt_lo);
  curves->add_option("--theta-max", copt_hi);
  curves->add_option("--output", curves_out)->required();

  std::string level = "full", report;
  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  verify->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--report", report, "write a JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(k, theta, lambda);
    if (sweep->parsed())
      return cmd_sweep(k, th_lo, th_hi, th_steps, lam_lo, lam_hi, lam_steps,
                       log_lambda, output, format);
    if (curves->parsed())
      return cmd_curves(k, regime, steps, copt_lo, copt_hi, curves_out);
    if (verify->parsed()) return cmd_verify(level, report);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
