#include "wr/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wr/brackets.hpp"
#include "wr/oracle.hpp"
#include "wr/recursion.hpp"
#include "wr/roots.hpp"

namespace wr {

double eval_phi(double x, const ModelParams& p) {
  if (!(x > 0.0)) throw std::domain_error("eval_phi: x must be positive");
  return law_update(x, x, p);  // F(x, x) = (1 + (1+theta)x)/(1 + 2x)
}

double two_periodic_residual(const TwoPeriodicSolution& s,
                             const ModelParams& p) {
  const auto rel = [](double a, double b) {
    return std::abs(a - b) / std::max({1e-300, std::abs(a), std::abs(b)});
  };
  return std::max(rel(s.z_even, eval_phi(s.z_odd, p)),
                  rel(s.z_odd, eval_phi(s.z_even, p)));
}

PeriodicWindow periodic_window(int k, double theta) {
  if (k < 2) throw std::invalid_argument("periodic_window: requires k >= 2");
  if (!(theta >= 0.0) || !std::isfinite(theta))
    throw std::invalid_argument("periodic_window: bad theta");
  PeriodicWindow w;
  const double disc_num = static_cast<double>(k) * k - 6.0 * k + 1.0;
  if (disc_num <= 0.0) {
    w.violated_hypothesis = "k^2 - 6k + 1 < 0 (needs k >= 6)";
    return w;
  }
  if (k < 6) {
    w.violated_hypothesis = "k >= 6";
    return w;
  }
  const double kp1 = k + 1.0;
  const double theta_max = disc_num / (kp1 * kp1);
  if (theta >= theta_max) {
    w.violated_hypothesis = "theta < (k^2-6k+1)/(k+1)^2";
    return w;
  }
  const double rad = (1.0 - theta) * (disc_num - kp1 * kp1 * theta);
  const double sq = std::sqrt(rad);
  const double base = k - 3.0 - kp1 * theta;
  w.s_minus = (base - sq) / (4.0 * (1.0 + theta));
  w.s_plus = (base + sq) / (4.0 * (1.0 + theta));
  if (!(w.s_minus > 0.0))
    throw std::runtime_error("periodic_window: s- not positive");
  const ModelParams pk = ModelParams::from_theta(k, theta, 1.0);
  w.lambda_minus = eval_kappa(w.s_minus, pk);
  w.lambda_plus = eval_kappa(w.s_plus, pk);
  if (!(w.lambda_minus < w.lambda_plus))
    throw std::runtime_error("periodic_window: window not ordered");
  w.has_window = true;
  return w;
}

double eval_kappa(double x, const ModelParams& p) {
  if (!(x > 0.0)) throw std::domain_error("eval_kappa: x must be positive");
  return std::exp(std::log(x) +
                  p.k * (std::log1p(2.0 * x) -
                         std::log1p((1.0 + p.theta) * x)));
}

bool diagonal_unstable(double x_star, const ModelParams& p) {
  const double q = 2.0 * (1.0 + p.theta) * x_star * x_star +
                   (3.0 + p.theta - p.k * (1.0 - p.theta)) * x_star + 1.0;
  return q < 0.0;
}

std::vector<TwoPeriodicSolution> solve_two_periodic(const ModelParams& p) {
  validate_params(p);
  if (!(p.theta < 1.0))
    throw std::invalid_argument("solve_two_periodic: requires theta < 1");

  const BracketQuadruple q = iterate_bounds(p);
  const double lo =
      std::max(1e-300, std::min(q.z1_lo, q.z2_lo) * (1.0 - 1e-9));
  const double hi = std::max(q.z1_hi, q.z2_hi) * (1.0 + 1e-9);

  // phi is decreasing, so phi o phi is increasing and a sign-change sweep
  // sees every crossing.
  RootScanOptions opt;
  opt.cells = 512;
  auto roots = find_roots_scan(
      [&](double x) { return eval_phi(eval_phi(x, p), p) - x; }, lo, hi, opt);

  std::vector<TwoPeriodicSolution> out;
  for (double z : roots) {
    const double t = eval_phi(z, p);
    if (std::abs(z - t) <= 1e-10 * std::max(1.0, t)) {
      out.push_back({0.5 * (z + t), 0.5 * (z + t), true});
    } else if (z < t) {
      out.push_back({z, t, false});  // (t, z) is the same cycle relabeled
    }
  }
  // The diagonal root is always a fixed point of phi o phi; make sure a
  // scan hiccup cannot drop it.
  const bool have_diag =
      std::any_of(out.begin(), out.end(),
                  [](const TwoPeriodicSolution& s) {
                    return s.is_translation_invariant;
                  });
  if (!have_diag) {
    auto diag = find_roots_scan(
        [&](double x) { return eval_phi(x, p) - x; }, lo, hi, opt);
    if (diag.size() == 1) out.push_back({diag[0], diag[0], true});
  }
  std::sort(out.begin(), out.end(),
            [](const TwoPeriodicSolution& a, const TwoPeriodicSolution& b) {
              return a.z_even < b.z_even;
            });
  return out;
}

std::pair<double, double> hole_density_gap(const TwoPeriodicSolution& sol,
                                           const ModelParams& p,
                                           int root_degree) {
  // An even site sees odd neighbors and vice versa.
  const auto even_m = marginal_from_two_periodic(sol.z_even, sol.z_odd,
                                                 Parity::even, p, root_degree);
  const auto odd_m = marginal_from_two_periodic(sol.z_even, sol.z_odd,
                                                Parity::odd, p, root_degree);
  return {even_m[1], odd_m[1]};
}

}  // namespace wr
