#include "wr/tisgm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "wr/roots.hpp"

namespace wr {

std::string to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::closed_form_k2: return "closed_form_k2";
    case SolveMethod::sp_reduction_k3: return "sp_reduction_k3";
    case SolveMethod::scalar_antiferro: return "scalar_antiferro";
    case SolveMethod::general_numeric: return "general_numeric";
  }
  return "?";
}

std::string to_string(TisgmCount c) {
  switch (c) {
    case TisgmCount::one: return "1";
    case TisgmCount::two: return "2";
    case TisgmCount::three: return "3";
    case TisgmCount::at_least_one: return "at_least_1";
    case TisgmCount::at_least_three: return "at_least_3";
  }
  return "?";
}

std::string to_string(DecidingTheorem t) {
  switch (t) {
    case DecidingTheorem::t_gt: return "t_gt";
    case DecidingTheorem::t_lt: return "t_lt";
    case DecidingTheorem::tk3: return "tk3";
    case DecidingTheorem::tkk_1: return "tkk_1";
    case DecidingTheorem::tkk_2: return "tkk_2";
    case DecidingTheorem::tkk_3: return "tkk_3";
    case DecidingTheorem::hardcore_RKh: return "hardcore_RKh";
  }
  return "?";
}

namespace {

// Diagonal defect D(x) = lambda ((1+(1+theta)x)/(1+2x))^k - x, evaluated
// through logs so large k stays finite.
double diagonal_defect(double x, const ModelParams& p) {
  const double ratio = (1.0 + (1.0 + p.theta) * x) / (1.0 + 2.0 * x);
  return std::exp(std::log(p.lambda) + p.k * std::log(ratio)) - x;
}

// Critical points of the scalar antiferro reduction in t = (1+theta)x:
// roots of t^2 + [2 - (b-1)(k-1)] t + b with b = (1+theta)/2.
struct AntiferroCriticals {
  bool real = false;
  double t1 = 0.0, t2 = 0.0;  // t1 < t2
  double nu1 = 0.0, nu2 = 0.0;
};

double nu_of(double t, double b, int k) {
  return std::exp(-std::log(t) + k * (std::log1p(t) - std::log(b + t)));
}

AntiferroCriticals antiferro_criticals(int k, double theta) {
  AntiferroCriticals ac;
  const double b = 0.5 * (1.0 + theta);
  const double coef = 2.0 - (b - 1.0) * (k - 1);
  const double disc = coef * coef - 4.0 * b;
  if (disc <= 0.0) return ac;
  const double sq = std::sqrt(disc);
  // Roots of t^2 + coef t + b; both positive only when coef < 0.
  const double r1 = (-coef - sq) / 2.0;
  const double r2 = (-coef + sq) / 2.0;
  if (!(r1 > 0.0) || !(r2 > 0.0)) return ac;
  ac.real = true;
  ac.t1 = std::min(r1, r2);
  ac.t2 = std::max(r1, r2);
  ac.nu1 = nu_of(ac.t1, b, k);  // local minimum of nu
  ac.nu2 = nu_of(ac.t2, b, k);  // local maximum of nu
  return ac;
}

std::vector<double> bisect_pieces(const ModelParams& p, double x_lo,
                                  double x_hi,
                                  const std::vector<double>& breaks) {
  std::vector<double> edges{x_lo};
  for (double b : breaks)
    if (b > x_lo && b < x_hi) edges.push_back(b);
  edges.push_back(x_hi);
  std::vector<double> roots;
  RootScanOptions opt;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    auto rs = find_roots_scan([&](double x) { return diagonal_defect(x, p); },
                              edges[i], edges[i + 1], opt);
    roots.insert(roots.end(), rs.begin(), rs.end());
  }
  return roots;
}

}  // namespace

std::vector<double> solve_diagonal(const ModelParams& p) {
  validate_params(p);
  if (p.theta == 1.0) return {p.lambda};

  if (p.theta < 1.0) {
    // Ratio decreases from 1 to (1+theta)/2: a single root.
    const double lo =
        p.lambda * std::exp(p.k * std::log(0.5 * (1.0 + p.theta)));
    auto roots = bisect_pieces(p, lo * (1.0 - 1e-12), p.lambda, {});
    if (roots.size() != 1)
      throw std::runtime_error("solve_diagonal: expected a unique root");
    return roots;
  }

  // theta > 1: ratio increases from 1 to (1+theta)/2, so the roots live in
  // [lambda, lambda ((1+theta)/2)^k].  Split at the critical points of the
  // scalar reduction; each piece is monotone in the defect sign.
  const double onep = 1.0 + p.theta;
  const double x_lo = p.lambda;
  const double x_hi = p.lambda * std::exp(p.k * std::log(0.5 * onep));
  const AntiferroCriticals ac = antiferro_criticals(p.k, p.theta);
  std::vector<double> breaks;
  if (ac.real) breaks = {ac.t1 / onep, ac.t2 / onep};
  std::vector<double> roots =
      bisect_pieces(p, x_lo * (1.0 - 1e-12), x_hi * (1.0 + 1e-12), breaks);

  if (ac.real) {
    // On (or within the band of) a critical curve the tangent root touches
    // zero without a sign change; it sits exactly at the critical point.
    const double a =
        std::exp(p.k * std::log(2.0) - std::log(p.lambda) - (p.k + 1) * std::log(onep));
    const std::pair<double, double> tangents[] = {{ac.t1, ac.nu1},
                                                  {ac.t2, ac.nu2}};
    for (const auto& [tc, nuc] : tangents)
      if (std::abs(a - nuc) <= kCriticalBand * nuc) roots.push_back(tc / onep);
  }

  std::vector<ScalarRoot> merged = merge_close_roots(std::move(roots));
  std::vector<double> out;
  out.reserve(merged.size());
  for (const auto& r : merged) out.push_back(r.x);
  return out;
}

std::vector<BoundaryLawPair> solve_offdiagonal_k2(const ModelParams& p) {
  validate_params(p);
  if (p.k != 2)
    throw std::invalid_argument("solve_offdiagonal_k2: requires k = 2");
  if (!(p.theta < 1.0))
    throw std::invalid_argument("solve_offdiagonal_k2: requires theta < 1");
  const double th = p.theta, lam = p.lambda;
  if (th >= 1.0 / 3.0) return {};

  const double root = std::sqrt(lam * lam * (1.0 + th) * (1.0 + th) + 4.0 * lam);
  const double g = 0.5 * (lam * (1.0 - th * th) + (1.0 - th) * root);
  const double g_minus = 0.5 * (lam * (1.0 - th * th) - (1.0 - th) * root);
  // The discarded branch must stay in the region 1 + x + y <= 0.
  if (g_minus >= 1.0)
    throw std::logic_error("solve_offdiagonal_k2: rejected branch is feasible");

  // x g^2 = lambda ((1-theta) x + c)^2 with c = 1 + theta (g - 1).
  const double c = 1.0 + th * (g - 1.0);
  const double qa = lam * (1.0 - th) * (1.0 - th);
  const double qb = 2.0 * lam * (1.0 - th) * c - g * g;
  const double qc = lam * c * c;
  const double disc = qb * qb - 4.0 * qa * qc;

  const double lam_cr = (9.0 / 4.0) / (1.0 - 3.0 * th);
  if (disc <= 0.0) {
    if (std::abs(lam - lam_cr) <= kCriticalBand * lam_cr) {
      const double xd = -qb / (2.0 * qa);  // tangent double root
      return {{xd, g - 1.0 - xd}};
    }
    return {};
  }
  const double sq = std::sqrt(disc);
  const double x1 = (-qb - sq) / (2.0 * qa);
  const double x2 = (-qb + sq) / (2.0 * qa);
  if (!(x1 > 0.0) || !(x2 > 0.0)) return {};
  if (x2 - x1 <= 1e-7 * std::max(1.0, x2)) return {{0.5 * (x1 + x2), 0.5 * (x1 + x2)}};
  return {{x1, x2}};
}

std::vector<BoundaryLawPair> solve_offdiagonal_k3(const ModelParams& p) {
  validate_params(p);
  if (p.k != 3)
    throw std::invalid_argument("solve_offdiagonal_k3: requires k = 3");
  if (!(p.theta < 1.0))
    throw std::invalid_argument("solve_offdiagonal_k3: requires theta < 1");
  const double th = p.theta;
  if (th >= 0.5) return {};

  const double a = p.activity_root;
  const double s_min = std::cbrt(4.0 / (1.0 - 2.0 * th));
  const double a_min = (2.0 / 3.0) * s_min;
  const bool on_curve = std::abs(a - a_min) <= kCriticalBand * a_min;
  if (a < a_min && !on_curve) return {};

  double s = s_min;
  if (!on_curve && a > a_min) {
    // eta(s) = s (s^3 - 2) / ((1+theta) s^3 - 1) is strictly increasing on
    // s >= s_min; bracket and bisect eta(s) = a.
    const auto eta = [&](double v) {
      const double v3 = v * v * v;
      return v * (v3 - 2.0) / ((1.0 + th) * v3 - 1.0) - a;
    };
    double hi = std::max(2.0 * s_min, 2.0 * a * (1.0 + th));
    while (eta(hi) < 0.0) hi *= 2.0;
    auto roots = find_roots_scan(eta, s_min, hi, {});
    if (roots.size() != 1)
      throw std::runtime_error("solve_offdiagonal_k3: eta bisection failed");
    s = roots[0];
  }

  const double prod = (1.0 + th * s * s * s) / ((1.0 + 2.0 * th) * s);
  const double disc = std::max(s * s - 4.0 * prod, 0.0);
  const double sq = std::sqrt(disc);
  const double u = 0.5 * (s + sq);
  const double v = 0.5 * (s - sq);
  if (!(v > 0.0))
    throw std::runtime_error("solve_offdiagonal_k3: non-positive component");
  return {{v * v * v, u * u * u}};  // representative with x <= y
}

namespace {

double gamma_map(double u, double a, double theta, int k) {
  return a * (1.0 + theta) - u + (u - a * theta) / (1.0 + std::pow(u, k));
}

}  // namespace

std::vector<BoundaryLawPair> solve_offdiagonal_general(const ModelParams& p,
                                                       int n_starts) {
  validate_params(p);
  if (p.k < 2)
    throw std::invalid_argument("solve_offdiagonal_general: requires k >= 2");
  if (!(p.theta < 1.0))
    throw std::invalid_argument("solve_offdiagonal_general: requires theta < 1");
  if (n_starts < 8) n_starts = 8;

  const double a = p.activity_root;
  const double th = p.theta;
  const int k = p.k;
  const auto gamma = [&](double u) { return gamma_map(u, a, th, k); };

  // Unique fixed point xi of gamma on [a theta, a] (gamma is decreasing
  // there, so gamma(u) - u crosses zero once).
  const double u_lo = std::max(a * th, a * 1e-12);
  const double u_hi = a;
  auto fixed = find_roots_scan([&](double u) { return gamma(u) - u; },
                               u_lo, u_hi, {.cells = 64});
  if (fixed.size() != 1)
    throw std::runtime_error("solve_offdiagonal_general: gamma fixed point");
  const double xi = fixed[0];

  // 2-cycles are the extra fixed points of gamma(gamma(u)) - u.
  RootScanOptions opt;
  opt.cells = n_starts;
  const auto two_cycle_defect = [&](double u) { return gamma(gamma(u)) - u; };
  auto cyc =
      find_roots_scan(two_cycle_defect, u_lo, u_hi * (1.0 + 1e-12), opt);
  // Just past the bifurcation the 2-cycle hugs xi closer than the global
  // grid resolves; rescan a narrow window around xi.
  {
    const double w = (u_hi - u_lo) / 16.0;
    auto fine = find_roots_scan(two_cycle_defect, std::max(u_lo, xi - w),
                                std::min(u_hi, xi + w), opt);
    cyc.insert(cyc.end(), fine.begin(), fine.end());
  }

  std::vector<BoundaryLawPair> pairs;
  for (double u : cyc) {
    if (std::abs(u - xi) <= 1e-7 * std::max(1.0, xi)) continue;
    const double v = gamma(u);
    if (u >= v) continue;  // keep one representative per swap-pair
    BoundaryLawPair bl{std::pow(u, k), std::pow(v, k)};
    bool dup = false;
    for (const auto& q : pairs)
      if (std::abs(q.x - bl.x) <= 1e-7 * std::max(1.0, q.x)) dup = true;
    if (!dup) pairs.push_back(bl);
  }
  return pairs;
}

CriticalValues critical_values(int k, double theta) {
  if (k < 2) throw std::invalid_argument("critical_values: requires k >= 2");
  if (!(theta >= 0.0) || !std::isfinite(theta))
    throw std::invalid_argument("critical_values: bad theta");
  CriticalValues cv;
  if (theta > 1.0) {
    cv.regime = CriticalRegime::antiferro;
    const double r = static_cast<double>(k + 1) / (k - 1);
    cv.theta_cr_anti = 2.0 * r * r - 1.0;
    const AntiferroCriticals ac = antiferro_criticals(k, theta);
    if (ac.real) {
      // lambda_{cr,i} = 2^k x_i/(1+theta)^{k+1} ((1+theta+2x_i)/(2(1+x_i)))^k
      const auto lam_of = [&](double t) {
        return std::exp(k * std::log(2.0) + std::log(t) -
                        (k + 1) * std::log1p(theta) +
                        k * (std::log(1.0 + theta + 2.0 * t) -
                             std::log(2.0 * (1.0 + t))));
      };
      const double l1 = lam_of(ac.t1);
      const double l2 = lam_of(ac.t2);
      cv.lambda_cr_anti_low = std::min(l1, l2);
      cv.lambda_cr_anti_high = std::max(l1, l2);
    }
    return cv;
  }
  cv.regime = k == 2   ? CriticalRegime::ferro_k2
              : k == 3 ? CriticalRegime::ferro_k3
                       : CriticalRegime::ferro_kge4;
  cv.theta_c = static_cast<double>(k - 1) / (k + 1);
  if (theta < *cv.theta_c) {
    cv.lambda_cr = std::exp(k * std::log((k + 1.0) / k)) /
                   (k - 1.0 - theta * (k + 1.0));
  }
  if (k >= 4) {
    cv.theta_c_prime = static_cast<double>(k - 1) / k;
    if (theta < *cv.theta_c_prime)
      cv.lambda_cr_prime = 1.0 / (k - 1.0 - k * theta);
  }
  return cv;
}

TisgmSolutionSet solve_all(const ModelParams& p) {
  TisgmSolutionSet set;
  set.diagonal = solve_diagonal(p);
  if (p.theta < 1.0) {
    if (p.k == 2) {
      set.offdiagonal = solve_offdiagonal_k2(p);
      set.method = SolveMethod::closed_form_k2;
    } else if (p.k == 3) {
      set.offdiagonal = solve_offdiagonal_k3(p);
      set.method = SolveMethod::sp_reduction_k3;
    } else {
      set.offdiagonal = solve_offdiagonal_general(p);
      set.method = SolveMethod::general_numeric;
    }
    // A tangent pair with x == y is the diagonal root, not a swap-pair.
    std::erase_if(set.offdiagonal, [](const BoundaryLawPair& bl) {
      return std::abs(bl.x - bl.y) <= 1e-7 * std::max(1.0, bl.y);
    });
  } else {
    set.method = SolveMethod::scalar_antiferro;
  }
  double worst = 0.0;
  for (double x : set.diagonal)
    worst = std::max(worst, exy_residual({x, x}, p));
  for (const auto& bl : set.offdiagonal)
    worst = std::max(worst, exy_residual(bl, p));
  set.residual = worst;
  return set;
}

namespace {

bool within_band(double lambda, double crit) {
  return std::abs(lambda - crit) <= kCriticalBand * crit;
}

}  // namespace

PhaseReport classify_phase(const ModelParams& p) {
  validate_params(p);
  if (p.k < 2) throw std::invalid_argument("classify_phase: requires k >= 2");
  PhaseReport rep;
  rep.critical = critical_values(p.k, p.theta);
  rep.solutions = solve_all(p);
  const double lam = p.lambda;

  if (p.theta > 1.0) {
    rep.deciding_theorem = DecidingTheorem::t_gt;
    const CriticalValues& cv = rep.critical;
    if (p.theta <= *cv.theta_cr_anti || !cv.lambda_cr_anti_low) {
      rep.count = TisgmCount::one;
    } else if (within_band(lam, *cv.lambda_cr_anti_low) ||
               within_band(lam, *cv.lambda_cr_anti_high)) {
      rep.count = TisgmCount::two;
    } else if (lam > *cv.lambda_cr_anti_low && lam < *cv.lambda_cr_anti_high) {
      rep.count = TisgmCount::three;
    } else {
      rep.count = TisgmCount::one;
    }
    return rep;
  }

  if (p.theta == 0.0) {
    rep.deciding_theorem = DecidingTheorem::hardcore_RKh;
    const double lam_cr = *rep.critical.lambda_cr;
    if (lam <= lam_cr * (1.0 + kCriticalBand)) {
      rep.count = TisgmCount::one;
    } else {
      rep.count =
          p.k <= 3 ? TisgmCount::three : TisgmCount::at_least_three;
    }
    return rep;
  }

  if (p.k == 2 || p.k == 3) {
    rep.deciding_theorem =
        p.k == 2 ? DecidingTheorem::t_lt : DecidingTheorem::tk3;
    const double theta_c = p.k == 2 ? 1.0 / 3.0 : 0.5;
    if (p.theta >= theta_c || lam <= *rep.critical.lambda_cr * (1.0 + kCriticalBand))
      rep.count = TisgmCount::one;
    else
      rep.count = TisgmCount::three;
    return rep;
  }

  // k >= 4, 0 < theta < 1.
  const CriticalValues& cv = rep.critical;
  if (p.theta >= *cv.theta_c_prime ||
      lam * (1.0 + kCriticalBand) < *cv.lambda_cr_prime) {
    rep.deciding_theorem = DecidingTheorem::tkk_1;
    rep.count = TisgmCount::one;
  } else if (cv.lambda_cr && lam > *cv.lambda_cr * (1.0 + kCriticalBand)) {
    rep.deciding_theorem = DecidingTheorem::tkk_3;
    rep.count = TisgmCount::at_least_three;
  } else {
    rep.deciding_theorem = DecidingTheorem::tkk_2;
    rep.count = TisgmCount::at_least_one;
  }
  return rep;
}

namespace {

// T(u,v) of the linear reformulation; u != v assumed.
double conj_T(double u, double v, int k) {
  return (u * v * (std::pow(u, k - 1) - std::pow(v, k - 1)) - (u - v)) /
         (std::pow(u, k) - std::pow(v, k));
}

// Solves a(u, v) = a for v in (0, u) given u > a k/(k+1), via the
// genuine level-set factor sum_j u^{k-j} v^j - a sum_j u^{k-1-j} v^j.
std::optional<double> conj_level_v(double a, double u, int k) {
  const auto R = [&](double v) {
    double num = 0.0, den = 0.0;
    for (int j = 0; j <= k; ++j) num += std::pow(u, k - j) * std::pow(v, j);
    for (int j = 0; j <= k - 1; ++j)
      den += std::pow(u, k - 1 - j) * std::pow(v, j);
    return num - a * den;
  };
  double lo = u * 1e-14, hi = u * (1.0 - 1e-12);
  double flo = R(lo), fhi = R(hi);
  if ((flo < 0.0) == (fhi < 0.0)) return std::nullopt;
  for (int it = 0; it < 120; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = R(mid);
    if ((flo < 0.0) == (fm < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

ConjectureScanReport conjecture_scan(int k, double theta, int grid) {
  if (k < 4) throw std::invalid_argument("conjecture_scan: requires k >= 4");
  const double theta_c = static_cast<double>(k - 1) / (k + 1);
  if (!(theta >= 0.0) || theta >= theta_c)
    throw std::invalid_argument("conjecture_scan: requires 0 <= theta < (k-1)/(k+1)");
  if (grid < 8) throw std::invalid_argument("conjecture_scan: grid must be >= 8");

  ConjectureScanReport rep;
  rep.k = k;
  rep.theta = theta;
  const double A = k - 1.0 - theta * (k + 1.0);
  rep.a_critical_closed = ((k + 1.0) / k) * std::pow(A, -1.0 / k);

  const auto t_diag = [&](double a) {
    const double u0 = a * k / (k + 1.0);
    return ((k - 1.0) * std::pow(u0, k) - 1.0) / (k * std::pow(u0, k - 1));
  };

  // T_diag(a) - a theta is increasing; its root is the critical activity.
  {
    double lo = rep.a_critical_closed * 0.25, hi = rep.a_critical_closed * 4.0;
    auto roots = find_roots_scan(
        [&](double a) { return t_diag(a) - a * theta; }, lo, hi, {});
    rep.a_critical_scan = roots.size() == 1 ? roots[0] : 0.0;
  }

  bool all_supported = true;
  for (int i = 0; i < grid; ++i) {
    const double a = rep.a_critical_closed *
                     std::exp(std::log(0.7) + (std::log(1.5) - std::log(0.7)) *
                                                   i / (grid - 1.0));
    ConjectureLevelSet lv;
    lv.a = a;
    lv.t_diagonal = t_diag(a);
    const double u0 = a * k / (k + 1.0);
    const auto t_at = [&](double u) {
      const auto v = conj_level_v(a, u, k);
      return v ? conj_T(u, *v, k)
               : -std::numeric_limits<double>::infinity();
    };
    double best = -std::numeric_limits<double>::infinity();
    double u_best = u0;
    const int sweep = 512;
    for (int j = 1; j < sweep; ++j) {
      const double u = u0 + (a - u0) * j / sweep;
      const double t = t_at(u);
      if (t > best) {
        best = t;
        u_best = u;
      }
    }
    // Golden-section refinement around the best grid point.
    {
      const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
      const double cell = (a - u0) / sweep;
      double lo = std::max(u0 + 0.25 * cell, u_best - cell);
      double hi = std::min(a - 0.25 * cell, u_best + cell);
      double m1 = hi - gr * (hi - lo), m2 = lo + gr * (hi - lo);
      double f1 = t_at(m1), f2 = t_at(m2);
      for (int it = 0; it < 40; ++it) {
        if (f1 < f2) {
          lo = m1;
          m1 = m2;
          f1 = f2;
          m2 = lo + gr * (hi - lo);
          f2 = t_at(m2);
        } else {
          hi = m2;
          m2 = m1;
          f2 = f1;
          m1 = hi - gr * (hi - lo);
          f1 = t_at(m1);
        }
      }
      const double u_ref = 0.5 * (lo + hi);
      const double t_ref = t_at(u_ref);
      if (t_ref > best) {
        best = t_ref;
        u_best = u_ref;
      }
    }
    lv.u_at_best = u_best;
    if (const auto v = conj_level_v(a, u_best, k)) lv.v_at_best = *v;
    lv.t_offdiag_best = best;
    // Supported when no off-diagonal point exceeds the diagonal limit
    // (and T < 0 everywhere means no admissible theta >= 0 at all).
    lv.extremum_at_diagonal =
        best <= std::max(lv.t_diagonal, 0.0) + 1e-9 * std::max(1.0, std::abs(lv.t_diagonal));
    all_supported = all_supported && lv.extremum_at_diagonal;
    rep.levels.push_back(lv);
  }
  const double rel_err =
      std::abs(rep.a_critical_scan - rep.a_critical_closed) /
      rep.a_critical_closed;
  rep.supports_conjecture = all_supported && rel_err <= 1e-9;
  return rep;
}

}  // namespace wr
