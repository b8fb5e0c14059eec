#include "wr/verification.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <cmath>
#include <random>
#include <sstream>

#include "wr/brackets.hpp"
#include "wr/oracle.hpp"
#include "wr/params.hpp"
#include "wr/paths.hpp"
#include "wr/periodic.hpp"
#include "wr/recursion.hpp"
#include "wr/tisgm.hpp"

namespace wr {

namespace {

using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::ostringstream why;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) why << "; ";
      ok = false;
      why << what;
    }
  }
};

double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max({1e-300, std::abs(a), std::abs(b)});
}

// ---- criterion 1: hard-core k=2 transition at lambda = 9/4 ----
CriterionResult c1() {
  const auto t0 = Clock::now();
  Check c;
  const CriticalValues cv = critical_values(2, 0.0);
  c.require(cv.lambda_cr.has_value() &&
                std::abs(*cv.lambda_cr - 2.25) <= 1e-13,
            "lambda_cr(2,0) != 9/4");
  const PhaseReport below = classify_phase(ModelParams::hard_core(2, 2.2499));
  const PhaseReport above = classify_phase(ModelParams::hard_core(2, 2.2501));
  c.require(below.count == TisgmCount::one, "count at 2.2499 not 1");
  c.require(above.count == TisgmCount::three, "count at 2.2501 not 3");
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  c.require(secs < 1.0, "runtime >= 1 s");
  return {1, "hard-core k=2 transition at 9/4", c.ok, c.why.str(), secs};
}

// ---- criterion 2: hard-core k=3 transition at 32/27 ----
CriterionResult c2() {
  const auto t0 = Clock::now();
  Check c;
  const CriticalValues cv = critical_values(3, 0.0);
  c.require(cv.lambda_cr.has_value() &&
                std::abs(*cv.lambda_cr - 32.0 / 27.0) <= 1e-12,
            "lambda_cr(3,0) != 32/27");
  const double lam_hi = (32.0 / 27.0) * (1.0 + 1e-4);
  const auto pairs = solve_offdiagonal_k3(ModelParams::hard_core(3, lam_hi));
  c.require(pairs.size() == 1 && pairs[0].x != pairs[0].y,
            "no off-diagonal pair just above 32/27");
  if (!pairs.empty())
    c.require(exy_residual(pairs[0], ModelParams::hard_core(3, lam_hi)) <= 1e-10,
              "pair residual > 1e-10");
  const double lam_lo = (32.0 / 27.0) * (1.0 - 1e-4);
  c.require(solve_offdiagonal_k3(ModelParams::hard_core(3, lam_lo)).empty(),
            "spurious pair below 32/27");
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  return {2, "hard-core k=3 transition at 32/27", c.ok, c.why.str(), secs};
}

// ---- criterion 3: soft-core k=2 critical curve ----
CriterionResult c3() {
  const auto t0 = Clock::now();
  Check c;
  const CriticalValues cv = critical_values(2, 0.2);
  c.require(cv.lambda_cr.has_value() &&
                std::abs(*cv.lambda_cr - 5.625) <= 1e-13 * 5.625,
            "lambda_cr(2,0.2) != 5.625");
  const auto below =
      classify_phase(ModelParams::from_theta(2, 0.2, 5.625 * (1.0 - 1e-6)));
  const auto above =
      classify_phase(ModelParams::from_theta(2, 0.2, 5.625 * (1.0 + 1e-6)));
  c.require(below.count == TisgmCount::one, "count below curve not 1");
  c.require(above.count == TisgmCount::three, "count above curve not 3");
  c.require(below.solutions.num_measures() == 1,
            "solver found laws below the curve");
  c.require(above.solutions.num_measures() == 3,
            "solver missed laws above the curve");
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  return {3, "soft-core k=2 curve lambda_cr = 5.625 at theta=0.2", c.ok,
          c.why.str(), secs};
}

// ---- criterion 4: antiferro k=5 structure ----
CriterionResult c4() {
  const auto t0 = Clock::now();
  Check c;
  const CriticalValues cv = critical_values(5, 5.0);
  c.require(cv.theta_cr_anti.has_value() && *cv.theta_cr_anti == 3.5,
            "theta_cr(5) != 3.5");
  c.require(cv.lambda_cr_anti_low.has_value() &&
                cv.lambda_cr_anti_high.has_value(),
            "missing antiferro curves");
  if (!c.ok) {
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    return {4, "antiferro k=5 (theta_cr, curves, root counts)", c.ok,
            c.why.str(), secs};
  }
  // The scalar-reduction critical points are 3 +- sqrt(6).
  const double s6 = std::sqrt(6.0);
  const double lam_lo = *cv.lambda_cr_anti_low;
  const double lam_hi = *cv.lambda_cr_anti_high;
  {
    const double q1 = 3.0 - s6, q2 = 3.0 + s6;
    const double quad1 = 2.0 * q1 * q1 + (4.0 - 4.0 * 4.0) * q1 + 6.0;
    const double quad2 = 2.0 * q2 * q2 + (4.0 - 4.0 * 4.0) * q2 + 6.0;
    c.require(std::abs(quad1) <= 1e-12 && std::abs(quad2) <= 1e-12,
              "3 +- sqrt(6) are not the quadratic roots");
  }
  const double lam_mid = std::sqrt(lam_lo * lam_hi);
  const auto check_roots = [&](double lam, std::size_t want,
                               const std::string& label) {
    const ModelParams p = ModelParams::from_theta(5, 5.0, lam);
    const auto roots = solve_diagonal(p);
    c.require(roots.size() == want,
              label + ": got " + std::to_string(roots.size()) + " roots, want " +
                  std::to_string(want));
    for (double x : roots)
      c.require(exy_residual({x, x}, p) <= 1e-10, label + ": residual > 1e-10");
  };
  check_roots(lam_mid, 3, "mid-gap");
  check_roots(lam_hi * 1.5, 1, "outside high");
  check_roots(lam_lo * 0.5, 1, "outside low");
  check_roots(lam_lo, 2, "on low curve");
  check_roots(lam_hi, 2, "on high curve");
  c.require(classify_phase(ModelParams::from_theta(5, 5.0, lam_mid)).count ==
                TisgmCount::three,
            "mid-gap count not 3");
  c.require(classify_phase(ModelParams::from_theta(5, 5.0, lam_lo)).count ==
                TisgmCount::two,
            "on-curve count not 2");
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  return {4, "antiferro k=5 (theta_cr, curves, root counts)", c.ok,
          c.why.str(), secs};
}

// ---- criterion 5: off-diagonal exclusion for theta > 1 ----

// Backtracking Newton on the log-domain fixed-point system; the log
// coordinates remove the positivity constraint and keep the Jacobian
// O(1)-scaled.  Returns a root or nothing (never a false positive: the
// residual gate is checked before returning).
std::optional<BoundaryLawPair> newton_root(double hp, double hm,
                                           const ModelParams& p) {
  const double ll = std::log(p.lambda);
  const auto G1 = [&](double a, double b) {
    return a - ll - p.k * eval_f(a, b, p.theta);
  };
  const auto G2 = [&](double a, double b) {
    return b - ll - p.k * eval_f(b, a, p.theta);
  };
  for (int it = 0; it < 100; ++it) {
    const double g1 = G1(hp, hm), g2 = G2(hp, hm);
    const double n0 = g1 * g1 + g2 * g2;
    if (std::abs(g1) <= 1e-13 && std::abs(g2) <= 1e-13)
      return BoundaryLawPair{std::exp(hp), std::exp(hm)};
    const double h = 1e-7;
    const double j11 = (G1(hp + h, hm) - g1) / h;
    const double j12 = (G1(hp, hm + h) - g1) / h;
    const double j21 = (G2(hp + h, hm) - g2) / h;
    const double j22 = (G2(hp, hm + h) - g2) / h;
    const double det = j11 * j22 - j12 * j21;
    if (det == 0.0 || !std::isfinite(det)) return std::nullopt;
    const double dx = (g1 * j22 - g2 * j12) / det;
    const double dy = (g2 * j11 - g1 * j21) / det;
    double s = 1.0;
    bool moved = false;
    for (int bt = 0; bt < 40; ++bt) {
      const double nx = std::clamp(hp - s * dx, -600.0, 600.0);
      const double ny = std::clamp(hm - s * dy, -600.0, 600.0);
      const double a = G1(nx, ny), b = G2(nx, ny);
      if (a * a + b * b < n0) {
        hp = nx;
        hm = ny;
        moved = true;
        break;
      }
      s *= 0.5;
    }
    if (!moved) return std::nullopt;  // stalled at a non-root minimum
  }
  return std::nullopt;
}

CriterionResult c5() {
  const auto t0 = Clock::now();
  Check c;
  std::mt19937_64 rng(20240517);
  std::uniform_real_distribution<double> uth(1.0 + 1e-6, 20.0);
  std::uniform_real_distribution<double> ulog(-2.0, 2.0);
  std::uniform_int_distribution<int> uk(2, 8);
  int sign_checks = 0, roots_found = 0, offdiag_roots = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int k = uk(rng);
    const double theta = uth(rng);
    const double lambda = std::pow(10.0, ulog(rng));
    const ModelParams p = ModelParams::from_theta(k, theta, lambda);
    BoundaryLawPair bl{std::pow(10.0, ulog(rng)), std::pow(10.0, ulog(rng))};
    if (bl.x == bl.y) bl.y *= 1.5;
    // Sign structure of the off-diagonal factor equation.
    if (offdiag_factor_rhs(bl, p) < 0.0) ++sign_checks;
    // Newton from a random start reaches fixed points regardless of the
    // iteration's own stability.
    if (const auto root = newton_root(std::log(bl.x), std::log(bl.y), p)) {
      ++roots_found;
      if (rel_diff(root->x, root->y) > 1e-7) ++offdiag_roots;
    }
  }
  c.require(sign_checks == 10000, "factor equation RHS not always negative");
  c.require(offdiag_roots == 0,
            std::to_string(offdiag_roots) + " off-diagonal roots found");
  c.require(roots_found > 8000, "Newton search rarely converged");
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  return {5, "antiferro off-diagonal exclusion (1e4 random starts)", c.ok,
          c.why.str(), secs};
}

// ---- criterion 6: bracket structure and uniqueness certificate ----
CriterionResult c6() {
  const auto t0 = Clock::now();
  Check c;
  const ModelParams p = ModelParams::hard_core(2, 3.0);
  const auto pairs = solve_offdiagonal_k2(p);
  c.require(pairs.size() == 1, "k=2 theta=0 lambda=3 should have one pair");
  if (pairs.size() == 1) {
    const double x1 = std::min(pairs[0].x, pairs[0].y);
    const double x2 = std::max(pairs[0].x, pairs[0].y);
    const BracketQuadruple q = iterate_bounds(p);
    c.require(q.converged, "envelope iteration did not converge");
    c.require(rel_diff(q.z1_lo, x1) <= 1e-10 && rel_diff(q.z2_lo, x1) <= 1e-10,
              "lower envelope != x1*");
    c.require(rel_diff(q.z1_hi, x2) <= 1e-10 && rel_diff(q.z2_hi, x2) <= 1e-10,
              "upper envelope != x2*");
    // The four envelope solutions enumerated from the subsystem pairing.
    const double xs = solve_diagonal(p)[0];
    const BracketQuadruple combos[] = {
        {x1, x1, x2, x2, 0, true},
        {x1, x2, x1, x2, 0, true},
        {x2, x1, x2, x1, 0, true},
        {x2, x2, x1, x1, 0, true},
    };
    for (const auto& v : combos)
      c.require(bracket_residual(v, p) <= 1e-10,
                "envelope-system solution residual > 1e-10");
    c.require(bracket_residual({xs, xs, xs, xs, 0, true}, p) <= 1e-10,
              "diagonal envelope residual > 1e-10");
  }
  const auto cert_unique =
      uniqueness_certificate(ModelParams::from_theta(2, 0.2, 5.0));
  c.require(cert_unique.status == UniquenessStatus::certified_unique,
            "(2, 0.2, 5) not certified unique");
  const auto cert_open = uniqueness_certificate(p);
  c.require(cert_open.status == UniquenessStatus::inconclusive,
            "(2, 0, 3) should be inconclusive");
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  return {6, "bracket quadruple structure and uniqueness certificate", c.ok,
          c.why.str(), secs};
}

// ---- criterion 7: oracle agreement on 20 random fixed points ----
CriterionResult c7() {
  const auto t0 = Clock::now();
  Check c;
  std::mt19937_64 rng(911);
  // theta stays away from the decoupling point 1, where leaf fields stop
  // influencing the interior and the perturbation probe loses its teeth.
  std::uniform_real_distribution<double> uth(0.0, 0.5);
  std::uniform_real_distribution<double> uath(2.0, 10.0);
  std::uniform_real_distribution<double> ulam(std::log(0.5), std::log(10.0));
  for (int trial = 0; trial < 20; ++trial) {
    const bool anti = trial % 4 == 3;
    const double theta = anti ? uath(rng) : (trial == 0 ? 0.0 : uth(rng));
    const double lambda = std::exp(ulam(rng));
    const ModelParams p = ModelParams::from_theta(2, theta, lambda);
    const TisgmSolutionSet set = solve_all(p);
    std::vector<BoundaryLawPair> laws;
    for (double x : set.diagonal) laws.push_back({x, x});
    if (!set.offdiagonal.empty()) laws.push_back(set.offdiagonal.front());
    const BoundaryLawPair bl = laws[static_cast<std::size_t>(trial) % laws.size()];

    const TreeIndex tree(2, 2, 3);  // |V_2| = 10, 3^10 = 59049 states
    const auto table = field_table_from_law(tree, bl, p);
    EnumerateOptions opt{.site_marginals = true, .prefix_table = false};
    const FiniteVolumeMeasure mu(tree, p, table, opt);
    const auto root = mu.site_marginal(0);
    const auto law_marg = marginal_from_boundary_law(bl, p, 3);
    for (int q = 0; q < 3; ++q)
      c.require(std::abs(root[static_cast<std::size_t>(q)] -
                         law_marg[static_cast<std::size_t>(q)]) <= 1e-10,
                "trial " + std::to_string(trial) + ": marginal mismatch");

    FieldAssignment fa = FieldAssignment::constant(tree, std::log(bl.x),
                                                   std::log(bl.y));
    c.require(check_compatibility(p, fa, 3) <= 1e-12,
              "trial " + std::to_string(trial) + ": compatibility residual");
    FieldAssignment bad = fa;
    bad.h_plus[static_cast<std::size_t>(tree.shell_begin(2))] += 0.1;
    c.require(check_compatibility(p, bad, 3) > 1e-4,
              "trial " + std::to_string(trial) + ": perturbation undetected");
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  c.require(secs < 30.0, "runtime >= 30 s");
  return {7, "oracle agreement (marginals, compatibility, perturbation)",
          c.ok, c.why.str(), secs};
}

// ---- criterion 8: periodic window k=6 ----
CriterionResult c8(VerifyLevel level) {
  const auto t0 = Clock::now();
  Check c;
  {
    const PeriodicWindow probe = periodic_window(6, 1.0 / 49.0);
    c.require(!probe.has_window, "threshold theta < 1/49 not enforced");
  }
  const PeriodicWindow w = periodic_window(6, 0.005);
  c.require(w.has_window, "no window at (6, 0.005)");
  if (!w.has_window) {
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    return {8, "periodic window k=6 and hole-density gap", c.ok, c.why.str(),
            secs};
  }
  const double lam = 0.5 * (w.lambda_minus + w.lambda_plus);
  const ModelParams p = ModelParams::from_theta(6, 0.005, lam);
  const auto sols = solve_two_periodic(p);
  int fixed_points = 0;
  const TwoPeriodicSolution* cycle = nullptr;
  for (const auto& s : sols) {
    fixed_points += s.is_translation_invariant ? 1 : 2;
    if (!s.is_translation_invariant) cycle = &s;
  }
  c.require(fixed_points >= 3, "fewer than 3 fixed points of phi o phi");
  c.require(cycle != nullptr, "no genuine 2-cycle");
  if (cycle) {
    c.require(two_periodic_residual(*cycle, p) <= 1e-10,
              "2-cycle residual > 1e-10");
    const auto [even0, odd0] = hole_density_gap(*cycle, p, 2);
    c.require(std::abs(even0 - odd0) > 1e-6, "hole densities not distinct");
    if (level == VerifyLevel::full) {
      // Exact enumeration with the root capped at 2 subtrees: 3^15 states.
      // Leaves of the depth-2 ball share the root's parity, so an
      // even-rooted run freezes the even law at the leaves and vice versa.
      const TreeIndex tree(6, 2, 2);
      EnumerateOptions mopt{.site_marginals = true, .prefix_table = false};
      FiniteVolumeMeasure me(
          tree, p, field_table_from_law(tree, {cycle->z_even, cycle->z_even}, p),
          mopt);
      FiniteVolumeMeasure mo(
          tree, p, field_table_from_law(tree, {cycle->z_odd, cycle->z_odd}, p),
          mopt);
      const double p_even = me.site_marginal(0)[1];
      const double p_odd = mo.site_marginal(0)[1];
      c.require(std::abs(p_even - even0) <= 1e-10,
                "even hole density disagrees with enumeration");
      c.require(std::abs(p_odd - odd0) <= 1e-10,
                "odd hole density disagrees with enumeration");
      c.require(std::abs(p_even - p_odd) > 1e-6,
                "enumerated hole densities not distinct");
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  CriterionResult r{8, "periodic window k=6 and hole-density gap", c.ok,
                    c.why.str(), secs};
  if (level == VerifyLevel::quick && r.detail.empty())
    r.detail = "enumeration cross-check skipped (quick)";
  return r;
}

// ---- criterion 9: path construction k=2 ----
CriterionResult c9() {
  const auto t0 = Clock::now();
  Check c;
  const ModelParams p = ModelParams::from_theta(2, 0.2, 6.0);
  const auto pairs = solve_offdiagonal_k2(p);
  c.require(pairs.size() == 1, "no off-diagonal pair at (2, 0.2, 6)");
  const double x1 = std::min(pairs[0].x, pairs[0].y);
  const double x2 = std::max(pairs[0].x, pairs[0].y);
  const double bound = 2.0 * lipschitz_constant(0.2) + 1e-6;

  const PathFieldResult mid =
      solve_path_field(make_path_spec(0.5, 10, 2), p, 1e-10);
  c.require(mid.final_residual <= 1e-10, "interior residual > 1e-10");
  c.require(mid.observed_contraction <= bound,
            "contraction " + std::to_string(mid.observed_contraction) +
                " above 2L bound");
  for (std::size_t i = 0; i < mid.field.h_plus.size(); ++i) {
    const double ex = std::exp(mid.field.h_plus[i]);
    const double ey = std::exp(mid.field.h_minus[i]);
    c.require(ex >= x1 * (1.0 - 1e-12) && ex <= x2 * (1.0 + 1e-12) &&
                  ey >= x1 * (1.0 - 1e-12) && ey <= x2 * (1.0 + 1e-12),
              "field leaves [x1*, x2*]");
    if (!c.ok) break;
  }

  c.require(distinguish_paths(0.25, 0.75, p, 8) > 1e-6,
            "paths 0.25 and 0.75 indistinguishable");

  // Extreme coordinates reproduce the two extreme TISGM fields: t = 1 puts
  // everything on Gamma_1 exactly; t = 0 needs the path tie-break flipped.
  const PathFieldResult at1 =
      solve_path_field(make_path_spec(1.0, 8, 2), p, 1e-10);
  const PathFieldResult at0 = solve_path_field(
      make_path_spec(0.0, 8, 2, PathSide::gamma2), p, 1e-10);
  for (std::size_t i = 0; i < at1.field.h_plus.size(); ++i) {
    c.require(std::abs(at1.field.h_plus[i] - std::log(x2)) <= 1e-12 &&
                  std::abs(at1.field.h_minus[i] - std::log(x1)) <= 1e-12,
              "t=1 field is not the x2*-side TISGM");
    c.require(std::abs(at0.field.h_plus[i] - std::log(x1)) <= 1e-12 &&
                  std::abs(at0.field.h_minus[i] - std::log(x2)) <= 1e-12,
              "t=0 field is not the x1*-side TISGM");
    if (!c.ok) break;
  }
  // Default tie-break at t=0: the single path leaf perturbs the root only
  // through depth-many contractions.
  const PathFieldResult at0_default =
      solve_path_field(make_path_spec(0.0, 10, 2), p, 1e-10);
  c.require(std::abs(at0_default.field.h_plus[0] - std::log(x1)) <= 1e-3,
            "t=0 root field far from the x1*-side TISGM");
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  return {9, "path fields: contraction, envelope, distinctness, extremes",
          c.ok, c.why.str(), secs};
}

// ---- criterion 10: randomized property suites ----
CriterionResult c10() {
  const auto t0 = Clock::now();
  Check c;
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> uh(-30.0, 30.0);
  std::uniform_real_distribution<double> uth01(1e-6, 1.0 - 1e-6);
  std::uniform_real_distribution<double> uth(0.0, 3.0);
  std::uniform_real_distribution<double> ulog(-2.0, 2.0);
  std::uniform_int_distribution<int> uk(2, 8);

  int swap_bad = 0, range_bad = 0, lip_bad = 0;
  for (int i = 0; i < 10000; ++i) {
    // Swap-equivariance of the recursion map.
    const ModelParams p = ModelParams::from_theta(uk(rng), uth(rng),
                                                  std::pow(10.0, ulog(rng)));
    const BoundaryLawPair bl{std::pow(10.0, ulog(rng)),
                             std::pow(10.0, ulog(rng))};
    const BoundaryLawPair ab = recursion_map(bl, p);
    const BoundaryLawPair ba = recursion_map({bl.y, bl.x}, p);
    if (ab.x != ba.y || ab.y != ba.x) ++swap_bad;

    // F-range (theta, 1) for theta < 1.
    const double th = uth01(rng);
    const double F = eval_F(std::pow(10.0, ulog(rng)),
                            std::pow(10.0, ulog(rng)), th);
    if (!(F > th && F < 1.0)) ++range_bad;

    // Lipschitz bound on f by central finite differences.
    const double hp = uh(rng), hm = uh(rng);
    const double L = lipschitz_constant(th);
    const double d = 1e-5;
    const double dfx =
        (eval_f(hp + d, hm, th) - eval_f(hp - d, hm, th)) / (2.0 * d);
    const double dfy =
        (eval_f(hp, hm + d, th) - eval_f(hp, hm - d, th)) / (2.0 * d);
    if (std::abs(dfx) > L + 1e-6 || std::abs(dfy) > L + 1e-6) ++lip_bad;
  }
  c.require(swap_bad == 0, std::to_string(swap_bad) + " swap violations");
  c.require(range_bad == 0, std::to_string(range_bad) + " F-range violations");
  c.require(lip_bad == 0, std::to_string(lip_bad) + " Lipschitz violations");

  // Monotone envelope trajectories; iterate_bounds throws on any
  // non-monotone step, so surviving >= 1e4 steps is the property.
  std::uniform_real_distribution<double> uferro(0.0, 0.999);
  long steps = 0;
  int runs_bad = 0;
  for (int i = 0; i < 200; ++i) {
    const ModelParams p = ModelParams::from_theta(uk(rng), uferro(rng),
                                                  std::pow(10.0, ulog(rng)));
    try {
      const BracketQuadruple q = iterate_bounds(p, 2000);
      steps += q.iterations;
    } catch (const std::exception&) {
      ++runs_bad;
    }
  }
  c.require(runs_bad == 0,
            std::to_string(runs_bad) + " non-monotone envelope runs");
  c.require(steps >= 10000, "fewer than 1e4 monotone envelope steps");
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  return {10, "randomized property suites (1e4 instances each)", c.ok,
          c.why.str(), secs};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(VerifyLevel level) {
  std::vector<CriterionResult> out;
  out.push_back(c1());
  out.push_back(c2());
  out.push_back(c3());
  out.push_back(c4());
  out.push_back(c5());
  out.push_back(c6());
  out.push_back(c7());
  out.push_back(c8(level));
  out.push_back(c9());
  out.push_back(c10());
  return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

}  // namespace wr
