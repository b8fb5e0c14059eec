#include <doctest.h>

#include <cmath>
#include <random>

#include "wr/brackets.hpp"
#include "wr/periodic.hpp"
#include "wr/recursion.hpp"
#include "wr/tisgm.hpp"
#include "wr/tree.hpp"

using namespace wr;

TEST_CASE("eval_phi basics") {
  const ModelParams p1 = ModelParams::from_theta(4, 1.0, 2.5);
  CHECK(eval_phi(0.3, p1) == 2.5);
  CHECK(eval_phi(17.0, p1) == 2.5);

  const ModelParams p = ModelParams::from_theta(3, 0.4, 2.0);
  const double xs = solve_diagonal(p)[0];
  CHECK(eval_phi(xs, p) == doctest::Approx(xs).epsilon(1e-12));

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ul(-3.0, 3.0);
  for (int i = 0; i < 1000; ++i) {
    const double a = std::pow(10.0, ul(rng));
    const double b = a * 1.01;
    CHECK(eval_phi(a, p) > eval_phi(b, p));
    // Range of phi.
    CHECK(eval_phi(a, p) > p.lambda * std::pow(0.5 * 1.4, 3));
    CHECK(eval_phi(a, p) < p.lambda);
  }
}

TEST_CASE("kappa is strictly increasing for theta < 1") {
  const ModelParams p = ModelParams::from_theta(6, 0.01, 1.0);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> ul(-3.0, 3.0);
  for (int i = 0; i < 1000; ++i) {
    const double a = std::pow(10.0, ul(rng));
    CHECK(eval_kappa(a * 1.001, p) > eval_kappa(a, p));
  }
}

TEST_CASE("periodic_window hypotheses") {
  const PeriodicWindow w5 = periodic_window(5, 0.001);
  CHECK(!w5.has_window);
  CHECK(w5.violated_hypothesis == "k^2 - 6k + 1 < 0 (needs k >= 6)");

  const PeriodicWindow w6 = periodic_window(6, 1.0 / 49.0);
  CHECK(!w6.has_window);  // threshold is strict

  const PeriodicWindow w = periodic_window(6, 0.01);
  CHECK(w.has_window);
  CHECK(0.0 < w.s_minus);
  CHECK(w.s_minus < w.s_plus);
  CHECK(w.lambda_minus < w.lambda_plus);

  CHECK_THROWS_AS(periodic_window(1, 0.0), std::invalid_argument);
}

TEST_CASE("window consistency with the instability inequality") {
  const PeriodicWindow w = periodic_window(6, 0.005);
  REQUIRE(w.has_window);
  const double mid = 0.5 * (w.lambda_minus + w.lambda_plus);
  const ModelParams inside = ModelParams::from_theta(6, 0.005, mid);
  const double xs_in = solve_diagonal(inside)[0];
  CHECK(xs_in > w.s_minus);
  CHECK(xs_in < w.s_plus);
  CHECK(diagonal_unstable(xs_in, inside));

  const ModelParams outside =
      ModelParams::from_theta(6, 0.005, w.lambda_plus * 1.5);
  CHECK(!diagonal_unstable(solve_diagonal(outside)[0], outside));
}

TEST_CASE("solve_two_periodic inside and outside the window") {
  // Outside (k=4): only the diagonal fixed point.
  const ModelParams p4 = ModelParams::from_theta(4, 0.1, 2.0);
  const auto s4 = solve_two_periodic(p4);
  REQUIRE(s4.size() == 1);
  CHECK(s4[0].is_translation_invariant);

  const PeriodicWindow w = periodic_window(6, 0.005);
  REQUIRE(w.has_window);
  const double mid = 0.5 * (w.lambda_minus + w.lambda_plus);
  const ModelParams p = ModelParams::from_theta(6, 0.005, mid);
  const auto sols = solve_two_periodic(p);
  int cycles = 0;
  bool have_diag = false;
  for (const auto& s : sols) {
    if (s.is_translation_invariant) {
      have_diag = true;
      continue;
    }
    ++cycles;
    CHECK(two_periodic_residual(s, p) <= 1e-10);
    CHECK(s.z_even < s.z_odd);
    // Cycle symmetry: the relabeled pair solves the same system.
    CHECK(two_periodic_residual({s.z_odd, s.z_even, false}, p) <= 1e-10);
    // 2-cycles lie inside the envelope bracket.
    const BracketQuadruple q = iterate_bounds(p);
    CHECK(s.z_even >= q.z1_lo * (1 - 1e-9));
    CHECK(s.z_odd <= q.z1_hi * (1 + 1e-9));
  }
  CHECK(have_diag);
  CHECK(cycles >= 1);

  // A 2-periodic field on a finite ball satisfies the full recursion.
  const auto& cyc = *std::find_if(sols.begin(), sols.end(),
                                  [](const TwoPeriodicSolution& s) {
                                    return !s.is_translation_invariant;
                                  });
  TreeIndex tree(6, 3, 6);
  FieldAssignment fa(tree);
  for (std::int64_t v = 0; v < tree.num_vertices(); ++v) {
    const bool even = tree.level_of(v) % 2 == 0;
    const double z = even ? cyc.z_even : cyc.z_odd;
    fa.h_plus[static_cast<std::size_t>(v)] = std::log(z);
    fa.h_minus[static_cast<std::size_t>(v)] = std::log(z);
  }
  CHECK(field_recursion_residual(fa, p) <= 1e-12);
}

TEST_CASE("hole density gap") {
  const ModelParams p4 = ModelParams::from_theta(4, 0.1, 2.0);
  const auto diag = solve_two_periodic(p4).front();
  const auto [e0, o0] = hole_density_gap(diag, p4, 5);
  CHECK(e0 == o0);  // diagonal: even and odd laws coincide

  const PeriodicWindow w = periodic_window(6, 0.005);
  const double mid = 0.5 * (w.lambda_minus + w.lambda_plus);
  const ModelParams p = ModelParams::from_theta(6, 0.005, mid);
  const auto sols = solve_two_periodic(p);
  const auto cyc = *std::find_if(sols.begin(), sols.end(),
                                 [](const TwoPeriodicSolution& s) {
                                   return !s.is_translation_invariant;
                                 });
  const auto [pe, po] = hole_density_gap(cyc, p, 7);
  CHECK(std::abs(pe - po) > 1e-6);
  // Swapping even and odd laws swaps the two densities.
  const auto [qe, qo] =
      hole_density_gap({cyc.z_odd, cyc.z_even, false}, p, 7);
  CHECK(pe == doctest::Approx(qo).epsilon(1e-15));
  CHECK(po == doctest::Approx(qe).epsilon(1e-15));
}
