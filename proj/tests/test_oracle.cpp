#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "wr/oracle.hpp"
#include "wr/paths.hpp"
#include "wr/periodic.hpp"
#include "wr/tisgm.hpp"

using namespace wr;

namespace {

BoundaryFieldTable zero_fields(const TreeIndex& t) {
  return BoundaryFieldTable(
      static_cast<std::size_t>(t.shell_size(t.depth())), {0.0, 0.0, 0.0});
}

}  // namespace

TEST_CASE("theta = 1 with zero fields decouples the sites") {
  const ModelParams p = ModelParams::from_theta(2, 1.0, 1.7);
  const TreeIndex tree(2, 2, 3);
  const FiniteVolumeMeasure mu(tree, p, zero_fields(tree));
  const double p0 = 1.0 / (1.0 + 2.0 * p.lambda);
  for (std::int64_t v = 0; v < tree.num_vertices(); ++v) {
    const auto m = mu.site_marginal(v);
    CHECK(m[1] == doctest::Approx(p0).epsilon(1e-12));
    CHECK(m[0] == doctest::Approx(p.lambda * p0).epsilon(1e-12));
  }
}

TEST_CASE("plus-minus exchange symmetry under zero fields") {
  for (double th : {0.0, 0.45, 2.2}) {
    const ModelParams p = ModelParams::from_theta(2, th, 0.8);
    const TreeIndex tree(2, 2, 2);
    const FiniteVolumeMeasure mu(tree, p, zero_fields(tree));
    for (std::int64_t v = 0; v < tree.num_vertices(); ++v) {
      const auto m = mu.site_marginal(v);
      CHECK(m[0] == doctest::Approx(m[2]).epsilon(1e-12));
    }
  }
}

TEST_CASE("probabilities sum to one and match the accessor") {
  const ModelParams p = ModelParams::from_theta(2, 0.5, 1.3);
  const TreeIndex tree(2, 1, 3);
  const ModelParams hc = ModelParams::hard_core(2, 1.3);
  for (const ModelParams& q : {p, hc}) {
    const FiniteVolumeMeasure mu(tree, q, zero_fields(tree));
    const std::int64_t nv = tree.num_vertices();
    std::vector<int8_t> spins(static_cast<std::size_t>(nv));
    double total = 0.0;
    long states = 1;
    for (std::int64_t i = 0; i < nv; ++i) states *= 3;
    for (long idx = 0; idx < states; ++idx) {
      long rem = idx;
      for (std::int64_t v = 0; v < nv; ++v) {
        spins[static_cast<std::size_t>(v)] = static_cast<int8_t>(rem % 3 - 1);
        rem /= 3;
      }
      total += mu.probability(spins);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("spin flip plus law swap leaves probabilities invariant") {
  const ModelParams p = ModelParams::hard_core(2, 3.0);
  const auto pairs = solve_offdiagonal_k2(p);
  REQUIRE(pairs.size() == 1);
  const TreeIndex tree(2, 1, 3);
  const FiniteVolumeMeasure mu_xy(tree, p,
                                  field_table_from_law(tree, pairs[0], p));
  const FiniteVolumeMeasure mu_yx(
      tree, p, field_table_from_law(tree, {pairs[0].y, pairs[0].x}, p));
  const std::int64_t nv = tree.num_vertices();
  std::vector<int8_t> s(static_cast<std::size_t>(nv)), f(s);
  long states = 1;
  for (std::int64_t i = 0; i < nv; ++i) states *= 3;
  for (long idx = 0; idx < states; ++idx) {
    long rem = idx;
    for (std::int64_t v = 0; v < nv; ++v) {
      s[static_cast<std::size_t>(v)] = static_cast<int8_t>(rem % 3 - 1);
      f[static_cast<std::size_t>(v)] = static_cast<int8_t>(-s[static_cast<std::size_t>(v)]);
      rem /= 3;
    }
    CHECK(mu_xy.probability(s) == doctest::Approx(mu_yx.probability(f)).epsilon(1e-12));
  }
}

TEST_CASE("hard-core forbidden configurations have probability exactly zero") {
  const ModelParams p = ModelParams::hard_core(2, 2.0);
  const TreeIndex tree(2, 1, 2);
  const FiniteVolumeMeasure mu(tree, p, zero_fields(tree));
  // Root +1 with a -1 child is forbidden.
  std::vector<int8_t> bad = {1, -1, 0};
  CHECK(mu.probability(bad) == 0.0);
  std::vector<int8_t> ok = {1, 0, 1};
  CHECK(mu.probability(ok) > 0.0);
}

TEST_CASE("boundary-law marginal agrees with enumeration") {
  const ModelParams p = ModelParams::from_theta(2, 0.5, 1.3);
  const double xs = solve_diagonal(p)[0];
  const BoundaryLawPair bl{xs, xs};
  const TreeIndex tree(2, 2, 3);
  const FiniteVolumeMeasure mu(tree, p, field_table_from_law(tree, bl, p));
  const auto law_m = marginal_from_boundary_law(bl, p, 3);
  const auto root_m = mu.site_marginal(0);
  for (int q = 0; q < 3; ++q)
    CHECK(root_m[static_cast<std::size_t>(q)] ==
          doctest::Approx(law_m[static_cast<std::size_t>(q)]).epsilon(1e-10));

  // Asymmetric hard-core law.
  const ModelParams p3 = ModelParams::hard_core(2, 3.0);
  const auto pairs = solve_offdiagonal_k2(p3);
  REQUIRE(pairs.size() == 1);
  const FiniteVolumeMeasure mu3(tree, p3,
                                field_table_from_law(tree, pairs[0], p3));
  const auto law3 = marginal_from_boundary_law(pairs[0], p3, 3);
  const auto root3 = mu3.site_marginal(0);
  for (int q = 0; q < 3; ++q)
    CHECK(root3[static_cast<std::size_t>(q)] ==
          doctest::Approx(law3[static_cast<std::size_t>(q)]).epsilon(1e-10));
}

TEST_CASE("marginal formula sanity") {
  const ModelParams p = ModelParams::from_theta(3, 1.0, 2.0);
  const auto m = marginal_from_boundary_law({2.0, 2.0}, p, 4);
  CHECK(m[1] == doctest::Approx(1.0 / (1.0 + 2.0 * p.lambda)).epsilon(1e-14));
  CHECK(m[0] == doctest::Approx(m[2]).epsilon(1e-14));

  // Unverified laws are refused.
  const ModelParams hp = ModelParams::hard_core(2, 3.0);
  CHECK_THROWS_AS(marginal_from_boundary_law({1.0, 2.0}, hp, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      marginal_from_two_periodic(1.0, 2.0, Parity::even, hp, 3),
      std::invalid_argument);
}

TEST_CASE("state-space size guard") {
  const ModelParams p = ModelParams::from_theta(2, 0.5, 1.0);
  CHECK_THROWS_AS(FiniteVolumeMeasure(TreeIndex(2, 4, 3), p,
                                      zero_fields(TreeIndex(2, 4, 3))),
                  std::invalid_argument);
}

TEST_CASE("compatibility residual: exact fields pass, perturbed fields fail") {
  const ModelParams p = ModelParams::from_theta(2, 0.5, 1.3);
  const double xs = solve_diagonal(p)[0];
  const TreeIndex tree(2, 2, 3);
  FieldAssignment fa =
      FieldAssignment::constant(tree, std::log(xs), std::log(xs));
  CHECK(check_compatibility(p, fa, 3) <= 1e-12);

  // theta = 1: any consistent constant field.
  const ModelParams p1 = ModelParams::from_theta(2, 1.0, 2.0);
  FieldAssignment f1 = FieldAssignment::constant(tree, std::log(p1.lambda),
                                                 std::log(p1.lambda));
  CHECK(check_compatibility(p1, f1, 3) <= 1e-12);

  FieldAssignment bad = fa;
  bad.h_plus[static_cast<std::size_t>(tree.shell_begin(2)) + 1] += 0.1;
  CHECK(check_compatibility(p, bad, 3) > 1e-4);
}

TEST_CASE("a sign error in the recursion is caught by the compatibility check") {
  // Mutation smoke test: recompute the interior shell with f evaluated at
  // swapped arguments (the classic sign slip) and feed it to the oracle.
  const ModelParams p = ModelParams::from_theta(2, 0.5, 1.3);
  const double xs = solve_diagonal(p)[0];
  const ModelParams p_off = ModelParams::hard_core(2, 3.0);
  const auto pairs = solve_offdiagonal_k2(p_off);
  const TreeIndex tree(2, 2, 3);
  FieldAssignment fa(tree);
  const double hx = std::log(pairs[0].x), hy = std::log(pairs[0].y);
  for (std::int64_t v = 0; v < tree.num_vertices(); ++v) {
    const auto vi = static_cast<std::size_t>(v);
    if (tree.level_of(v) == 2) {
      fa.h_plus[vi] = hx;
      fa.h_minus[vi] = hy;
    } else {
      // Broken recursion: arguments swapped in f.
      double sp = std::log(p_off.lambda), sm = std::log(p_off.lambda);
      for (int c = 0; c < 2; ++c) {
        sp += eval_f(hy, hx, p_off.theta);  // should be (hx, hy)
        sm += eval_f(hx, hy, p_off.theta);
      }
      fa.h_plus[vi] = sp;
      fa.h_minus[vi] = sm;
    }
  }
  CHECK(check_compatibility(p_off, fa, 3) > 1e-3);
  (void)xs;
}

TEST_CASE("marginal ordering probe") {
  const ModelParams p = ModelParams::hard_core(2, 3.0);
  const auto rep = marginal_ordering_probe(p);
  CHECK(rep.chain_ok);
  CHECK(rep.p_plus_mu1 < rep.p_plus_mu2);
  CHECK(rep.p_plus_diag >= rep.p_plus_mu1);
  CHECK(rep.p_plus_diag <= rep.p_plus_mu2);

  // The two extreme measures exchange P(+1) and P(-1) under the global
  // spin flip (which swaps the law components).
  const auto pairs = solve_offdiagonal_k2(p);
  const auto m1 = marginal_from_boundary_law(pairs[0], p, 3);
  const auto m2 =
      marginal_from_boundary_law({pairs[0].y, pairs[0].x}, p, 3);
  CHECK(m1[2] == doctest::Approx(m2[0]).epsilon(1e-14));
  CHECK(m1[0] == doctest::Approx(m2[2]).epsilon(1e-14));

  // Path measures sit inside the extreme marginals.
  const ModelParams psoft = ModelParams::from_theta(2, 0.2, 6.0);
  const auto rep2 = marginal_ordering_probe(psoft);
  CHECK(rep2.chain_ok);
  CHECK(rep2.p_plus_paths.size() == 3);
}
