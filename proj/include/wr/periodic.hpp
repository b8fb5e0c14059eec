#pragma once

// 2-periodic (even/odd alternating) boundary laws through the symmetric
// reduction z = phi(t), t = phi(z) with
//
//   phi(x) = lambda ((1 + (1+theta) x) / (1 + 2x))^k,
//
// plus the closed-form existence window (s-, s+) -> (lambda-, lambda+)
// where the diagonal root destabilises and a genuine 2-cycle appears.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wr/params.hpp"

namespace wr {

struct TwoPeriodicSolution {
  double z_even = 0.0;
  double z_odd = 0.0;
  bool is_translation_invariant = false;  // z_even == z_odd within 1e-10
};

// phi(x); strictly decreasing in x for theta < 1.
double eval_phi(double x, const ModelParams& p);

// Residual of the symmetric 2-periodic system for (z, t).
double two_periodic_residual(const TwoPeriodicSolution& s,
                             const ModelParams& p);

struct PeriodicWindow {
  bool has_window = false;
  double s_minus = 0.0, s_plus = 0.0;
  double lambda_minus = 0.0, lambda_plus = 0.0;
  std::string violated_hypothesis;  // set when has_window is false
};

// Existence window of non-trivial 2-cycles: requires k >= 6 and
// theta < (k^2 - 6k + 1)/(k+1)^2.
PeriodicWindow periodic_window(int k, double theta);

// kappa(x) = x ((1+2x)/(1+(1+theta)x))^k, the inverse of the diagonal
// fixed-point relation; strictly increasing for theta < 1.
double eval_kappa(double x, const ModelParams& p);

// Whether the diagonal root x* fails linear stability under phi o phi,
// i.e. 2(1+theta) x*^2 + (3 + theta - k(1-theta)) x* + 1 < 0.
bool diagonal_unstable(double x_star, const ModelParams& p);

// All fixed points of phi o phi inside the envelope bracket, the diagonal
// root flagged; a genuine 2-cycle is stored once as (z, t) with z < t.
std::vector<TwoPeriodicSolution> solve_two_periodic(const ModelParams& p);

// Single-site probability of spin 0 at an even vertex and at an odd
// vertex (in that order), for a root with `root_degree` neighbors.
std::pair<double, double> hole_density_gap(const TwoPeriodicSolution& sol,
                                           const ModelParams& p,
                                           int root_degree);

}  // namespace wr
