#pragma once

// Translation-invariant boundary laws: all solutions of
//
//   x = lambda F(x, y, theta)^k,   y = lambda F(y, x, theta)^k,
//
// every closed-form critical value, and the phase classification with
// theorem-level provenance.

#include <optional>
#include <string>
#include <vector>

#include "wr/params.hpp"
#include "wr/recursion.hpp"

namespace wr {

enum class SolveMethod {
  closed_form_k2,
  sp_reduction_k3,
  scalar_antiferro,
  general_numeric,
};

enum class TisgmCount { one, two, three, at_least_one, at_least_three };

enum class DecidingTheorem {
  t_gt,         // antiferromagnetic case, exact 1/2/3
  t_lt,         // ferromagnetic k=2, exact
  tk3,          // ferromagnetic k=3, exact
  tkk_1,        // ferromagnetic k>=4, uniqueness region
  tkk_2,        // ferromagnetic k>=4, gap region (lower bound only)
  tkk_3,        // ferromagnetic k>=4, at least three
  hardcore_RKh, // theta = 0 classification
};

std::string to_string(SolveMethod m);
std::string to_string(TisgmCount c);
std::string to_string(DecidingTheorem t);

struct TisgmSolutionSet {
  std::vector<double> diagonal;            // roots with x == y
  std::vector<BoundaryLawPair> offdiagonal; // one representative per swap-pair
  SolveMethod method = SolveMethod::general_numeric;
  double residual = 0.0;                   // worst fixed-point residual

  // Number of boundary laws counting both members of each swap-pair.
  int num_measures() const {
    return static_cast<int>(diagonal.size()) +
           2 * static_cast<int>(offdiagonal.size());
  }
};

enum class CriticalRegime { antiferro, ferro_k2, ferro_k3, ferro_kge4 };

struct CriticalValues {
  CriticalRegime regime = CriticalRegime::ferro_kge4;
  std::optional<double> theta_cr_anti;      // 2((k+1)/(k-1))^2 - 1
  std::optional<double> lambda_cr_anti_low; // smaller antiferro curve
  std::optional<double> lambda_cr_anti_high;
  std::optional<double> theta_c;            // (k-1)/(k+1)
  std::optional<double> lambda_cr;          // ((k+1)/k)^k / (k-1-theta(k+1))
  std::optional<double> theta_c_prime;      // (k-1)/k, k >= 4
  std::optional<double> lambda_cr_prime;    // 1/(k-1-k theta), k >= 4
};

struct PhaseReport {
  TisgmCount count = TisgmCount::one;
  DecidingTheorem deciding_theorem = DecidingTheorem::t_lt;
  CriticalValues critical;
  TisgmSolutionSet solutions;
};

// All positive roots of the diagonal equation
//   x = lambda ((1 + (1+theta) x) / (1 + 2x))^k.
// Unique for theta <= 1; up to three roots for theta > 1, bracketed via
// the critical points of the scalar reduction a t = ((1+t)/(b+t))^k.
std::vector<double> solve_diagonal(const ModelParams& p);

// Closed-form off-diagonal solutions for k = 2 (empty, a tangent double
// root at lambda = lambda_cr(2), or one swap-pair representative).
std::vector<BoundaryLawPair> solve_offdiagonal_k2(const ModelParams& p);

// Off-diagonal solutions for k = 3 via the sum/product reduction
// s = u+v, p = uv in the u = x^{1/3} coordinates.
std::vector<BoundaryLawPair> solve_offdiagonal_k3(const ModelParams& p);

// Off-diagonal solutions for any k >= 2, theta < 1: 2-cycles of the
// scalar map gamma(u) = a(1+theta) - u + (u - a theta)/(1 + u^k) on
// [a theta, a].  n_starts is the sweep resolution.
std::vector<BoundaryLawPair> solve_offdiagonal_general(const ModelParams& p,
                                                       int n_starts = 512);

// Every closed-form critical value applicable at (k, theta).
CriticalValues critical_values(int k, double theta);

// Assembles diagonal + off-diagonal solutions with the method tag.
TisgmSolutionSet solve_all(const ModelParams& p);

// Phase classification; on-curve points use a relative tolerance band of
// 1e-9 around the closed-form critical lambdas.
PhaseReport classify_phase(const ModelParams& p);

inline constexpr double kCriticalBand = 1e-9;

// Exploratory scan behind the exactness conjecture for k >= 4: on each
// level set a(u,v) = a the constrained extremum of T(u,v) over u != v
// should sit on the diagonal u = v = a k/(k+1); the a at which the
// diagonal value T(u0,u0) crosses a*theta is then exactly the critical
// activity.  Never consulted by classify_phase.
struct ConjectureLevelSet {
  double a = 0.0;
  double t_diagonal = 0.0;      // limit of T along the diagonal
  double t_offdiag_best = 0.0;  // extremal T over the off-diagonal level set
  double u_at_best = 0.0;
  double v_at_best = 0.0;
  bool extremum_at_diagonal = false;
};

struct ConjectureScanReport {
  int k = 0;
  double theta = 0.0;
  std::vector<ConjectureLevelSet> levels;
  double a_critical_scan = 0.0;    // root of T_diag(a) = a*theta
  double a_critical_closed = 0.0;  // ((k+1)/k) (k-1-theta(k+1))^{-1/k}
  bool supports_conjecture = false;
};

ConjectureScanReport conjecture_scan(int k, double theta, int grid);

}  // namespace wr
