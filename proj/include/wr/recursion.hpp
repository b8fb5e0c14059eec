#pragma once

// Elementary recursion maps of the boundary-law tree recursion.
//
//   f(x, y, theta) = ln((1 + e^x + theta e^y) / (1 + e^x + e^y))
//   F(x, y, theta) = (1 + x + theta y) / (1 + x + y)
//
// f acts on log-domain fields, F on linear-domain laws; they are the
// same map in two gauges.  A translation-invariant boundary law is a
// positive pair (x, y) fixed under
//
//   x' = lambda F(x, y, theta)^k,   y' = lambda F(y, x, theta)^k.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wr/params.hpp"
#include "wr/tree.hpp"

namespace wr {

namespace detail {
// ln(1 + e^a + c*e^b), stable for |a|, |b| up to ~700.  c >= 0; the c-term
// is dropped exactly when c == 0 so the hard-core limit is not polluted
// by 0 * inf.
inline double log1pe_pair(double a, double b, double c) {
  double m = std::max(0.0, a);
  if (c > 0.0) m = std::max(m, b);
  double s = std::exp(-m) + std::exp(a - m);
  if (c > 0.0) s += c * std::exp(b - m);
  return m + std::log(s);
}
}  // namespace detail

// f(hp, hm, theta); exactly 0 when theta == 1.
inline double eval_f(double hp, double hm, double theta) {
  if (!std::isfinite(hp) || !std::isfinite(hm))
    throw std::domain_error("eval_f: non-finite field");
  if (!(theta >= 0.0) || !std::isfinite(theta))
    throw std::domain_error("eval_f: theta must be finite and >= 0");
  return detail::log1pe_pair(hp, hm, theta) -
         detail::log1pe_pair(hp, hm, 1.0);
}

// F(x, y, theta) for positive x, y; lies in (theta, 1) for theta < 1 and
// in (1, theta) for theta > 1.
inline double eval_F(double x, double y, double theta) {
  if (!(x > 0.0) || !(y > 0.0))
    throw std::domain_error("eval_F: x and y must be positive");
  if (!(theta >= 0.0) || !std::isfinite(theta))
    throw std::domain_error("eval_F: theta must be finite and >= 0");
  if (x > 1e300 || y > 1e300)
    return std::exp(eval_f(std::log(x), std::log(y), theta));
  const double num = theta == 0.0 ? 1.0 + x : 1.0 + x + theta * y;
  return num / (1.0 + x + y);
}

struct BoundaryLawPair {
  double x = 1.0;
  double y = 1.0;
};

inline void validate_law(const BoundaryLawPair& bl) {
  if (!(bl.x > 0.0) || !(bl.y > 0.0) || !std::isfinite(bl.x) ||
      !std::isfinite(bl.y))
    throw std::domain_error("BoundaryLawPair: components must be positive");
}

// lambda * F(x, y, theta)^k evaluated through the log domain; k-th powers
// of F overflow/underflow linear doubles long before the log does.
inline double law_update(double x, double y, const ModelParams& p) {
  const double lf = eval_f(std::log(x), std::log(y), p.theta);
  const double v = p.lambda * std::exp(p.k * lf);
  return std::max(v, std::numeric_limits<double>::min());
}

inline BoundaryLawPair recursion_map(const BoundaryLawPair& bl,
                                     const ModelParams& p) {
  validate_law(bl);
  return {law_update(bl.x, bl.y, p), law_update(bl.y, bl.x, p)};
}

// Relative residual of the fixed-point system for (x, y).
inline double exy_residual(const BoundaryLawPair& bl, const ModelParams& p) {
  const BoundaryLawPair im = recursion_map(bl, p);
  const double rx =
      std::abs(bl.x - im.x) / std::max({1e-300, std::abs(bl.x), std::abs(im.x)});
  const double ry =
      std::abs(bl.y - im.y) / std::max({1e-300, std::abs(bl.y), std::abs(im.y)});
  return std::max(rx, ry);
}

// Residual of the off-diagonal factor equation, scaled by (1+x+y)^k:
//   1 = lambda (1-theta)/(1+x+y) * sum_{j=0}^{k-1} Fp^{k-1-j} Fm^j
// The sign structure makes it unsatisfiable for theta > 1 (positive left
// side, negative right side).
inline double offdiag_factor_rhs(const BoundaryLawPair& bl,
                                 const ModelParams& p) {
  validate_law(bl);
  const double fp = eval_F(bl.x, bl.y, p.theta);
  const double fm = eval_F(bl.y, bl.x, p.theta);
  double sum = 0.0;
  for (int j = 0; j < p.k; ++j)
    sum += std::pow(fp, p.k - 1 - j) * std::pow(fm, j);
  return p.lambda * (1.0 - p.theta) / (1.0 + bl.x + bl.y) * sum;
}

inline double offdiag_factor_residual(const BoundaryLawPair& bl,
                                      const ModelParams& p) {
  return std::abs(1.0 - offdiag_factor_rhs(bl, p));
}

// Log-domain boundary-law fields on a finite ball.
struct FieldAssignment {
  TreeIndex tree;
  std::vector<double> h_plus;   // \tilde h_{+,i}
  std::vector<double> h_minus;  // \tilde h_{-,i}

  explicit FieldAssignment(TreeIndex t)
      : tree(std::move(t)),
        h_plus(static_cast<std::size_t>(tree.num_vertices()), 0.0),
        h_minus(static_cast<std::size_t>(tree.num_vertices()), 0.0) {}

  static FieldAssignment constant(TreeIndex t, double hp, double hm) {
    FieldAssignment fa(std::move(t));
    std::fill(fa.h_plus.begin(), fa.h_plus.end(), hp);
    std::fill(fa.h_minus.begin(), fa.h_minus.end(), hm);
    return fa;
  }
};

// Max residual of the compatibility recursion over non-leaf vertices:
//   h_{+,i} = ln(lambda) + sum_{j in S(i)} f(h_{+,j}, h_{-,j}, theta)
// and the same with + and - exchanged.
inline double field_recursion_residual(const FieldAssignment& fa,
                                       const ModelParams& p) {
  if (fa.tree.depth() < 1)
    throw std::domain_error("field_recursion_residual: need depth >= 1");
  const double ln_lambda = std::log(p.lambda);
  double worst = 0.0;
  for (std::int64_t v = 0; v < fa.tree.num_vertices(); ++v) {
    if (fa.tree.is_leaf(v)) continue;
    double sp = ln_lambda, sm = ln_lambda;
    for (std::int64_t c = fa.tree.child_first(v); c < fa.tree.child_last(v);
         ++c) {
      const auto ci = static_cast<std::size_t>(c);
      sp += eval_f(fa.h_plus[ci], fa.h_minus[ci], p.theta);
      sm += eval_f(fa.h_minus[ci], fa.h_plus[ci], p.theta);
    }
    const auto vi = static_cast<std::size_t>(v);
    worst = std::max(worst, std::abs(fa.h_plus[vi] - sp));
    worst = std::max(worst, std::abs(fa.h_minus[vi] - sm));
  }
  return worst;
}

}  // namespace wr
