#pragma once

// Scalar root location used by every solver in this project: sign-change
// scan on a grid, bisection to ~1e-13 relative, one Newton polish step
// with a numeric derivative.  Roots closer than the merge tolerance are
// collapsed and flagged as (near-)double; bisection cannot separate a
// genuine tangency anyway.

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace wr {

struct ScalarRoot {
  double x = 0.0;
  bool merged_double = false;
};

struct RootScanOptions {
  int cells = 256;
  bool log_spaced = true;
  double bisect_rel_tol = 1e-13;
  double merge_rel_tol = 1e-7;
};

namespace detail {

inline double bisect_bracket(const std::function<double(double)>& fn,
                             double lo, double hi, double flo, double rel_tol) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= rel_tol * std::max(1.0, std::abs(mid))) return mid;
    const double fm = fn(mid);
    if (fm == 0.0) return mid;
    if ((flo < 0.0) == (fm < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline double newton_polish(const std::function<double(double)>& fn, double x,
                            double lo, double hi) {
  const double h = std::max(1e-7 * std::abs(x), 1e-12);
  const double d = (fn(x + h) - fn(x - h)) / (2.0 * h);
  if (d == 0.0 || !std::isfinite(d)) return x;
  const double x1 = x - fn(x) / d;
  if (!(x1 > lo) || !(x1 < hi) || !std::isfinite(x1)) return x;
  return std::abs(fn(x1)) <= std::abs(fn(x)) ? x1 : x;
}

}  // namespace detail

// All sign-change roots of fn on [lo, hi].  Tangencies that never change
// sign are invisible to the scan; callers with structural knowledge must
// add them explicitly.
inline std::vector<double> find_roots_scan(
    const std::function<double(double)>& fn, double lo, double hi,
    const RootScanOptions& opt = {}) {
  if (!(hi > lo)) return {};
  if (opt.cells < 1) throw std::invalid_argument("find_roots_scan: cells < 1");
  const bool log_ok = opt.log_spaced && lo > 0.0;
  const double llo = log_ok ? std::log(lo) : lo;
  const double lhi = log_ok ? std::log(hi) : hi;
  std::vector<double> roots;
  double xa = lo;
  double fa = fn(xa);
  for (int i = 1; i <= opt.cells; ++i) {
    const double t = llo + (lhi - llo) * i / opt.cells;
    const double xb = (i == opt.cells) ? hi : (log_ok ? std::exp(t) : t);
    const double fb = fn(xb);
    if (fa == 0.0) {
      roots.push_back(xa);
    } else if (fb != 0.0 && (fa < 0.0) != (fb < 0.0)) {
      double r = detail::bisect_bracket(fn, xa, xb, fa, opt.bisect_rel_tol);
      r = detail::newton_polish(fn, r, xa, xb);
      roots.push_back(r);
    }
    xa = xb;
    fa = fb;
  }
  if (fa == 0.0) roots.push_back(xa);
  return roots;
}

// Collapses roots closer than merge_rel_tol (relative to max(1,|x|)).
inline std::vector<ScalarRoot> merge_close_roots(std::vector<double> xs,
                                                 double merge_rel_tol = 1e-7) {
  std::sort(xs.begin(), xs.end());
  std::vector<ScalarRoot> out;
  for (double x : xs) {
    if (!out.empty() &&
        x - out.back().x <= merge_rel_tol * std::max(1.0, std::abs(x))) {
      out.back().x = 0.5 * (out.back().x + x);
      out.back().merged_double = true;
    } else {
      out.push_back({x, false});
    }
  }
  return out;
}

}  // namespace wr
