#include "wr/paths.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wr/tisgm.hpp"

namespace wr {

PathSpec make_path_spec(double t, int depth, int k, PathSide path_side) {
  if (!(t >= 0.0) || !(t <= 1.0))
    throw std::invalid_argument("make_path_spec: t must lie in [0, 1]");
  if (depth < 1) throw std::invalid_argument("make_path_spec: depth >= 1");
  if (k < 2) throw std::invalid_argument("make_path_spec: k >= 2");
  PathSpec ps;
  ps.t = t;
  ps.depth = depth;
  ps.k = k;
  ps.path_side = path_side;

  double frac = t;
  for (int m = 0; m < depth; ++m) {
    frac *= k;
    int d = std::min(static_cast<int>(std::floor(frac)), k - 1);
    d = std::max(d, 0);
    frac -= d;
    ps.child_choices.push_back(d);
  }

  const TreeIndex tree(k, depth, k);
  ps.side.assign(static_cast<std::size_t>(tree.num_vertices()),
                 PathSide::gamma2);
  std::vector<bool> on_path(ps.side.size(), false);
  on_path[0] = true;
  ps.side[0] = path_side;
  std::int64_t path_v = 0;
  for (int m = 0; m < depth; ++m) {
    path_v = tree.child_first(path_v) + ps.child_choices[static_cast<std::size_t>(m)];
    on_path[static_cast<std::size_t>(path_v)] = true;
    ps.side[static_cast<std::size_t>(path_v)] = path_side;
  }
  for (std::int64_t v = 1; v < tree.num_vertices(); ++v) {
    if (on_path[static_cast<std::size_t>(v)]) continue;
    const std::int64_t parent = tree.parent(v);
    if (on_path[static_cast<std::size_t>(parent)]) {
      const int level = tree.level_of(parent);
      const int j = static_cast<int>(v - tree.child_first(parent));
      const int d = ps.child_choices[static_cast<std::size_t>(level)];
      ps.side[static_cast<std::size_t>(v)] =
          j < d ? PathSide::gamma1 : PathSide::gamma2;
    } else {
      ps.side[static_cast<std::size_t>(v)] =
          ps.side[static_cast<std::size_t>(parent)];
    }
  }
  return ps;
}

double lipschitz_constant(double theta) {
  if (!(theta >= 0.0) || !std::isfinite(theta))
    throw std::domain_error("lipschitz_constant: bad theta");
  const double r = std::sqrt(theta);
  return std::abs(1.0 - r) / (1.0 + r);
}

PathFieldResult solve_path_field(const PathSpec& ps, const ModelParams& p,
                                 double tol) {
  validate_params(p);
  if (p.k != ps.k)
    throw std::invalid_argument("solve_path_field: k mismatch");
  const double theta_c = static_cast<double>(p.k - 1) / (p.k + 1);
  if (!(p.theta > 1.0 / 9.0) || !(p.theta < theta_c))
    throw std::domain_error(
        "solve_path_field: unsupported regime, needs 1/9 < theta < (k-1)/(k+1)");
  const TisgmSolutionSet set = solve_all(p);
  if (set.offdiagonal.empty())
    throw std::domain_error(
        "solve_path_field: unsupported regime, no off-diagonal pair "
        "(lambda below the critical activity)");
  const BoundaryLawPair pair = set.offdiagonal.front();
  const double h_lo = std::log(std::min(pair.x, pair.y));  // ln x1*
  const double h_hi = std::log(std::max(pair.x, pair.y));  // ln x2*

  TreeIndex tree(p.k, ps.depth, p.k);
  FieldAssignment fa(tree);
  const auto seed = [&](std::int64_t v) {
    const bool g1 = ps.side[static_cast<std::size_t>(v)] == PathSide::gamma1;
    fa.h_plus[static_cast<std::size_t>(v)] = g1 ? h_hi : h_lo;
    fa.h_minus[static_cast<std::size_t>(v)] = g1 ? h_lo : h_hi;
  };
  for (std::int64_t v = 0; v < tree.num_vertices(); ++v) seed(v);

  const double ln_lambda = std::log(p.lambda);
  const std::int64_t interior_end = tree.shell_begin(ps.depth);
  std::vector<double> np(fa.h_plus), nm(fa.h_minus);

  PathFieldResult res{std::move(fa)};
  double prev_step = -1.0;
  const int max_sweeps = 4 * ps.depth + 64;
  for (int sweep = 1; sweep <= max_sweeps; ++sweep) {
    double step = 0.0;
    for (std::int64_t v = 0; v < interior_end; ++v) {
      double sp = ln_lambda, sm = ln_lambda;
      for (std::int64_t c = tree.child_first(v); c < tree.child_last(v); ++c) {
        const auto ci = static_cast<std::size_t>(c);
        sp += eval_f(res.field.h_plus[ci], res.field.h_minus[ci], p.theta);
        sm += eval_f(res.field.h_minus[ci], res.field.h_plus[ci], p.theta);
      }
      const auto vi = static_cast<std::size_t>(v);
      step = std::max({step, std::abs(sp - res.field.h_plus[vi]),
                       std::abs(sm - res.field.h_minus[vi])});
      np[vi] = sp;
      nm[vi] = sm;
    }
    for (std::int64_t v = 0; v < interior_end; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      res.field.h_plus[vi] = np[vi];
      res.field.h_minus[vi] = nm[vi];
    }
    res.sweeps = sweep;
    if (prev_step > 1e-13 && step > 0.0)
      res.observed_contraction =
          std::max(res.observed_contraction, step / prev_step);
    prev_step = step;
    if (step < 1e-15) break;
  }

  res.final_residual = field_recursion_residual(res.field, p);
  if (res.final_residual > tol)
    throw std::runtime_error(
        "solve_path_field: did not converge, residual " +
        std::to_string(res.final_residual));
  return res;
}

double distinguish_paths(double t1, double t2, const ModelParams& p,
                         int depth, double tol) {
  const PathFieldResult a = solve_path_field(make_path_spec(t1, depth, p.k), p, tol);
  const PathFieldResult b = solve_path_field(make_path_spec(t2, depth, p.k), p, tol);
  double d = 0.0;
  for (std::size_t i = 0; i < a.field.h_plus.size(); ++i) {
    d = std::max(d, std::abs(a.field.h_plus[i] - b.field.h_plus[i]));
    d = std::max(d, std::abs(a.field.h_minus[i] - b.field.h_minus[i]));
  }
  return d;
}

}  // namespace wr
