#include "wr/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "wr/paths.hpp"
#include "wr/periodic.hpp"
#include "wr/tisgm.hpp"

namespace wr {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Streaming log-sum-exp accumulator; exact-zero terms are skipped so the
// hard-core support stays exact.
struct LogSumAcc {
  double m = kNegInf;
  double s = 0.0;

  void add(double lw) {
    if (lw == kNegInf) return;
    if (lw <= m) {
      s += std::exp(lw - m);
    } else {
      s = (m == kNegInf) ? 1.0 : s * std::exp(m - lw) + 1.0;
      m = lw;
    }
  }
  double value() const { return s == 0.0 ? kNegInf : m + std::log(s); }
};

// theta^{1(q qp = -1)} in the log domain; -inf at the hard core.
inline double edge_log_weight(int q, int qp, const ModelParams& p) {
  if (q * qp != -1) return 0.0;
  return p.theta == 0.0 ? kNegInf : std::log(p.theta);
}

std::int64_t checked_state_count(std::int64_t n_vertices) {
  std::int64_t states = 1;
  for (std::int64_t i = 0; i < n_vertices; ++i) {
    if (states > kMaxEnumStates / 3)
      throw std::invalid_argument(
          "enumerate_measure: 3^" + std::to_string(n_vertices) +
          " configurations exceed the cap of " +
          std::to_string(kMaxEnumStates) + " states");
    states *= 3;
  }
  return states;
}

}  // namespace

BoundaryFieldTable field_table_from_law(const TreeIndex& tree,
                                        const BoundaryLawPair& bl,
                                        const ModelParams& p) {
  validate_law(bl);
  const double ln_lambda = std::log(p.lambda);
  const std::array<double, 3> h = {std::log(bl.y) - ln_lambda, 0.0,
                                   std::log(bl.x) - ln_lambda};
  return BoundaryFieldTable(
      static_cast<std::size_t>(tree.shell_size(tree.depth())), h);
}

FiniteVolumeMeasure::FiniteVolumeMeasure(TreeIndex tree, ModelParams params,
                                         BoundaryFieldTable fields,
                                         EnumerateOptions opt)
    : tree_(std::move(tree)), params_(std::move(params)),
      fields_(std::move(fields)) {
  validate_params(params_);
  const std::int64_t nv = tree_.num_vertices();
  checked_state_count(nv);
  const int n = tree_.depth();
  if (static_cast<std::int64_t>(fields_.size()) != tree_.shell_size(n))
    throw std::invalid_argument(
        "FiniteVolumeMeasure: field table must cover the outer shell");

  const double ln_lambda = std::log(params_.lambda);
  const std::int64_t leaf_begin = tree_.shell_begin(n);
  const std::int64_t prefix_count = leaf_begin;

  LogSumAcc z_acc;
  std::vector<std::array<LogSumAcc, 3>> site_acc;
  if (opt.site_marginals) site_acc.resize(static_cast<std::size_t>(nv));
  std::vector<LogSumAcc> prefix_acc;
  if (opt.prefix_table && n >= 1) {
    std::int64_t tbl = 1;
    for (std::int64_t i = 0; i < prefix_count; ++i) tbl *= 3;
    prefix_acc.resize(static_cast<std::size_t>(tbl));
  }

  std::vector<int8_t> spin(static_cast<std::size_t>(nv), 0);
  // Depth-first over vertices in BFS order; the parent spin is always
  // already assigned.  Hard-core-forbidden branches are pruned exactly.
  auto dfs = [&](auto&& self, std::int64_t v, double lw) -> void {
    if (v == nv) {
      z_acc.add(lw);
      if (opt.site_marginals)
        for (std::int64_t i = 0; i < nv; ++i)
          site_acc[static_cast<std::size_t>(i)]
                  [static_cast<std::size_t>(spin[static_cast<std::size_t>(i)] + 1)]
                      .add(lw);
      if (!prefix_acc.empty()) {
        std::int64_t idx = 0;
        for (std::int64_t i = prefix_count - 1; i >= 0; --i)
          idx = idx * 3 + (spin[static_cast<std::size_t>(i)] + 1);
        prefix_acc[static_cast<std::size_t>(idx)].add(lw);
      }
      return;
    }
    const std::int64_t parent = tree_.parent(v);
    const bool leaf = v >= leaf_begin;
    for (int q = -1; q <= 1; ++q) {
      double w = lw + (q == 0 ? 0.0 : ln_lambda);
      if (parent >= 0) {
        const double e =
            edge_log_weight(q, spin[static_cast<std::size_t>(parent)], params_);
        if (e == kNegInf) continue;
        w += e;
      }
      if (leaf)
        w += fields_[static_cast<std::size_t>(v - leaf_begin)]
                    [static_cast<std::size_t>(q + 1)];
      spin[static_cast<std::size_t>(v)] = static_cast<int8_t>(q);
      self(self, v + 1, w);
    }
  };
  dfs(dfs, 0, 0.0);

  ln_z_ = z_acc.value();
  if (opt.site_marginals) {
    marginals_.resize(static_cast<std::size_t>(nv));
    for (std::int64_t i = 0; i < nv; ++i)
      for (int q = 0; q < 3; ++q) {
        const double lw = site_acc[static_cast<std::size_t>(i)]
                                  [static_cast<std::size_t>(q)].value();
        marginals_[static_cast<std::size_t>(i)][static_cast<std::size_t>(q)] =
            lw == kNegInf ? 0.0 : std::exp(lw - ln_z_);
      }
    have_marginals_ = true;
  }
  if (!prefix_acc.empty()) {
    prefix_.resize(prefix_acc.size());
    for (std::size_t i = 0; i < prefix_acc.size(); ++i) {
      const double lw = prefix_acc[i].value();
      prefix_[i] = lw == kNegInf ? 0.0 : std::exp(lw - ln_z_);
    }
    have_prefix_ = true;
  }
}

double FiniteVolumeMeasure::log_weight(std::span<const int8_t> spins) const {
  const std::int64_t nv = tree_.num_vertices();
  if (static_cast<std::int64_t>(spins.size()) != nv)
    throw std::invalid_argument("log_weight: wrong configuration size");
  const double ln_lambda = std::log(params_.lambda);
  const std::int64_t leaf_begin = tree_.shell_begin(tree_.depth());
  double lw = 0.0;
  for (std::int64_t v = 0; v < nv; ++v) {
    const int q = spins[static_cast<std::size_t>(v)];
    if (q != 0) lw += ln_lambda;
    const std::int64_t parent = tree_.parent(v);
    if (parent >= 0) {
      const double e =
          edge_log_weight(q, spins[static_cast<std::size_t>(parent)], params_);
      if (e == kNegInf) return kNegInf;
      lw += e;
    }
    if (v >= leaf_begin)
      lw += fields_[static_cast<std::size_t>(v - leaf_begin)]
                   [static_cast<std::size_t>(q + 1)];
  }
  return lw;
}

double FiniteVolumeMeasure::probability(std::span<const int8_t> spins) const {
  const double lw = log_weight(spins);
  return lw == kNegInf ? 0.0 : std::exp(lw - ln_z_);
}

std::array<double, 3> FiniteVolumeMeasure::site_marginal(std::int64_t v) const {
  if (!have_marginals_)
    throw std::logic_error("site_marginal: not accumulated");
  return marginals_.at(static_cast<std::size_t>(v));
}

const std::vector<double>& FiniteVolumeMeasure::prefix_distribution() const {
  if (!have_prefix_)
    throw std::logic_error("prefix_distribution: not accumulated");
  return prefix_;
}

FiniteVolumeMeasure enumerate_measure(const ModelParams& p,
                                      const BoundaryFieldTable& fields,
                                      int n, int root_degree,
                                      EnumerateOptions opt) {
  return FiniteVolumeMeasure(TreeIndex(p.k, n, root_degree), p, fields, opt);
}

double check_compatibility(const ModelParams& p, const FieldAssignment& fa,
                           int root_degree) {
  const int n = fa.tree.depth();
  if (n < 2) throw std::invalid_argument("check_compatibility: need depth >= 2");
  if (fa.tree.root_degree() != root_degree)
    throw std::invalid_argument("check_compatibility: root_degree mismatch");
  const double ln_lambda = std::log(p.lambda);

  const auto table_from_shell = [&](const TreeIndex& tr, int shell) {
    BoundaryFieldTable t(static_cast<std::size_t>(tr.shell_size(shell)));
    for (std::int64_t v = fa.tree.shell_begin(shell);
         v < fa.tree.shell_end(shell); ++v) {
      const auto i = static_cast<std::size_t>(v - fa.tree.shell_begin(shell));
      const auto vi = static_cast<std::size_t>(v);
      t[i] = {fa.h_minus[vi] - ln_lambda, 0.0, fa.h_plus[vi] - ln_lambda};
    }
    return t;
  };

  EnumerateOptions big_opt{.site_marginals = false, .prefix_table = true};
  const FiniteVolumeMeasure mu_n(TreeIndex(p.k, n, root_degree), p,
                                 table_from_shell(fa.tree, n), big_opt);

  const TreeIndex small_tree(p.k, n - 1, root_degree);
  EnumerateOptions small_opt{.site_marginals = false, .prefix_table = false};
  const FiniteVolumeMeasure mu_prev(small_tree, p,
                                    table_from_shell(small_tree, n - 1),
                                    small_opt);

  const std::vector<double>& joint = mu_n.prefix_distribution();
  const std::int64_t nv = small_tree.num_vertices();
  std::vector<int8_t> spins(static_cast<std::size_t>(nv), -1);
  double worst = 0.0;
  for (std::size_t idx = 0; idx < joint.size(); ++idx) {
    std::size_t rem = idx;
    for (std::int64_t v = 0; v < nv; ++v) {
      spins[static_cast<std::size_t>(v)] = static_cast<int8_t>(rem % 3 - 1);
      rem /= 3;
    }
    worst = std::max(worst, std::abs(joint[idx] - mu_prev.probability(spins)));
  }
  return worst;
}

namespace {

std::array<double, 3> marginal_from_B(const std::array<double, 3>& b,
                                      const ModelParams& p, int root_degree) {
  const double ln_lambda = std::log(p.lambda);
  std::array<double, 3> lw = {ln_lambda + root_degree * std::log(b[0]),
                              root_degree * std::log(b[1]),
                              ln_lambda + root_degree * std::log(b[2])};
  const double m = std::max({lw[0], lw[1], lw[2]});
  std::array<double, 3> out{};
  double z = 0.0;
  for (int q = 0; q < 3; ++q) {
    out[static_cast<std::size_t>(q)] = std::exp(lw[static_cast<std::size_t>(q)] - m);
    z += out[static_cast<std::size_t>(q)];
  }
  for (auto& v : out) v /= z;
  return out;
}

std::array<double, 3> B_vector(double x, double y, double theta) {
  return {theta == 0.0 ? 1.0 + y : 1.0 + theta * x + y,  // spin -1
          1.0 + x + y,                                   // spin 0
          theta == 0.0 ? 1.0 + x : 1.0 + x + theta * y}; // spin +1
}

}  // namespace

std::array<double, 3> marginal_from_boundary_law(const BoundaryLawPair& bl,
                                                 const ModelParams& p,
                                                 int root_degree) {
  if (exy_residual(bl, p) > 1e-8)
    throw std::invalid_argument(
        "marginal_from_boundary_law: law is not a verified fixed point");
  return marginal_from_B(B_vector(bl.x, bl.y, p.theta), p, root_degree);
}

std::array<double, 3> marginal_from_two_periodic(double z_even, double z_odd,
                                                 Parity site,
                                                 const ModelParams& p,
                                                 int root_degree) {
  const auto rel = [](double a, double b) {
    return std::abs(a - b) / std::max({1e-300, std::abs(a), std::abs(b)});
  };
  if (rel(z_even, law_update(z_odd, z_odd, p)) > 1e-8 ||
      rel(z_odd, law_update(z_even, z_even, p)) > 1e-8)
    throw std::invalid_argument(
        "marginal_from_two_periodic: not a verified 2-cycle");
  const double nb = site == Parity::even ? z_odd : z_even;
  return marginal_from_B(B_vector(nb, nb, p.theta), p, root_degree);
}

std::array<double, 3> root_marginal_from_field(const FieldAssignment& fa,
                                               const ModelParams& p) {
  // P(q) ~ lambda^{q^2} prod_{j in S(0)} M_q(x_j, y_j) with M the
  // per-child message built from the child's law.
  const double ln_lambda = std::log(p.lambda);
  std::array<double, 3> lw = {0.0, 0.0, 0.0};
  lw[0] = lw[2] = ln_lambda;
  for (std::int64_t c = fa.tree.child_first(0); c < fa.tree.child_last(0);
       ++c) {
    const auto ci = static_cast<std::size_t>(c);
    const double x = std::exp(fa.h_plus[ci]);
    const double y = std::exp(fa.h_minus[ci]);
    const auto b = B_vector(x, y, p.theta);
    for (int q = 0; q < 3; ++q)
      lw[static_cast<std::size_t>(q)] += std::log(b[static_cast<std::size_t>(q)]);
  }
  const double m = std::max({lw[0], lw[1], lw[2]});
  std::array<double, 3> out{};
  double z = 0.0;
  for (int q = 0; q < 3; ++q) {
    out[static_cast<std::size_t>(q)] = std::exp(lw[static_cast<std::size_t>(q)] - m);
    z += out[static_cast<std::size_t>(q)];
  }
  for (auto& v : out) v /= z;
  return out;
}

MarginalOrderingReport marginal_ordering_probe(const ModelParams& p) {
  const TisgmSolutionSet set = solve_all(p);
  if (set.offdiagonal.empty())
    throw std::invalid_argument(
        "marginal_ordering_probe: no off-diagonal pair at this point");
  const BoundaryLawPair mu1 = set.offdiagonal.front();       // (x1*, x2*)
  const BoundaryLawPair mu2{mu1.y, mu1.x};                   // (x2*, x1*)

  MarginalOrderingReport rep;
  const int rd = p.k;  // rooted convention throughout the probe
  rep.p_plus_mu1 = marginal_from_boundary_law(mu1, p, rd)[2];
  rep.p_plus_mu2 = marginal_from_boundary_law(mu2, p, rd)[2];
  rep.p_plus_diag =
      marginal_from_boundary_law({set.diagonal.front(), set.diagonal.front()},
                                 p, rd)[2];

  if (p.theta < 1.0) {
    for (const auto& s : solve_two_periodic(p)) {
      if (s.is_translation_invariant) continue;
      rep.p_plus_periodic.push_back(
          marginal_from_two_periodic(s.z_even, s.z_odd, Parity::even, p, rd)[2]);
    }
  }
  const double theta_c = static_cast<double>(p.k - 1) / (p.k + 1);
  if (p.theta > 1.0 / 9.0 && p.theta < theta_c) {
    for (double t : {0.25, 0.5, 0.75}) {
      const PathSpec ps = make_path_spec(t, 8, p.k);
      const PathFieldResult r = solve_path_field(ps, p, 1e-10);
      rep.p_plus_paths.push_back(root_marginal_from_field(r.field, p)[2]);
    }
  }

  const double lo = rep.p_plus_mu1 - 1e-9;
  const double hi = rep.p_plus_mu2 + 1e-9;
  bool ok = rep.p_plus_diag >= lo && rep.p_plus_diag <= hi;
  for (double v : rep.p_plus_periodic) ok = ok && v >= lo && v <= hi;
  for (double v : rep.p_plus_paths) ok = ok && v >= lo && v <= hi;
  rep.chain_ok = ok;
  return rep;
}

}  // namespace wr
