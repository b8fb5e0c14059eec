#pragma once

// Ground truth by brute force: exact finite-volume Gibbs measures on
// small balls, the compatibility check behind the boundary-law
// recursion, and the boundary-law -> single-site-marginal formula whose
// sole justification is agreement with the enumeration.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wr/params.hpp"
#include "wr/recursion.hpp"
#include "wr/tree.hpp"

namespace wr {

// Boundary fields on the outer shell W_n, one triple per shell vertex in
// shell order; index 0 <-> spin -1, 1 <-> spin 0, 2 <-> spin +1.
using BoundaryFieldTable = std::vector<std::array<double, 3>>;

// Leaf fields realizing a boundary-law pair: h_{+1} = ln(x/lambda),
// h_{-1} = ln(y/lambda), h_0 = 0.
BoundaryFieldTable field_table_from_law(const TreeIndex& tree,
                                        const BoundaryLawPair& bl,
                                        const ModelParams& p);

inline constexpr std::int64_t kMaxEnumStates = 100000000;  // 1e8

struct EnumerateOptions {
  bool site_marginals = true;   // accumulate all single-site marginals
  bool prefix_table = false;    // accumulate the joint on V_{n-1}
};

// Exact finite-volume Gibbs measure, computed by streaming log-domain
// summation over all 3^{|V_n|} configurations.
class FiniteVolumeMeasure {
 public:
  FiniteVolumeMeasure(TreeIndex tree, ModelParams params,
                      BoundaryFieldTable fields, EnumerateOptions opt = {});

  const TreeIndex& tree() const { return tree_; }
  const ModelParams& params() const { return params_; }
  double log_partition() const { return ln_z_; }

  // Unnormalized log weight of a full configuration on V_n (spins -1/0/+1
  // in BFS vertex order); -inf marks a hard-core-forbidden configuration.
  double log_weight(std::span<const int8_t> spins) const;

  // Exact probability of a configuration; exactly 0 on forbidden ones.
  double probability(std::span<const int8_t> spins) const;

  // Single-site marginal (P(-1), P(0), P(+1)); requires site_marginals.
  std::array<double, 3> site_marginal(std::int64_t v) const;

  // Joint distribution over configurations of V_{n-1} (base-3 index, digit
  // i = spin of vertex i plus 1); requires prefix_table.
  const std::vector<double>& prefix_distribution() const;

 private:
  TreeIndex tree_;
  ModelParams params_;
  BoundaryFieldTable fields_;
  double ln_z_ = 0.0;
  std::vector<std::array<double, 3>> marginals_;
  std::vector<double> prefix_;
  bool have_marginals_ = false;
  bool have_prefix_ = false;
};

FiniteVolumeMeasure enumerate_measure(const ModelParams& p,
                                      const BoundaryFieldTable& fields,
                                      int n, int root_degree,
                                      EnumerateOptions opt = {});

// Max over configurations sigma on V_{n-1} of
//   | sum_omega mu_n(sigma omega) - mu_{n-1}(sigma) |
// where mu_n carries fa's W_n fields and mu_{n-1} carries fa's W_{n-1}
// fields.  Vanishes exactly when fa satisfies the compatibility
// recursion; order 1e-1 perturbations of a single leaf push it above
// 1e-4.
double check_compatibility(const ModelParams& p, const FieldAssignment& fa,
                           int root_degree);

// Single-site distribution mu(q) ~ lambda^{q^2} B_q^{root_degree} with
//   B_{+1} = 1 + x + theta y, B_0 = 1 + x + y, B_{-1} = 1 + theta x + y
// built from the neighbor law (x, y).  Returns {P(-1), P(0), P(+1)}.
// Refuses laws that are not verified fixed points.
std::array<double, 3> marginal_from_boundary_law(const BoundaryLawPair& bl,
                                                 const ModelParams& p,
                                                 int root_degree);

enum class Parity { even, odd };

// Root marginal of an inhomogeneous field on a rooted ball: product of
// the per-child messages built from the children's laws.
std::array<double, 3> root_marginal_from_field(const FieldAssignment& fa,
                                               const ModelParams& p);

// Same, for a 2-periodic law: a site of the given parity sees the
// opposite-parity law on all neighbors.  Refuses non-2-cycles.
std::array<double, 3> marginal_from_two_periodic(double z_even, double z_odd,
                                                 Parity site, const ModelParams& p,
                                                 int root_degree);

struct MarginalOrderingReport {
  double p_plus_mu1 = 0.0;   // law (x1*, x2*)
  double p_plus_mu2 = 0.0;   // law (x2*, x1*)
  double p_plus_diag = 0.0;  // law (x*, x*)
  std::vector<double> p_plus_periodic;
  std::vector<double> p_plus_paths;
  bool chain_ok = false;     // everything inside [p_plus_mu1, p_plus_mu2]
};

// Tests the monotone-ordering surrogate: the extreme laws give the
// smallest and largest P(sigma_0 = +1) among all measures we can build
// at this parameter point.  Rooted convention (root_degree = k).
MarginalOrderingReport marginal_ordering_probe(const ModelParams& p);

}  // namespace wr
