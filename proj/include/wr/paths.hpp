#pragma once

// Path-indexed non-translation-invariant boundary-law fields on finite
// truncations.  An infinite self-avoiding path from the root splits the
// tree into two sides; each side is frozen to one member of the extreme
// off-diagonal swap-pair at the leaves, and the interior is relaxed under
// the compatibility recursion, which contracts for theta > 1/9.

#include <cstdint>
#include <vector>

#include "wr/params.hpp"
#include "wr/recursion.hpp"
#include "wr/tree.hpp"

namespace wr {

enum class PathSide : uint8_t { gamma1, gamma2 };

struct PathSpec {
  double t = 0.5;  // path coordinate in [0, 1], base-k digit expansion
  int depth = 8;
  int k = 2;
  std::vector<int> child_choices;      // digits of t, length depth
  std::vector<PathSide> side;          // per vertex of V_depth
  PathSide path_side = PathSide::gamma1;  // tie-break for path vertices

  PathSpec flipped() const {
    PathSpec q = *this;
    for (auto& s : q.side)
      s = s == PathSide::gamma1 ? PathSide::gamma2 : PathSide::gamma1;
    q.path_side = path_side == PathSide::gamma1 ? PathSide::gamma2
                                                : PathSide::gamma1;
    return q;
  }
};

// Builds the path for coordinate t: digit d_m picks the child followed at
// depth m; vertices branching left of the path (child index < digit) land
// in Gamma_1, right of it in Gamma_2, path vertices on `path_side`.
// t = 0 makes every off-path vertex Gamma_2, t = 1 makes it Gamma_1.
PathSpec make_path_spec(double t, int depth, int k,
                        PathSide path_side = PathSide::gamma1);

// One-step Lipschitz bound |df/dx|, |df/dy| <= |1 - sqrt(theta)| / (1 + sqrt(theta)).
double lipschitz_constant(double theta);

struct PathFieldResult {
  FieldAssignment field;
  double observed_contraction = 0.0;  // max sweep-to-sweep sup-norm ratio
  double final_residual = 0.0;
  int sweeps = 0;
};

// Freezes the leaves of V_depth to (ln x2*, ln x1*) on Gamma_1 and
// (ln x1*, ln x2*) on Gamma_2 (x1* < x2* the off-diagonal pair), then
// relaxes the interior to the unique compatible field.  Requires
// 1/9 < theta < (k-1)/(k+1) and lambda above the critical activity so the
// pair exists and the update contracts.
PathFieldResult solve_path_field(const PathSpec& ps, const ModelParams& p,
                                 double tol);

// Sup-norm distance between the converged fields of two path coordinates.
double distinguish_paths(double t1, double t2, const ModelParams& p,
                         int depth, double tol = 1e-12);

}  // namespace wr
