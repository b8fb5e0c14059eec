#pragma once

// Monotone envelope bounds for all boundary-law fields (homogeneous or
// not): the four-component system
//
//   z1- = lambda F(z1-, z2+)^k     z1+ = lambda F(z1+, z2-)^k
//   z2- = lambda F(z2-, z1+)^k     z2+ = lambda F(z2+, z1-)^k
//
// iterated from the a-priori box [lambda theta^k, lambda]^2.  Lower
// components only increase, upper components only decrease, so the limit
// quadruple brackets every solution; a collapsed quadruple certifies a
// unique splitting Gibbs measure.

#include <string>

#include "wr/params.hpp"
#include "wr/recursion.hpp"

namespace wr {

struct BracketQuadruple {
  double z1_lo = 0.0, z1_hi = 0.0;
  double z2_lo = 0.0, z2_hi = 0.0;
  int iterations = 0;
  bool converged = false;

  bool contains(const BoundaryLawPair& bl) const {
    return bl.x >= z1_lo && bl.x <= z1_hi && bl.y >= z2_lo && bl.y <= z2_hi;
  }
};

// Runs the monotone envelope iteration.  theta must be < 1; at theta = 0
// the lower seed lambda*theta^k degenerates to 0 and is replaced by
// 1e-300, which the first step lifts to a genuine positive bound.
BracketQuadruple iterate_bounds(const ModelParams& p, int max_iter = 100000,
                                double tol = 1e-12);

// Fixed-point residual of the quadruple under the envelope system.
double bracket_residual(const BracketQuadruple& q, const ModelParams& p);

enum class UniquenessStatus { certified_unique, inconclusive };

struct UniquenessCertificate {
  UniquenessStatus status = UniquenessStatus::inconclusive;
  BracketQuadruple quadruple;
  double gap1 = 0.0;  // z1_hi - z1_lo
  double gap2 = 0.0;
  std::string detail;
};

// One-directional certificate: a collapsed envelope implies a unique
// boundary law; a fat envelope decides nothing.
UniquenessCertificate uniqueness_certificate(const ModelParams& p,
                                             double tol = 1e-8);

std::string to_string(UniquenessStatus s);

}  // namespace wr
