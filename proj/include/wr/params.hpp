#pragma once

// Parameter point of the three-state Widom-Rowlinson lattice gas on a
// rooted Cayley tree: branching number k, pair coupling J at inverse
// temperature beta (combined into theta = exp(-J*beta)), and activity
// lambda.  theta = 0 is the hard-core limit and is kept exact, never
// approximated by a small float.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace wr {

struct ModelParams {
  int k = 2;          // children per non-root vertex, k >= 1
  double coupling_J = 1.0;
  double beta = 1.0;  // inverse temperature, > 0 (infinite at hard core)
  double theta = 0.0; // exp(-J*beta); 0 exactly means hard core
  double lambda = 1.0;
  double activity_root = 1.0; // a = lambda^{1/k}

  bool is_hard_core() const { return theta == 0.0; }
  bool is_ferro() const { return theta < 1.0; }
  bool is_antiferro() const { return theta > 1.0; }

  // Constructs from (k, theta, lambda); (J, beta) are filled with a
  // consistent representative pair.
  static ModelParams from_theta(int k, double theta, double lambda);

  // Constructs from (k, J, beta, lambda); theta is derived.
  static ModelParams from_coupling(int k, double coupling_J, double beta,
                                   double lambda);

  // beta -> infinity limit of the ferromagnetic model (theta = 0 exactly).
  static ModelParams hard_core(int k, double lambda);
};

inline void validate_params(const ModelParams& p) {
  if (p.k < 1) throw std::invalid_argument("ModelParams: k must be >= 1");
  if (!(p.lambda > 0.0) || !std::isfinite(p.lambda))
    throw std::invalid_argument("ModelParams: lambda must be positive");
  if (!(p.theta >= 0.0) || !std::isfinite(p.theta))
    throw std::invalid_argument("ModelParams: theta must be finite and >= 0");
  const double ak = std::pow(p.activity_root, p.k);
  if (std::abs(ak - p.lambda) > 1e-14 * std::max(1.0, p.lambda))
    throw std::invalid_argument("ModelParams: a^k != lambda");
}

inline ModelParams ModelParams::from_theta(int k, double theta,
                                           double lambda) {
  ModelParams p;
  p.k = k;
  p.theta = theta;
  p.lambda = lambda;
  if (theta == 0.0) {
    p.coupling_J = 1.0;
    p.beta = std::numeric_limits<double>::infinity();
  } else if (theta == 1.0) {
    p.coupling_J = 0.0;
    p.beta = 1.0;
  } else {
    p.beta = 1.0;
    p.coupling_J = -std::log(theta);
  }
  p.activity_root = (k >= 1) ? std::pow(lambda, 1.0 / k) : lambda;
  validate_params(p);
  return p;
}

inline ModelParams ModelParams::from_coupling(int k, double coupling_J,
                                              double beta, double lambda) {
  if (!(beta > 0.0))
    throw std::invalid_argument("ModelParams: beta must be positive");
  ModelParams p = from_theta(
      k, std::isinf(beta) && coupling_J > 0 ? 0.0 : std::exp(-coupling_J * beta),
      lambda);
  p.coupling_J = coupling_J;
  p.beta = beta;
  return p;
}

inline ModelParams ModelParams::hard_core(int k, double lambda) {
  return from_theta(k, 0.0, lambda);
}

}  // namespace wr
