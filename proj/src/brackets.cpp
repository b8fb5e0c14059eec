#include "wr/brackets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wr {

std::string to_string(UniquenessStatus s) {
  return s == UniquenessStatus::certified_unique ? "CERTIFIED_UNIQUE"
                                                 : "INCONCLUSIVE";
}

BracketQuadruple iterate_bounds(const ModelParams& p, int max_iter,
                                double tol) {
  validate_params(p);
  if (!(p.theta < 1.0))
    throw std::invalid_argument(
        "iterate_bounds: envelope monotonicity needs theta < 1");
  if (max_iter < 1) throw std::invalid_argument("iterate_bounds: max_iter < 1");

  BracketQuadruple q;
  const double seed_lo =
      p.theta == 0.0 ? 1e-300
                     : p.lambda * std::exp(p.k * std::log(p.theta));
  q.z1_lo = q.z2_lo = seed_lo;
  q.z1_hi = q.z2_hi = p.lambda;

  const double slack = 1e-13;
  for (int it = 1; it <= max_iter; ++it) {
    BracketQuadruple n = q;
    n.z1_lo = law_update(q.z1_lo, q.z2_hi, p);
    n.z1_hi = law_update(q.z1_hi, q.z2_lo, p);
    n.z2_lo = law_update(q.z2_lo, q.z1_hi, p);
    n.z2_hi = law_update(q.z2_hi, q.z1_lo, p);

    // Monotone trajectories: lower bounds never drop, upper never rise.
    const auto below = [&](double a, double b) {
      return a <= b + slack * std::max(1.0, std::abs(b));
    };
    if (!below(q.z1_lo, n.z1_lo) || !below(q.z2_lo, n.z2_lo) ||
        !below(n.z1_hi, q.z1_hi) || !below(n.z2_hi, q.z2_hi))
      throw std::runtime_error("iterate_bounds: monotonicity violated");

    const double step = std::max(
        {std::abs(n.z1_lo - q.z1_lo), std::abs(n.z1_hi - q.z1_hi),
         std::abs(n.z2_lo - q.z2_lo), std::abs(n.z2_hi - q.z2_hi)});
    q = n;
    q.iterations = it;
    if (step < tol * std::max(1.0, q.z1_hi)) {
      q.converged = true;
      break;
    }
  }
  return q;
}

double bracket_residual(const BracketQuadruple& q, const ModelParams& p) {
  const auto rel = [](double a, double b) {
    return std::abs(a - b) / std::max({1e-300, std::abs(a), std::abs(b)});
  };
  return std::max({rel(q.z1_lo, law_update(q.z1_lo, q.z2_hi, p)),
                   rel(q.z1_hi, law_update(q.z1_hi, q.z2_lo, p)),
                   rel(q.z2_lo, law_update(q.z2_lo, q.z1_hi, p)),
                   rel(q.z2_hi, law_update(q.z2_hi, q.z1_lo, p))});
}

UniquenessCertificate uniqueness_certificate(const ModelParams& p,
                                             double tol) {
  UniquenessCertificate cert;
  cert.quadruple = iterate_bounds(p);
  cert.gap1 = cert.quadruple.z1_hi - cert.quadruple.z1_lo;
  cert.gap2 = cert.quadruple.z2_hi - cert.quadruple.z2_lo;
  if (!cert.quadruple.converged) {
    cert.detail = "envelope iteration did not converge";
    return cert;
  }
  const double scale1 = std::max(1.0, cert.quadruple.z1_hi);
  const double scale2 = std::max(1.0, cert.quadruple.z2_hi);
  const bool collapsed1 = cert.gap1 <= tol * scale1;
  const bool collapsed2 = cert.gap2 <= tol * scale2;
  // The two gaps collapse together or not at all.
  if (collapsed1 != collapsed2 &&
      std::abs(cert.gap1 / scale1 - cert.gap2 / scale2) > 1e-9)
    throw std::runtime_error(
        "uniqueness_certificate: one-sided envelope collapse");
  if (collapsed1 && collapsed2) {
    cert.status = UniquenessStatus::certified_unique;
    cert.detail = "envelope collapsed to a single law";
  } else {
    cert.detail = "envelope gap may contain multiple laws";
  }
  return cert;
}

}  // namespace wr
