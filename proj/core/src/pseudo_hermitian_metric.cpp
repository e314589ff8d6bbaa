#include "ptdirac/pseudo_hermitian_metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ptdirac {

namespace {

double metric_exponent(double m1, double m2) {
  if (!std::isfinite(m1) || !std::isfinite(m2)) {
    throw std::invalid_argument("mass parameters must be finite");
  }
  if (!(m1 > 0.0)) {
    throw NoMetricError("metric requires m1 > 0 (got m1 = " + std::to_string(m1) + ")");
  }
  if (std::abs(m2) >= m1) {
    throw NoMetricError(std::abs(m2) == m1
                            ? "|m2| = m1: exceptional line, H is not diagonalizable"
                            : "|m2| > m1: broken PT phase, spectrum is complex");
  }
  return std::atanh(m2 / m1);
}

}  // namespace

MetricOperator metric_operator(const GammaBasis& basis, double m1, double m2) {
  const double a = metric_exponent(m1, m2);
  return MetricOperator{gamma5_exponential(basis, a), a, basis.dim};
}

double verify_intertwining(const OperatorMatrix& h, const OperatorMatrix& h_adj,
                           const OperatorMatrix& eta) {
  const OperatorMatrix eta_inv = inverse(eta);
  const double residual = frobenius_norm(eta * h * eta_inv - h_adj);
  return residual / std::max(frobenius_norm(h), std::numeric_limits<double>::epsilon());
}

OperatorMatrix hermitian_counterpart(const GammaBasis& basis, const Momentum& p, double m1,
                                     double m2) {
  const double a = metric_exponent(m1, m2);
  const OperatorMatrix rho = gamma5_exponential(basis, 0.5 * a);
  const OperatorMatrix rho_inv = gamma5_exponential(basis, -0.5 * a);
  return rho * build_hamiltonian(basis, p, m1, m2).matrix * rho_inv;
}

}  // namespace ptdirac
