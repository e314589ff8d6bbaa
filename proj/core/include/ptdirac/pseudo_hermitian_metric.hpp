#pragma once

// Metric operator eta = exp(a gamma5), tanh(a) = m2 / m1, intertwining the
// gamma5-mass Hamiltonian with its adjoint: eta H eta^-1 = H^+.

#include <stdexcept>

#include "ptdirac/dirac_hamiltonian.hpp"
#include "ptdirac/gamma_algebra.hpp"

namespace ptdirac {

/// No positive-definite metric of the form exp(a gamma5) exists for the
/// requested parameters (|m2| >= |m1|: exceptional line or broken phase).
class NoMetricError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct MetricOperator {
  OperatorMatrix eta;
  double alpha_exponent;
  int basis_dim;
};

/// Throws NoMetricError unless m1 > 0 and |m2| < m1.
MetricOperator metric_operator(const GammaBasis& basis, double m1, double m2);

/// ||eta H eta^-1 - H_adj||_F / max(||H||_F, eps). Diagnostic only; never
/// throws on large residuals. Throws std::domain_error if eta is singular.
double verify_intertwining(const OperatorMatrix& h, const OperatorMatrix& h_adj,
                           const OperatorMatrix& eta);

/// h = rho H rho^-1 with rho = exp((a / 2) gamma5) = eta^(1/2). Hermitian and
/// isospectral with H. Throws NoMetricError under the same conditions as
/// metric_operator.
OperatorMatrix hermitian_counterpart(const GammaBasis& basis, const Momentum& p, double m1,
                                     double m2);

}  // namespace ptdirac
