#pragma once

// Conversions between OperatorMatrix and Eigen. Private to the core library.

#include <Eigen/Dense>

#include "ptdirac/gamma_algebra.hpp"

namespace ptdirac::detail {

using EigenMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline EigenMatrix to_eigen(const OperatorMatrix& m) {
  EigenMatrix out(m.dim(), m.dim());
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

inline OperatorMatrix from_eigen(const EigenMatrix& m) {
  return OperatorMatrix(static_cast<int>(m.rows()),
                        std::span<const Complex>(m.data(), static_cast<std::size_t>(m.size())));
}

}  // namespace ptdirac::detail
