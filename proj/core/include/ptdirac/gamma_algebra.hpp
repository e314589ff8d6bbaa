#pragma once

// Gamma-matrix representations and the small dense complex matrix type
// shared by every other module. Only 2x2 (1+1 D) and 4x4 (3+1 D) operators
// are supported.

#include <array>
#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace ptdirac {

using Complex = std::complex<double>;

/// Dense complex square matrix of dimension 2 or 4, row-major.
///
/// Immutable value type: every operation returns a new matrix.
class OperatorMatrix {
 public:
  static constexpr int kMaxDim = 4;

  /// Throws std::invalid_argument unless dim is 2 or 4 and
  /// entries.size() == dim * dim.
  OperatorMatrix(int dim, std::span<const Complex> entries);
  OperatorMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static OperatorMatrix zero(int dim);
  static OperatorMatrix identity(int dim);
  static OperatorMatrix diagonal(std::span<const Complex> diag);

  int dim() const noexcept { return dim_; }
  std::span<const Complex> entries() const noexcept {
    return {entries_.data(), static_cast<std::size_t>(dim_ * dim_)};
  }
  const Complex& operator()(int row, int col) const noexcept {
    return entries_[static_cast<std::size_t>(row * dim_ + col)];
  }

  friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b);

 private:
  OperatorMatrix() = default;

  int dim_ = 0;
  std::array<Complex, kMaxDim * kMaxDim> entries_{};
};

// Matrix operations. Binary operations throw std::invalid_argument on a
// dimension mismatch.
OperatorMatrix multiply(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix add(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix subtract(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix scale(const OperatorMatrix& a, Complex factor);
OperatorMatrix adjoint(const OperatorMatrix& a);
OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix anticommutator(const OperatorMatrix& a, const OperatorMatrix& b);
double frobenius_norm(const OperatorMatrix& a);
Complex trace(const OperatorMatrix& a);

/// Inverse by LU with full pivoting. Throws std::domain_error when the
/// matrix is numerically singular.
OperatorMatrix inverse(const OperatorMatrix& a);

/// ||a - a^+||_F.
double hermiticity_residual(const OperatorMatrix& a);

inline OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
  return multiply(a, b);
}
inline OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
  return add(a, b);
}
inline OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) {
  return subtract(a, b);
}
inline OperatorMatrix operator*(Complex factor, const OperatorMatrix& a) {
  return scale(a, factor);
}

/// A concrete gamma-matrix representation.
///
/// dim 2 uses gamma0 = sigma_x, gamma1 = i sigma_y, gamma5 = -gamma0 gamma1
/// = sigma_z. dim 4 uses the Dirac representation with beta =
/// diag(1, 1, -1, -1) and gamma5 off-diagonal identity blocks.
/// alpha[i] = gamma0 * gamma_spatial[i].
struct GammaBasis {
  int dim;
  OperatorMatrix gamma0;
  std::vector<OperatorMatrix> gamma_spatial;
  OperatorMatrix gamma5;
  std::vector<OperatorMatrix> alpha;

  int spatial_dim() const noexcept { return static_cast<int>(gamma_spatial.size()); }
  const OperatorMatrix& beta() const noexcept { return gamma0; }
};

/// Throws std::invalid_argument for dim other than 2 or 4.
GammaBasis build_basis(int dim);

/// exp(a * gamma5) = cosh(a) + sinh(a) gamma5, exact because gamma5^2 = 1.
/// Throws std::invalid_argument for non-finite a.
OperatorMatrix gamma5_exponential(const GammaBasis& basis, double a);

}  // namespace ptdirac
