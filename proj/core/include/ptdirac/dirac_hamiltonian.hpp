#pragma once

// The Dirac Hamiltonian with a gamma5-dependent mass term,
//
//   H = alpha . p + beta (m1 + m2 gamma5),
//
// its adjoint, and its spectrum. Natural units (c = hbar = 1).

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ptdirac/gamma_algebra.hpp"

namespace ptdirac {

/// Spatial momentum; 1 component for the 2x2 basis, 3 for the 4x4 basis.
class Momentum {
 public:
  /// Throws std::invalid_argument on non-finite components or an empty list.
  explicit Momentum(std::vector<double> components);

  static Momentum along_x(double p, int spatial_dim);

  std::span<const double> components() const noexcept { return components_; }
  std::size_t size() const noexcept { return components_.size(); }
  double magnitude() const noexcept;

 private:
  std::vector<double> components_;
};

/// Raised when the closed-form and numeric spectra disagree.
class CrossCheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Hamiltonian matrix that remembers the parameters it was built from, so
/// the spectrum can be cross-checked against the closed form.
struct DiracHamiltonian {
  OperatorMatrix matrix;
  double p_magnitude;
  double m1;
  double m2;

  /// Closed-form eigenvalue of the positive branch, sqrt(p^2 + m1^2 - m2^2).
  Complex closed_form_energy() const;
};

DiracHamiltonian build_hamiltonian(const GammaBasis& basis, const Momentum& p, double m1,
                                   double m2);

/// H^+ = alpha . p + beta (m1 - m2 gamma5).
DiracHamiltonian build_adjoint_hamiltonian(const GammaBasis& basis, const Momentum& p, double m1,
                                           double m2);

struct SpectralResult {
  /// Sorted by real part, ties broken by imaginary part.
  std::vector<Complex> eigenvalues;
  bool is_real = false;
  bool is_diagonalizable = false;
  /// (i, j) with eigenvalues[j] the conjugate partner of eigenvalues[i].
  std::vector<std::pair<std::size_t, std::size_t>> pairing;
  /// max_i |eigenvalues[pairing_i.second] - conj(eigenvalues[pairing_i.first])|.
  double conjugation_residual = 0.0;
};

inline constexpr double kDefaultRealityTol = 1e-10;
inline constexpr double kCrossCheckTol = 1e-9;

struct SpectrumOptions {
  double tol = kDefaultRealityTol;
  bool cross_check = true;
};

/// Generic dense eigen-decomposition of a 2x2 or 4x4 operator.
SpectralResult spectrum(const OperatorMatrix& h, double tol = kDefaultRealityTol);

/// As above, and (unless disabled) compares against the closed-form
/// eigenvalues +-sqrt(p^2 + m1^2 - m2^2). Throws CrossCheckError when the two
/// differ by more than kCrossCheckTol * max(1, |E|).
SpectralResult spectrum(const DiracHamiltonian& h, SpectrumOptions options = {});

/// Eigenvalues sorted by ascending real part; values whose real parts agree
/// to within a relative 1e-12 are ordered by imaginary part.
std::vector<Complex> sort_eigenvalues(std::vector<Complex> values);

/// Closed-form eigenvalues for a basis of dimension `dim`: -E and +E, each
/// repeated dim / 2 times, in sorted order.
std::vector<Complex> closed_form_spectrum(int dim, double p_magnitude, double m1, double m2);

/// (-E, +E) with E = sqrt(p^2 + m1^2 - m2^2) on the principal branch, so the
/// "+" member has Re >= 0 and Im >= 0.
std::pair<Complex, Complex> dispersion(double p_magnitude, double m1, double m2);

/// sqrt(m1^2 - m2^2); real and non-negative iff m1^2 >= m2^2.
Complex physical_mass(double m1, double m2);

/// True when every momentum in `momenta` yields a real spectrum. Include the
/// rest frame to test the whole-theory (unbroken PT) criterion m1^2 >= m2^2.
bool spectrum_real_over(const GammaBasis& basis, std::span<const Momentum> momenta, double m1,
                        double m2, double tol = kDefaultRealityTol);

}  // namespace ptdirac
