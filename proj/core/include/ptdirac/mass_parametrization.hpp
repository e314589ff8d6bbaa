#pragma once

// Mass maps for the gamma5-mass Dirac theory.
//
// The mass pair (m1, m2) fixes the physical mass m = sqrt(m1^2 - m2^2) and
// the upper bound m <= m_max = m1^2 / (2 |m2|). Inverting the bound gives two
// branches for (m1, m2) at fixed (m, m_max): the ordinary branch, which
// reduces to the standard Dirac mass as m_max -> infinity, and the exotic
// branch, which has no such limit. Dimensionless ratios are
// nu = m / m_max, nu1 = m1 / m_max, nu2 = m2 / m_max.

#include <optional>
#include <vector>

namespace ptdirac {

class MassParams {
 public:
  /// Throws std::invalid_argument unless both values are finite and m1 >= 0.
  /// m1 = 0 is allowed only together with m2 = 0 (the massless point).
  MassParams(double m1, double m2);

  double m1() const noexcept { return m1_; }
  double m2() const noexcept { return m2_; }

  /// sqrt(m1^2 - m2^2); empty when m1^2 < m2^2.
  std::optional<double> m() const noexcept;
  /// m1^2 / (2 |m2|); empty on the Hermitian axis m2 = 0.
  std::optional<double> m_max() const noexcept;
  /// artanh(m2 / m1); empty unless |m2| < m1.
  std::optional<double> alpha() const noexcept;
  /// arcsin(|m2| / m1) in [0, pi/2]; empty unless |m2| <= m1 and m1 > 0.
  std::optional<double> theta() const noexcept;

 private:
  double m1_;
  double m2_;
};

/// Fundamental mass M and de Sitter angle mu in [0, pi/2].
class GeometricParams {
 public:
  GeometricParams(double fundamental_mass, double mu);

  double fundamental_mass() const noexcept { return M_; }
  double mu() const noexcept { return mu_; }
  /// M sin(mu).
  double m() const noexcept;
  /// Fifth momentum component on the mass shell, sqrt(M^2 - m^2) = M cos(mu).
  double p5() const noexcept;

 private:
  double M_;
  double mu_;
};

enum class BranchId { Ordinary, Exotic };

const char* to_string(BranchId branch) noexcept;

struct NuPoint {
  double nu;
  double nu1;
  double nu2;
};

/// m1^2 / (2 |m2|), or empty for m2 = 0 (no bound on the Hermitian axis).
std::optional<double> mass_bound(double m1, double m2);

/// (m cosh(alpha), m sinh(alpha)). Throws std::invalid_argument unless m > 0
/// and alpha is finite.
MassParams hyperbolic_params(double m, double alpha);

struct TanhAlphaRoots {
  double ordinary;  ///< root <= 1/sqrt(2)
  double exotic;    ///< root >= 1/sqrt(2)
};

/// Both roots t of nu = 2 t sqrt(1 - t^2), i.e. t^2 = (1 -+ sqrt(1 - nu^2)) / 2.
/// Throws std::domain_error for nu outside [0, 1].
TanhAlphaRoots tanh_alpha_branches(double nu);

/// nu2 = 1 -+ sqrt(1 - nu^2), nu1 = sqrt(2 nu2); the upper sign is the
/// ordinary branch. Throws std::domain_error for nu outside [0, 1].
NuPoint branch_point(double nu, BranchId branch);

/// (2M sin(mu/2), 2M sin^2(mu/2)). Throws std::invalid_argument unless M > 0
/// and mu in [0, pi/2].
MassParams geometric_ordinary(double fundamental_mass, double mu);

/// (2M cos(mu/2), 2M cos^2(mu/2)); same physical mass as the ordinary partner.
MassParams geometric_exotic(double fundamental_mass, double mu);

struct Fig1Row {
  double alpha;
  double nu;
  double nu1;
  double nu2;
};

/// nu1 = 2 tanh(alpha), nu2 = 2 tanh^2(alpha), nu = 2 sinh(alpha) / cosh^2(alpha).
/// Throws std::invalid_argument for negative or non-finite grid values.
std::vector<Fig1Row> fig1_curves(const std::vector<double>& alpha_grid);

struct Fig2Row {
  double nu;
  double nu1;  ///< ordinary
  double nu2;  ///< ordinary
  double nu3;  ///< exotic partner of nu1
  double nu4;  ///< exotic partner of nu2
};

/// Throws std::domain_error for grid values outside [0, 1].
std::vector<Fig2Row> fig2_curves(const std::vector<double>& nu_grid);

/// alpha at which nu(alpha) peaks: artanh(1/sqrt(2)) = asinh(1).
double maximon_alpha() noexcept;

}  // namespace ptdirac
