#include "ptdirac/mass_parametrization.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace ptdirac {

namespace {

void require_nu(double nu) {
  if (!(nu >= 0.0 && nu <= 1.0)) {
    throw std::domain_error("nu = " + std::to_string(nu) +
                            " outside [0, 1] (bound violated or PT broken)");
  }
}

void require_geometric(double M, double mu) {
  if (!std::isfinite(M) || !(M > 0.0)) {
    throw std::invalid_argument("fundamental mass must be positive and finite");
  }
  if (!(mu >= 0.0 && mu <= std::numbers::pi / 2)) {
    throw std::invalid_argument("de Sitter angle must lie in [0, pi/2]");
  }
}

// 1 - sqrt(1 - nu^2) without cancellation at small nu.
double one_minus_root(double nu) {
  const double s = std::sqrt((1.0 - nu) * (1.0 + nu));
  return nu * nu / (1.0 + s);
}

}  // namespace

MassParams::MassParams(double m1, double m2) : m1_(m1), m2_(m2) {
  if (!std::isfinite(m1) || !std::isfinite(m2)) {
    throw std::invalid_argument("mass parameters must be finite");
  }
  if (m1 < 0.0) throw std::invalid_argument("m1 must be non-negative");
  if (m1 == 0.0 && m2 != 0.0) throw std::invalid_argument("m1 = 0 requires m2 = 0");
}

std::optional<double> MassParams::m() const noexcept {
  const double sq = (m1_ - m2_) * (m1_ + m2_);
  if (sq < 0.0) return std::nullopt;
  return std::sqrt(sq);
}

std::optional<double> MassParams::m_max() const noexcept { return mass_bound(m1_, m2_); }

std::optional<double> MassParams::alpha() const noexcept {
  if (!(std::abs(m2_) < m1_)) return std::nullopt;
  return std::atanh(m2_ / m1_);
}

std::optional<double> MassParams::theta() const noexcept {
  if (!(m1_ > 0.0) || std::abs(m2_) > m1_) return std::nullopt;
  return std::asin(std::abs(m2_) / m1_);
}

GeometricParams::GeometricParams(double fundamental_mass, double mu)
    : M_(fundamental_mass), mu_(mu) {
  require_geometric(fundamental_mass, mu);
}

double GeometricParams::m() const noexcept { return M_ * std::sin(mu_); }

double GeometricParams::p5() const noexcept { return M_ * std::cos(mu_); }

const char* to_string(BranchId branch) noexcept {
  return branch == BranchId::Ordinary ? "ordinary" : "exotic";
}

std::optional<double> mass_bound(double m1, double m2) {
  if (m2 == 0.0) return std::nullopt;
  return m1 * m1 / (2.0 * std::abs(m2));
}

MassParams hyperbolic_params(double m, double alpha) {
  if (!std::isfinite(m) || !(m > 0.0)) throw std::invalid_argument("m must be positive");
  if (!std::isfinite(alpha)) throw std::invalid_argument("alpha must be finite");
  return MassParams(m * std::cosh(alpha), m * std::sinh(alpha));
}

TanhAlphaRoots tanh_alpha_branches(double nu) {
  require_nu(nu);
  const double lower_sq = 0.5 * one_minus_root(nu);
  const double upper_sq = 1.0 - lower_sq;
  return {std::sqrt(lower_sq), std::sqrt(upper_sq)};
}

NuPoint branch_point(double nu, BranchId branch) {
  require_nu(nu);
  const double lower = one_minus_root(nu);
  const double nu2 = branch == BranchId::Ordinary ? lower : 2.0 - lower;
  return {nu, std::sqrt(2.0 * nu2), nu2};
}

MassParams geometric_ordinary(double fundamental_mass, double mu) {
  require_geometric(fundamental_mass, mu);
  const double s = std::sin(0.5 * mu);
  return MassParams(2.0 * fundamental_mass * s, 2.0 * fundamental_mass * s * s);
}

MassParams geometric_exotic(double fundamental_mass, double mu) {
  require_geometric(fundamental_mass, mu);
  const double c = std::cos(0.5 * mu);
  return MassParams(2.0 * fundamental_mass * c, 2.0 * fundamental_mass * c * c);
}

std::vector<Fig1Row> fig1_curves(const std::vector<double>& alpha_grid) {
  std::vector<Fig1Row> rows;
  rows.reserve(alpha_grid.size());
  for (double a : alpha_grid) {
    if (!std::isfinite(a) || a < 0.0) {
      throw std::invalid_argument("fig1 alpha grid values must be finite and non-negative");
    }
    const double t = std::tanh(a);
    const double c = std::cosh(a);
    rows.push_back({a, 2.0 * std::sinh(a) / (c * c), 2.0 * t, 2.0 * t * t});
  }
  return rows;
}

std::vector<Fig2Row> fig2_curves(const std::vector<double>& nu_grid) {
  std::vector<Fig2Row> rows;
  rows.reserve(nu_grid.size());
  for (double nu : nu_grid) {
    const NuPoint ord = branch_point(nu, BranchId::Ordinary);
    const NuPoint exo = branch_point(nu, BranchId::Exotic);
    rows.push_back({nu, ord.nu1, ord.nu2, exo.nu1, exo.nu2});
  }
  return rows;
}

double maximon_alpha() noexcept { return std::asinh(1.0); }

}  // namespace ptdirac
