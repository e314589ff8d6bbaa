#include "ptdirac/region_classifier.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "ptdirac/grid.hpp"

namespace ptdirac {

namespace {

constexpr std::array<std::pair<RegionLabel, std::string_view>, 8> kNames{{
    {RegionLabel::ExoticI, "ExoticI"},
    {RegionLabel::OrdinaryII, "OrdinaryII"},
    {RegionLabel::ExoticIII, "ExoticIII"},
    {RegionLabel::MaximonBoundaryUpper, "MaximonBoundaryUpper"},
    {RegionLabel::MaximonBoundaryLower, "MaximonBoundaryLower"},
    {RegionLabel::HermitianAxis, "HermitianAxis"},
    {RegionLabel::BrokenPT, "BrokenPT"},
    {RegionLabel::ExceptionalLine, "ExceptionalLine"},
}};

}  // namespace

std::string_view to_string(RegionLabel label) noexcept {
  for (const auto& [l, name] : kNames) {
    if (l == label) return name;
  }
  return "Unknown";
}

std::optional<RegionLabel> region_from_string(std::string_view name) noexcept {
  for (const auto& [l, n] : kNames) {
    if (n == name) return l;
  }
  return std::nullopt;
}

bool is_boundary(RegionLabel label) noexcept {
  switch (label) {
    case RegionLabel::MaximonBoundaryUpper:
    case RegionLabel::MaximonBoundaryLower:
    case RegionLabel::HermitianAxis:
    case RegionLabel::ExceptionalLine:
      return true;
    default:
      return false;
  }
}

RegionLabel classify(double m1, double m2, double tol) {
  if (!std::isfinite(m1) || !std::isfinite(m2) || !std::isfinite(tol)) {
    throw std::invalid_argument("classify: inputs must be finite");
  }
  if (!(m1 > 0.0)) throw std::invalid_argument("classify: m1 must be positive");
  if (tol < 0.0) throw std::invalid_argument("classify: tolerance must be non-negative");

  const double band = tol * m1;
  const double abs_m2 = std::abs(m2);
  const double maximon = m1 / std::numbers::sqrt2;

  if (abs_m2 <= band) return RegionLabel::HermitianAxis;
  if (std::abs(abs_m2 - m1) <= band) return RegionLabel::ExceptionalLine;
  if (abs_m2 > m1) return RegionLabel::BrokenPT;
  if (std::abs(m2 - maximon) <= band) return RegionLabel::MaximonBoundaryUpper;
  if (std::abs(m2 + maximon) <= band) return RegionLabel::MaximonBoundaryLower;
  if (abs_m2 < maximon) return RegionLabel::OrdinaryII;
  return m2 > 0.0 ? RegionLabel::ExoticI : RegionLabel::ExoticIII;
}

RegionLabel classify_by_theta(double theta, double tol) {
  constexpr double quarter = std::numbers::pi / 4;
  constexpr double half = std::numbers::pi / 2;
  if (!(theta >= 0.0 && theta <= half)) {
    throw std::invalid_argument("classify_by_theta: theta must lie in [0, pi/2]");
  }
  if (theta <= tol) return RegionLabel::HermitianAxis;
  if (std::abs(theta - quarter) <= tol) return RegionLabel::MaximonBoundaryUpper;
  if (half - theta <= tol) return RegionLabel::ExceptionalLine;
  return theta < quarter ? RegionLabel::OrdinaryII : RegionLabel::ExoticI;
}

RegionMask fig3_mask(const std::vector<double>& nu1_grid, const std::vector<double>& nu2_grid) {
  RegionMask mask{nu1_grid, nu2_grid, {}};
  mask.labels.reserve(nu1_grid.size() * nu2_grid.size());
  for (double nu1 : nu1_grid) {
    for (double nu2 : nu2_grid) {
      RegionLabel label = classify(nu1, nu2, 0.0);
      if (label == RegionLabel::HermitianAxis) label = RegionLabel::OrdinaryII;
      mask.labels.push_back(label);
    }
  }
  return mask;
}

RegionMask fig3_default_mask(int cells, double nu1_max, double nu2_max) {
  return fig3_mask(cell_centers(0.0, nu1_max, cells), cell_centers(-nu2_max, nu2_max, cells));
}

}  // namespace ptdirac
