#pragma once

// Phase classification of the (m1, m2) plane, equivalently (nu1, nu2).
//
//   ExoticI     m1/sqrt2 <  m2 <  m1
//   OrdinaryII   |m2|    <  m1/sqrt2
//   ExoticIII   -m1      <  m2 < -m1/sqrt2
//   BrokenPT     |m2|    >  m1
//
// plus the boundary loci m2 = +-m1/sqrt2 (maximon), |m2| = m1 (exceptional
// line) and m2 = 0 (Hermitian axis).

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace ptdirac {

enum class RegionLabel {
  ExoticI,
  OrdinaryII,
  ExoticIII,
  MaximonBoundaryUpper,
  MaximonBoundaryLower,
  HermitianAxis,
  BrokenPT,
  ExceptionalLine,
};

std::string_view to_string(RegionLabel label) noexcept;
std::optional<RegionLabel> region_from_string(std::string_view name) noexcept;

/// True for the labels that are lines rather than open regions.
bool is_boundary(RegionLabel label) noexcept;

inline constexpr double kDefaultRegionTol = 1e-9;

/// Boundary bands have half-width tol * m1. Throws std::invalid_argument
/// for m1 <= 0, negative tol, or non-finite input.
RegionLabel classify(double m1, double m2, double tol = kDefaultRegionTol);

/// theta = arcsin(|m2| / m1). Throws std::invalid_argument for theta outside
/// [0, pi/2]. theta within tol of pi/2 is the exceptional line.
RegionLabel classify_by_theta(double theta, double tol = kDefaultRegionTol);

/// Region raster over the (nu1, nu2) plane. labels is row-major with nu1 as
/// the outer (row) index: labels[i * nu2.size() + j] is the cell at
/// (nu1[i], nu2[j]).
struct RegionMask {
  std::vector<double> nu1;
  std::vector<double> nu2;
  std::vector<RegionLabel> labels;

  RegionLabel at(std::size_t i, std::size_t j) const { return labels.at(i * nu2.size() + j); }
};

/// Classifies every cell center with tol = 0. The Hermitian axis lies inside
/// region II, so cells exactly on nu2 = 0 are reported as OrdinaryII.
RegionMask fig3_mask(const std::vector<double>& nu1_grid, const std::vector<double>& nu2_grid);

inline constexpr int kFig3DefaultCells = 401;
inline constexpr double kFig3DefaultNu1Max = 2.0;
inline constexpr double kFig3DefaultNu2Max = 2.0;

/// Cell centers over nu1 in (0, nu1_max], nu2 in [-nu2_max, nu2_max].
RegionMask fig3_default_mask(int cells = kFig3DefaultCells, double nu1_max = kFig3DefaultNu1Max,
                             double nu2_max = kFig3DefaultNu2Max);

}  // namespace ptdirac
