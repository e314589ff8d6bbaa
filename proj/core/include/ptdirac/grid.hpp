#pragma once

#include <vector>

namespace ptdirac {

/// `steps` evenly spaced points from `min` to `max`, both endpoints included.
/// Point i is min + i * (max - min) / (steps - 1); the last point is `max`
/// exactly. Throws std::invalid_argument unless steps >= 2, min < max and
/// both bounds are finite.
std::vector<double> linspace(double min, double max, int steps);

/// Centers of `cells` equal cells partitioning [min, max].
std::vector<double> cell_centers(double min, double max, int cells);

}  // namespace ptdirac
