#include "ptdirac/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace ptdirac {

std::vector<double> linspace(double min, double max, int steps) {
  if (!std::isfinite(min) || !std::isfinite(max)) {
    throw std::invalid_argument("grid bounds must be finite");
  }
  if (steps < 2) throw std::invalid_argument("grid needs at least 2 steps");
  if (!(min < max)) throw std::invalid_argument("grid requires min < max");
  std::vector<double> out(static_cast<std::size_t>(steps));
  const double width = max - min;
  for (int i = 0; i < steps; ++i) {
    out[static_cast<std::size_t>(i)] = min + width * static_cast<double>(i) / (steps - 1);
  }
  out.back() = max;
  return out;
}

std::vector<double> cell_centers(double min, double max, int cells) {
  if (!std::isfinite(min) || !std::isfinite(max)) {
    throw std::invalid_argument("grid bounds must be finite");
  }
  if (cells < 1) throw std::invalid_argument("grid needs at least 1 cell");
  if (!(min < max)) throw std::invalid_argument("grid requires min < max");
  std::vector<double> out(static_cast<std::size_t>(cells));
  const double width = max - min;
  for (int i = 0; i < cells; ++i) {
    out[static_cast<std::size_t>(i)] = min + width * (2.0 * i + 1.0) / (2.0 * cells);
  }
  return out;
}

}  // namespace ptdirac
