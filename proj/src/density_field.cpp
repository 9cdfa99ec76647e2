#include "pileup/density_field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace pileup {

const char* frame_name(Frame frame) {
  return frame == Frame::dimensional ? "dimensional" : "dimensionless";
}

double trapezoid_mass(const std::vector<double>& grid,
                      const std::vector<double>& values) {
  double mass = 0.0;
  for (std::size_t i = 1; i < grid.size(); ++i)
    mass += 0.5 * (values[i] + values[i - 1]) * (grid[i] - grid[i - 1]);
  return mass;
}

DensityField::DensityField(std::vector<double> grid_in,
                           std::vector<double> values_in, Frame frame_in)
    : grid(std::move(grid_in)), values(std::move(values_in)), frame(frame_in) {
  if (grid.empty() || grid.size() != values.size())
    throw std::invalid_argument("DensityField: grid/value size mismatch");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw std::invalid_argument("DensityField: grid must strictly increase");
  for (double v : values)
    if (!(v >= 0.0) || std::isnan(v))
      throw std::invalid_argument("DensityField: values must be >= 0");
  mass = trapezoid_mass(grid, values);
}

double DensityField::interpolate(double x) const {
  if (x <= grid.front()) return values.front();
  if (x >= grid.back()) return values.back();
  auto hi = std::upper_bound(grid.begin(), grid.end(), x);
  const std::size_t i = static_cast<std::size_t>(hi - grid.begin());
  const double w = (x - grid[i - 1]) / (grid[i] - grid[i - 1]);
  return values[i - 1] + w * (values[i] - values[i - 1]);
}

std::vector<double> sampled_derivative(const std::vector<double>& grid,
                                       const std::vector<double>& values) {
  const std::size_t m = grid.size();
  if (m < 3 || values.size() != m)
    throw std::invalid_argument("sampled_derivative needs >= 3 samples");
  std::vector<double> d(m);
  for (std::size_t i = 1; i + 1 < m; ++i) {
    const double h1 = grid[i] - grid[i - 1];
    const double h2 = grid[i + 1] - grid[i];
    d[i] = -values[i - 1] * h2 / (h1 * (h1 + h2)) +
           values[i] * (h2 - h1) / (h1 * h2) +
           values[i + 1] * h1 / (h2 * (h1 + h2));
  }
  {
    const double h1 = grid[1] - grid[0];
    const double h2 = grid[2] - grid[1];
    d[0] = -values[0] * (2.0 * h1 + h2) / (h1 * (h1 + h2)) +
           values[1] * (h1 + h2) / (h1 * h2) -
           values[2] * h1 / (h2 * (h1 + h2));
  }
  {
    const double h1 = grid[m - 2] - grid[m - 3];
    const double h2 = grid[m - 1] - grid[m - 2];
    d[m - 1] = values[m - 3] * h2 / (h1 * (h1 + h2)) -
               values[m - 2] * (h1 + h2) / (h1 * h2) +
               values[m - 1] * (h1 + 2.0 * h2) / (h2 * (h1 + h2));
  }
  return d;
}

}  // namespace pileup
