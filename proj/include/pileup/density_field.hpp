#ifndef PILEUP_DENSITY_FIELD_HPP
#define PILEUP_DENSITY_FIELD_HPP

#include <vector>

namespace pileup {

enum class Frame { dimensional, dimensionless };

const char* frame_name(Frame frame);

// A 1-D sampled density: strictly increasing grid, nonnegative values, a
// frame tag and the trapezoid mass cached at construction.
struct DensityField {
  std::vector<double> grid;
  std::vector<double> values;
  Frame frame = Frame::dimensional;
  double mass = 0.0;

  DensityField() = default;
  DensityField(std::vector<double> grid_in, std::vector<double> values_in,
               Frame frame_in);

  // Piecewise-linear interpolation; clamps to the boundary values outside
  // the grid.
  double interpolate(double x) const;
};

double trapezoid_mass(const std::vector<double>& grid,
                      const std::vector<double>& values);

// Second-order derivative of sampled data on a nonuniform grid: three-point
// interior stencils, one-sided second-order stencils at the ends. Needs at
// least three samples.
std::vector<double> sampled_derivative(const std::vector<double>& grid,
                                       const std::vector<double>& values);

}  // namespace pileup

#endif
