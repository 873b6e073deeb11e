#pragma once

#include "layerlab/chart.hpp"

namespace layerlab {

/// Geodesic distance from a source point, sampled on a regular parameter
/// grid by fast marching over the eight-triangle stencil. Edge lengths are
/// ambient chords of the immersion, so the marched distance approximates
/// intrinsic distance to first order in the grid spacing.
struct DistanceField {
  double x0 = 0, y0 = 0; // lower-left grid corner (parameter space)
  double h = 0;          // grid spacing
  int nx = 0, ny = 0;    // grid nodes per axis
  Mat dist;              // nx x ny distances

  /// Largest radius for which the geodesic ball is certainly inside the grid.
  double reliable_radius = 0;

  double at(double x, double y) const; // bilinear interpolation
};

DistanceField geodesic_distance_field(const ImmersionChart& chart, const Vec& center,
                                      double extent, double h);

/// n = 1: signed arclength from center along the curve, by composite
/// midpoint integration of |map'|.
double arclength_1d(const ImmersionChart& chart, double s_from, double s_to,
                    int cells_per_unit = 64);

}  // namespace layerlab
