#pragma once

#include <vector>

#include "layerlab/chart.hpp"

namespace layerlab {

/// Flat plane (x, y) -> (x, y, 0). Totally geodesic control, e = 1, one end.
ImmersionChart make_plane();

/// Graph of z = height * exp(-(x^2 + y^2) / (2 width^2)). Asymptotically
/// flat, e = 1, one end.
ImmersionChart make_gaussian_bump(double height, double width);

/// Graph of z = slope * sqrt(x^2 + y^2 + smoothing^2). Asymptotically
/// conical with opening slope `slope`; positive Gauss curvature.
ImmersionChart make_smoothed_cone(double slope, double smoothing);

/// Graph of z = amplitude * x * y * exp(-(x^2+y^2) / (2 sigma^2)).
/// Gauss curvature is strictly negative around the origin and the surface
/// flattens at Gaussian rate; used to probe negative-curvature conditions.
ImmersionChart make_windowed_saddle(double amplitude, double sigma);

/// Rotationally symmetric graph z = P(sqrt(x^2+y^2)) with P a clamped cubic
/// spline through (profile_r, profile_z), P'(0) = 0, extended linearly past
/// the last knot (asymptotically conical tail).
ImmersionChart make_rotational_graph(const std::vector<double>& profile_r,
                                     const std::vector<double>& profile_z);

/// Round sphere patch (theta, phi) -> rho (sin th cos ph, sin th sin ph, cos th),
/// centered at theta = pi/2 and truncated before the poles. Compact: used only
/// as a negative control (constant curvature, fails flatness and validity).
ImmersionChart make_sphere(double rho, double patch_radius = 1.0);

/// Straight line s -> (s, 0), n = 1.
ImmersionChart make_straight_strip();

/// Plane curve with constant curvature kappa on the arc |s| <= arc_half_angle/kappa
/// and straight continuations beyond; arclength parametrized, n = 1.
ImmersionChart make_bent_strip(double kappa, double arc_half_angle = M_PI / 2.0);

/// Circle of radius rho, arclength parametrized, n = 1. Compact test curve.
ImmersionChart make_circle_strip(double rho);

/// Natural cubic spline with clamped left slope, linear extension on the right.
/// Exposed for tests of the rotational profile machinery.
class CubicProfile {
 public:
  CubicProfile(std::vector<double> r, std::vector<double> z);
  double value(double r) const;
  double deriv(double r) const;
  double second(double r) const;
  double knot_back() const { return r_.back(); }

 private:
  int interval(double r) const;
  std::vector<double> r_, z_, m_; // knots, values, second derivatives
};

}  // namespace layerlab
