#pragma once

#include <functional>
#include <memory>

#include "layerlab/geodesic.hpp"
#include "layerlab/metric.hpp"

namespace layerlab {

enum class BallMode { Parameter, Geodesic };

struct BallQuadratureOptions {
  int radial_cells = 192;    // parameter mode, per unit of sqrt(r): scaled below
  int angular_cells = 192;   // parameter mode (n = 2)
  double geodesic_grid_h = 0.1; // geodesic mode grid spacing
  double geodesic_extent = -1;  // parameter half-extent of the marched grid; -1: max radius
};

/// Integrates field * sqrt(det g) over the ball of radius r centered at the
/// chart origin. Parameter balls use a tensor-product midpoint rule in polar
/// coordinates (n = 2) or on the interval (n = 1); geodesic balls mask grid
/// cells by a fast-marched distance field.
///
/// A BallIntegrator caches the chart's distance field so that radius sweeps
/// pay for fast marching once.
class BallIntegrator {
 public:
  using Field = std::function<double(const Vec&)>;

  BallIntegrator(const ImmersionChart& chart, BallMode mode,
                 BallQuadratureOptions opts = {}, double max_radius = -1);

  double integrate(const Field& field, double r) const;

  /// Midpoint value together with a refinement estimate |I(2N) - I(N)|.
  std::pair<double, double> integrate_checked(const Field& field, double r) const;

  /// Ball volume (field = 1).
  double volume(double r) const;

  /// Volume restricted to the direction cone of one declared end.
  double volume_in_end(double r, const End& end) const;

  BallMode mode() const { return mode_; }
  const DistanceField* field_grid() const { return dist_ ? dist_.get() : nullptr; }

 private:
  double integrate_scaled(const Field& field, double r, int scale,
                          const End* end) const;

  const ImmersionChart& chart_;
  BallMode mode_;
  BallQuadratureOptions opts_;
  std::shared_ptr<DistanceField> dist_; // geodesic mode only
};

/// One-shot convenience wrapper matching the operation signature.
double integrate_over_ball(const ImmersionChart& chart, const BallIntegrator::Field& field,
                           double r, BallMode mode, BallQuadratureOptions opts = {});

}  // namespace layerlab
