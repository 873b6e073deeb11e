#include "layerlab/ball_integrate.hpp"

#include <cmath>

namespace layerlab {

BallIntegrator::BallIntegrator(const ImmersionChart& chart, BallMode mode,
                               BallQuadratureOptions opts, double max_radius)
    : chart_(chart), mode_(mode), opts_(opts) {
  if (mode_ == BallMode::Geodesic) {
    if (chart_.dim_base != 2)
      fail(ErrorCode::UnsupportedDimension, "geodesic balls: n = 2 only (use arclength for strips)");
    double extent = opts_.geodesic_extent;
    if (extent <= 0) {
      if (max_radius <= 0) fail(ErrorCode::BadParameters, "geodesic integrator needs a max radius");
      // For graph charts the parameter distance is a lower bound on geodesic
      // distance, so the parameter extent max_radius covers the ball.
      extent = max_radius * 1.02 + 4 * opts_.geodesic_grid_h;
    }
    extent = std::min(extent, chart_.radius_max);
    dist_ = std::make_shared<DistanceField>(
        geodesic_distance_field(chart_, Vec::Zero(2), extent, opts_.geodesic_grid_h));
  }
}

double BallIntegrator::integrate_scaled(const Field& field, double r, int scale,
                                        const End* end) const {
  const auto in_cone = [&](const Vec& x) {
    if (!end || end->half_angle >= M_PI - 1e-12) return true;
    const double nx = x.norm();
    if (nx < 1e-12) return true;
    const double c = end->direction.dot(x) / (end->direction.norm() * nx);
    return std::acos(std::clamp(c, -1.0, 1.0)) <= end->half_angle;
  };

  if (mode_ == BallMode::Parameter) {
    if (r > chart_.radius_max * (1 + 1e-12))
      fail(ErrorCode::TruncationExceeded, "ball radius beyond chart truncation");
    if (chart_.dim_base == 1) {
      const int cells = 2 * opts_.radial_cells * scale;
      const double dx = 2.0 * r / cells;
      double acc = 0.0;
      Vec x(1);
      for (int k = 0; k < cells; ++k) {
        x(0) = -r + (k + 0.5) * dx;
        if (!in_cone(x)) continue;
        acc += field(x) * chart_.jac(x).col(0).norm() * dx;
      }
      return acc;
    }
    const int nr = opts_.radial_cells * scale;
    const int nt = opts_.angular_cells * scale;
    const double dr = r / nr, dt = 2.0 * M_PI / nt;
    double acc = 0.0;
    Vec x(2);
    for (int i = 0; i < nr; ++i) {
      const double rho = (i + 0.5) * dr;
      for (int j = 0; j < nt; ++j) {
        const double th = (j + 0.5) * dt;
        x << rho * std::cos(th), rho * std::sin(th);
        if (!in_cone(x)) continue;
        acc += field(x) * std::sqrt(eval_metric(chart_, x).det) * rho * dr * dt;
      }
    }
    return acc;
  }

  // Geodesic mode: mask grid cells by the marched distance at subcell centers.
  const DistanceField& df = *dist_;
  if (r > df.reliable_radius)
    fail(ErrorCode::TruncationExceeded, "geodesic ball exceeds marched region");
  const int sub = scale;
  const double hs = df.h / sub;
  double acc = 0.0;
  Vec x(2);
  for (int j = 0; j + 1 < df.ny; ++j)
    for (int i = 0; i + 1 < df.nx; ++i) {
      // Cheap reject: cell entirely beyond r.
      const double dmin = std::min({df.dist(i, j), df.dist(i + 1, j), df.dist(i, j + 1),
                                    df.dist(i + 1, j + 1)});
      if (dmin > r + df.h) continue;
      for (int sj = 0; sj < sub; ++sj)
        for (int si = 0; si < sub; ++si) {
          const double px = df.x0 + i * df.h + (si + 0.5) * hs;
          const double py = df.y0 + j * df.h + (sj + 0.5) * hs;
          if (df.at(px, py) > r) continue;
          x << px, py;
          if (!in_cone(x)) continue;
          acc += field(x) * std::sqrt(eval_metric(chart_, x).det) * hs * hs;
        }
    }
  return acc;
}

double BallIntegrator::integrate(const Field& field, double r) const {
  return integrate_checked(field, r).first;
}

std::pair<double, double> BallIntegrator::integrate_checked(const Field& field, double r) const {
  const double coarse = integrate_scaled(field, r, 1, nullptr);
  const double fine = integrate_scaled(field, r, 2, nullptr);
  if (mode_ == BallMode::Geodesic) return {fine, std::abs(fine - coarse)};
  // Midpoint is second order; the refinement pair supports one Richardson step.
  return {fine + (fine - coarse) / 3.0, std::abs(fine - coarse) / 3.0};
}

double BallIntegrator::volume(double r) const {
  return integrate([](const Vec&) { return 1.0; }, r);
}

double BallIntegrator::volume_in_end(double r, const End& end) const {
  return integrate_scaled([](const Vec&) { return 1.0; }, r, 1, &end);
}

double integrate_over_ball(const ImmersionChart& chart, const BallIntegrator::Field& field,
                           double r, BallMode mode, BallQuadratureOptions opts) {
  BallIntegrator bi(chart, mode, opts, r);
  return bi.integrate(field, r);
}

}  // namespace layerlab
