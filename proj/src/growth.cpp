#include "layerlab/growth.hpp"

#include <algorithm>
#include <cmath>

namespace layerlab {

std::pair<double, double> linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  const size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-300) return {0.0, n ? sy / n : 0.0};
  const double slope = (n * sxy - sx * sy) / denom;
  return {slope, (sy - slope * sx) / n};
}

bool trend_to_zero(const std::vector<double>& values) {
  if (values.empty()) return false;
  const double vmax = *std::max_element(values.begin(), values.end());
  if (vmax <= 1e-12) return true;
  const size_t k0 = values.size() / 2;
  double half_max = 0;
  for (size_t k = k0; k < values.size(); ++k) half_max = std::max(half_max, values[k]);
  for (size_t k = k0; k + 1 < values.size(); ++k)
    if (values[k + 1] > values[k] + 0.05 * half_max) return false;
  return values.back() <= 0.5 * values[k0] + 1e-12;
}

static void require_radii(const std::vector<double>& radii, size_t min_count, bool need_decade) {
  if (radii.size() < min_count)
    fail(ErrorCode::InsufficientRadii, "need at least " + std::to_string(min_count) + " radii");
  for (size_t i = 1; i < radii.size(); ++i)
    if (!(radii[i] > radii[i - 1]))
      fail(ErrorCode::InsufficientRadii, "radii must be strictly increasing");
  if (need_decade && !(radii.back() >= 10.0 * radii.front()))
    fail(ErrorCode::InsufficientRadii, "radii must span at least one decade");
}

GrowthFit volume_growth_fit(const ImmersionChart& chart, const std::vector<double>& radii,
                            const GrowthOptions& opts) {
  require_radii(radii, 5, true);

  GrowthFit fit;
  fit.radii = radii;

  // n = 1 strips are arclength-measured; geodesic and parameter balls agree
  // once the chart is arclength parametrized, so the cheap mode is used.
  const BallMode mode = (chart.dim_base == 1) ? BallMode::Parameter : opts.mode;
  BallIntegrator bi(chart, mode, opts.quad, radii.back());

  for (double r : radii) fit.volumes.push_back(bi.volume(r));
  for (size_t i = 1; i < fit.volumes.size(); ++i)
    if (!(fit.volumes[i] > fit.volumes[i - 1]))
      fail(ErrorCode::NonMonotoneVolumes, "ball volumes must increase with radius");

  const size_t k0 = radii.size() / 2;
  std::vector<double> lx, ly;
  for (size_t k = k0; k < radii.size(); ++k) {
    lx.push_back(std::log(radii[k]));
    ly.push_back(std::log(fit.volumes[k]));
  }
  auto [m, logc] = linear_fit(lx, ly);
  fit.exponent_m = m;
  fit.constant_C = std::exp(logc);
  double rss = 0;
  for (size_t i = 0; i < lx.size(); ++i) {
    const double e = ly[i] - (logc + m * lx[i]);
    rss += e * e;
  }
  fit.fit_residual = std::sqrt(rss / lx.size());
  fit.parabolic = fit.exponent_m <= 2.0 + opts.parabolic_tol;

  if (chart.dim_base == 2) {
    // lambda_i = lim V_i(r) / (pi r^2): intercept of a linear fit in 1/r.
    for (const End& end : chart.ends) {
      std::vector<double> inv_r, lam;
      for (size_t k = k0; k < radii.size(); ++k) {
        const double v = (chart.ends.size() == 1) ? fit.volumes[k]
                                                  : bi.volume_in_end(radii[k], end);
        inv_r.push_back(1.0 / radii[k]);
        lam.push_back(v / (M_PI * radii[k] * radii[k]));
      }
      auto [slope, intercept] = linear_fit(inv_r, lam);
      (void)slope;
      fit.end_constants.push_back(std::max(0.0, intercept));
    }
  }
  return fit;
}

FlatnessReport asymptotic_flatness_report(const ImmersionChart& chart,
                                          const std::vector<double>& radii,
                                          int samples_per_circle) {
  require_radii(radii, 2, false);
  FlatnessReport rep;
  rep.radii = radii;
  for (double r : radii) {
    double sup = 0.0;
    if (chart.dim_base == 1) {
      for (double s : {-r, r}) {
        Vec x(1);
        x << s;
        sup = std::max(sup, curvatures(chart, x).principal.cwiseAbs().maxCoeff());
      }
    } else {
      for (int k = 0; k < samples_per_circle; ++k) {
        const double th = 2.0 * M_PI * k / samples_per_circle;
        Vec x(2);
        x << r * std::cos(th), r * std::sin(th);
        sup = std::max(sup, curvatures(chart, x).principal.cwiseAbs().maxCoeff());
      }
    }
    rep.sup_norm_a.push_back(sup);
    rep.r2_sup_norm_a.push_back(r * r * sup);
  }
  rep.flat = trend_to_zero(rep.sup_norm_a);
  rep.strong_decay = trend_to_zero(rep.r2_sup_norm_a);
  return rep;
}

}  // namespace layerlab
