#pragma once

#include <vector>

#include "layerlab/ball_integrate.hpp"
#include "layerlab/curvature.hpp"

namespace layerlab {

/// Volume growth diagnostics: V(r) ~ C r^m on the largest-radius half, the
/// per-end isoperimetric constants lambda_i = lim V_i(r) / (pi r^2) (n = 2),
/// and the parabolicity flag m <= 2 + tol.
struct GrowthFit {
  double exponent_m = 0;
  double constant_C = 0;
  std::vector<double> end_constants; // lambda_i, n = 2 only
  bool parabolic = false;
  double fit_residual = 0;
  std::vector<double> radii, volumes; // provenance
};

struct GrowthOptions {
  BallMode mode = BallMode::Geodesic;
  BallQuadratureOptions quad = {};
  double parabolic_tol = 0.1;
};

GrowthFit volume_growth_fit(const ImmersionChart& chart, const std::vector<double>& radii,
                            const GrowthOptions& opts = {});

/// sup ||A|| over sampled circles of parameter radius r, with the scaled
/// column r^2 sup ||A|| and monotone-trend verdicts.
struct FlatnessReport {
  std::vector<double> radii;
  std::vector<double> sup_norm_a;    // spectral norm (max |principal curvature|)
  std::vector<double> r2_sup_norm_a;
  bool flat = false;         // sup ||A|| -> 0
  bool strong_decay = false; // r^2 sup ||A|| -> 0
};

FlatnessReport asymptotic_flatness_report(const ImmersionChart& chart,
                                          const std::vector<double>& radii,
                                          int samples_per_circle = 128);

/// Least-squares slope/intercept helper (used by the trend estimators).
std::pair<double, double> linear_fit(const std::vector<double>& x, const std::vector<double>& y);

/// True when the largest-radius half of the series decreases toward zero.
bool trend_to_zero(const std::vector<double>& values);

}  // namespace layerlab
