#pragma once

#include <cstdint>

#include "layerlab/curvature.hpp"

namespace layerlab {

/// The quantum layer Omega = Sigma x (-a, a) carried by the immersion
/// p(x, u) = map(x) + u N(x). Nondegeneracy requires a sup||A|| < C0 < 1.
/// Immutable after construction; evaluation is concurrency-safe.
struct LayerGeometry {
  ImmersionChart base;
  double half_width = 0.5; // a
  double safety_c0 = 0.9;  // C0 in (0, 1)

  // Curvature scan extent/resolution for validity_check.
  double sample_radius = -1; // -1: min(base.radius_max, 20)
  int sample_count = 161;    // grid nodes per axis
  int random_probes = 256;
  std::uint64_t seed = 0;
};

Vec immersion_point(const LayerGeometry& layer, const Vec& x, double u);

/// Numeric pullback metric J^T J of (x, u) -> p(x, u). The transverse row
/// and column are asserted against the exact block structure (unit normal,
/// vanishing mixed entries) to 1e-8.
MetricTensor pullback_metric(const LayerGeometry& layer, const Vec& x, double u);

/// Closed-form cross-check: base block (I - uA)^T g (I - uA), transverse 1.
MetricTensor pullback_metric_analytic(const LayerGeometry& layer, const Vec& x, double u);

double volume_element(const LayerGeometry& layer, const Vec& x, double u);

struct ValidityReport {
  bool passed = false;
  double a = 0, c0 = 0;
  double sup_spectral = 0, sup_frobenius = 0; // sup ||A|| in both norms
  double a_sup_spectral = 0, a_sup_frobenius = 0;
  double margin = 0;        // c0 - a * sup_spectral
  Vec argmax;               // parameter point achieving the spectral sup
  int samples = 0;
  std::string norm_mode = "spectral";
};

/// a sup||A|| <= C0 scan over the sampled base. Failure is a verdict.
ValidityReport validity_check(const LayerGeometry& layer);

}  // namespace layerlab
