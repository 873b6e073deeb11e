#include "layerlab/layer.hpp"

#include <cmath>
#include <random>

namespace layerlab {

Vec immersion_point(const LayerGeometry& layer, const Vec& x, double u) {
  if (!(std::abs(u) < layer.half_width))
    fail(ErrorCode::OutOfLayer, "|u| >= half width");
  if (!layer.base.inside(x)) fail(ErrorCode::DomainExceeded, "base point outside chart domain");
  return layer.base.at(x) + u * layer.base.normal(x);
}

MetricTensor pullback_metric(const LayerGeometry& layer, const Vec& x, double u) {
  const int n = layer.base.dim_base;
  const double h = layer.base.fd_step;
  Mat J(layer.base.ambient_dim, n + 1);
  Vec xp = x, xm = x;
  for (int i = 0; i < n; ++i) {
    xp(i) = x(i) + h;
    xm(i) = x(i) - h;
    J.col(i) = (layer.base.at(xp) + u * layer.base.normal(xp) -
                layer.base.at(xm) - u * layer.base.normal(xm)) /
               (2.0 * h);
    xp(i) = x(i);
    xm(i) = x(i);
  }
  J.col(n) = layer.base.normal(x); // p is linear in u

  MetricTensor m;
  m.g = J.transpose() * J;
  m.g = 0.5 * (m.g + m.g.transpose()).eval();

  // Block structure of the pullback: unit transverse entry, no mixing.
  if (std::abs(m.g(n, n) - 1.0) > 1e-8)
    fail(ErrorCode::Degenerate, "pullback transverse entry deviates from 1");
  for (int i = 0; i < n; ++i)
    if (std::abs(m.g(i, n)) > 1e-8)
      fail(ErrorCode::Degenerate, "pullback mixed entry exceeds tolerance");

  m.det = m.g.determinant();
  if (!(m.det > 1e-12))
    fail(ErrorCode::Degenerate, "pullback metric degenerate (layer self-overlap?)");
  m.inverse = m.g.inverse();
  return m;
}

MetricTensor pullback_metric_analytic(const LayerGeometry& layer, const Vec& x, double u) {
  const int n = layer.base.dim_base;
  const MetricTensor g = eval_metric(layer.base, x);
  const CurvatureReport c = shape_operator(layer.base, x);
  const Mat B = Mat::Identity(n, n) - u * c.shape;
  MetricTensor m;
  m.g = Mat::Identity(n + 1, n + 1);
  m.g.topLeftCorner(n, n) = B.transpose() * g.g * B;
  m.det = m.g.determinant();
  if (!(m.det > 1e-12)) fail(ErrorCode::Degenerate, "analytic pullback degenerate");
  m.inverse = m.g.inverse();
  return m;
}

double volume_element(const LayerGeometry& layer, const Vec& x, double u) {
  return std::sqrt(pullback_metric(layer, x, u).det);
}

ValidityReport validity_check(const LayerGeometry& layer) {
  ValidityReport rep;
  rep.a = layer.half_width;
  rep.c0 = layer.safety_c0;

  const int n = layer.base.dim_base;
  const double R = layer.sample_radius > 0
                       ? std::min(layer.sample_radius, layer.base.radius_max)
                       : std::min(layer.base.radius_max, 20.0);
  rep.argmax = Vec::Zero(n);

  const auto probe = [&](const Vec& x) {
    const CurvatureReport c = curvatures(layer.base, x);
    const double spec = c.principal.cwiseAbs().maxCoeff();
    if (spec > rep.sup_spectral) {
      rep.sup_spectral = spec;
      rep.argmax = x;
    }
    rep.sup_frobenius = std::max(rep.sup_frobenius, c.norm_a);
    ++rep.samples;
  };

  if (n == 1) {
    Vec x(1);
    for (int i = 0; i < layer.sample_count; ++i) {
      x(0) = -R + 2.0 * R * i / (layer.sample_count - 1);
      probe(x);
    }
  } else {
    Vec x(2);
    for (int j = 0; j < layer.sample_count; ++j)
      for (int i = 0; i < layer.sample_count; ++i) {
        x << -R + 2.0 * R * i / (layer.sample_count - 1),
            -R + 2.0 * R * j / (layer.sample_count - 1);
        if (x.norm() <= R) probe(x);
      }
  }
  std::mt19937_64 rng(layer.seed ? layer.seed : 0x9e3779b97f4a7c15ull);
  std::uniform_real_distribution<double> unif(-R, R);
  for (int k = 0; k < layer.random_probes; ++k) {
    Vec x(n);
    for (int i = 0; i < n; ++i) x(i) = unif(rng);
    if (x.norm() <= R) probe(x);
  }

  rep.a_sup_spectral = rep.a * rep.sup_spectral;
  rep.a_sup_frobenius = rep.a * rep.sup_frobenius;
  rep.margin = rep.c0 - rep.a_sup_spectral;
  rep.passed = rep.a_sup_spectral <= rep.c0;
  return rep;
}

}  // namespace layerlab
