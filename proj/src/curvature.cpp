#include "layerlab/curvature.hpp"

#include <cmath>

namespace layerlab {

namespace {

double elementary_symmetric_2(const Vec& kappa) {
  double s = 0.0;
  for (int i = 0; i < kappa.size(); ++i)
    for (int j = i + 1; j < kappa.size(); ++j) s += kappa(i) * kappa(j);
  return s;
}

}  // namespace

CurvatureReport shape_operator(const ImmersionChart& chart, const Vec& x) {
  if (!chart.inside(x)) fail(ErrorCode::DomainExceeded, "curvature requested outside parameter domain");
  const Mat J = chart.jac(x);
  const MetricTensor m = metric_from_jacobian(J);
  const Vec N = chart.normal(x);
  const Mat h = second_fundamental_form(chart.hess(x), N);

  CurvatureReport rep;
  rep.shape = m.inverse * h;
  rep.principal = principal_curvatures(m.g, h);
  const int n = chart.dim_base;
  rep.mean = rep.principal.sum() / n;
  rep.norm_a = rep.principal.norm();
  if (n == 2) rep.gauss = rep.principal(0) * rep.principal(1);
  rep.invariant_sum = (n >= 2) ? elementary_symmetric_2(rep.principal) : 0.0;
  return rep;
}

CurvatureReport curvatures(const ImmersionChart& chart, const Vec& x) {
  return shape_operator(chart, x);
}

double curvature_invariant(const ImmersionChart& chart, const Vec& x,
                           const std::vector<double>& coeffs) {
  const int n = chart.dim_base;
  const size_t terms = static_cast<size_t>(n / 2);
  if (terms >= 2)
    fail(ErrorCode::UnsupportedDimension, "p >= 2 curvature traces not supported (n >= 4)");
  if (coeffs.size() != terms)
    fail(ErrorCode::BadParameters, "expected [n/2] invariant coefficients");
  for (double c : coeffs)
    if (!(c > 0.0)) fail(ErrorCode::BadParameters, "invariant coefficients must be positive");
  if (terms == 0) return 0.0;
  const CurvatureReport rep = shape_operator(chart, x);
  return coeffs[0] * rep.invariant_sum;
}

}  // namespace layerlab
