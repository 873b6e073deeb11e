#include "layerlab/metric.hpp"

namespace layerlab {

MetricTensor eval_metric(const ImmersionChart& chart, const Vec& x) {
  if (!chart.inside(x)) fail(ErrorCode::DomainExceeded, "metric requested outside parameter domain");
  return metric_from_jacobian(chart.jac(x));
}

}  // namespace layerlab
