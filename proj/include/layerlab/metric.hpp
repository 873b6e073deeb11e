#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "layerlab/chart.hpp"
#include "layerlab/types.hpp"

namespace layerlab {

/// First fundamental form at a point: g = J^T J together with its inverse
/// and determinant. Dimensionless entries for dimensionless coordinates.
template <typename Scalar>
struct MetricTensorT {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> g;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> inverse;
  Scalar det{};
};

using MetricTensor = MetricTensorT<double>;

/// g = J^T J from a chart differential. Throws RankDeficient when the
/// smallest eigenvalue of J^T J drops below rank_eps (immersion failure).
template <typename Derived>
MetricTensorT<typename Derived::Scalar> metric_from_jacobian(
    const Eigen::MatrixBase<Derived>& jac, double rank_eps = 1e-12) {
  using Scalar = typename Derived::Scalar;
  using MatS = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  MetricTensorT<Scalar> m;
  m.g = (jac.transpose() * jac).eval();
  m.g = Scalar(0.5) * (m.g + m.g.transpose()).eval(); // exact symmetry
  Eigen::SelfAdjointEigenSolver<MatS> es(m.g, Eigen::EigenvaluesOnly);
  if (!(es.eigenvalues().minCoeff() > Scalar(rank_eps)))
    fail(ErrorCode::RankDeficient, "J^T J nearly singular: immersion fails at sample point");
  m.inverse = m.g.inverse();
  m.det = m.g.determinant();
  return m;
}

/// Induced metric of the chart at parameter point x.
MetricTensor eval_metric(const ImmersionChart& chart, const Vec& x);

}  // namespace layerlab
