#pragma once

#include <vector>

#include "layerlab/metric.hpp"

namespace layerlab {

/// Extrinsic curvature data of a hypersurface point. Units: shape operator
/// and mean curvature carry 1/length, Gauss curvature 1/length^2.
template <typename Scalar>
struct CurvatureReportT {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> shape; // A = g^{-1} h
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> principal;          // ascending
  Scalar gauss{};         // det A, n = 2 only
  Scalar mean{};          // tr A / n
  Scalar norm_a{};        // Frobenius norm sqrt(sum kappa_i^2)
  Scalar invariant_sum{}; // mu_2 * sigma_2(kappa) for n = 2, 3
};

using CurvatureReport = CurvatureReportT<double>;

/// Second fundamental form h_ij = <d^2 map / dx_i dx_j, N>.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> second_fundamental_form(
    const std::vector<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>>& hess,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& normal) {
  const int n = hess.empty() ? 0 : static_cast<int>(hess.front().rows());
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> h =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (int c = 0; c < normal.size(); ++c) h += normal(c) * hess[static_cast<size_t>(c)];
  return Scalar(0.5) * (h + h.transpose()).eval();
}

/// Principal curvatures: eigenvalues of g^{-1/2} h g^{-1/2}, the symmetric
/// realization of the shape operator.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> principal_curvatures(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& g,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& h) {
  using MatS = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Eigen::LLT<MatS> llt(g);
  if (llt.info() != Eigen::Success)
    fail(ErrorCode::RankDeficient, "metric not positive definite");
  const MatS L = llt.matrixL();
  MatS s = L.template triangularView<Eigen::Lower>().solve(h);
  s = L.template triangularView<Eigen::Lower>().solve(s.transpose().eval());
  s = Scalar(0.5) * (s + s.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<MatS> es(s, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

/// Shape operator and derived scalars at parameter point x.
CurvatureReport shape_operator(const ImmersionChart& chart, const Vec& x);

/// shape_operator plus K (n = 2), H, ||A|| and the default invariant sum.
CurvatureReport curvatures(const ImmersionChart& chart, const Vec& x);

/// S(x) = sum_p mu_{2p} K_{2p}(x). Only p = 1 is representable (n <= 3),
/// where K_2 is the second elementary symmetric polynomial of the principal
/// curvatures; for n = 2 that is exactly the Gauss curvature.
double curvature_invariant(const ImmersionChart& chart, const Vec& x,
                           const std::vector<double>& coeffs);

}  // namespace layerlab
