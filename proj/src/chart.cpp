#include "layerlab/chart.hpp"

#include <Eigen/Geometry>
#include <cmath>

namespace layerlab {

Mat ImmersionChart::jac_fd(const Vec& x, double h) const {
  Mat J(ambient_dim, dim_base);
  Vec xp = x, xm = x;
  for (int i = 0; i < dim_base; ++i) {
    xp(i) = x(i) + h;
    xm(i) = x(i) - h;
    J.col(i) = (map(xp) - map(xm)) / (2.0 * h);
    xp(i) = x(i);
    xm(i) = x(i);
  }
  return J;
}

std::vector<Mat> ImmersionChart::hess_fd(const Vec& x, double h) const {
  std::vector<Mat> H(ambient_dim, Mat::Zero(dim_base, dim_base));
  const Vec f0 = map(x);
  for (int i = 0; i < dim_base; ++i) {
    Vec xp = x, xm = x;
    xp(i) += h;
    xm(i) -= h;
    const Vec fii = (map(xp) - 2.0 * f0 + map(xm)) / (h * h);
    for (int c = 0; c < ambient_dim; ++c) H[c](i, i) = fii(c);
    for (int j = i + 1; j < dim_base; ++j) {
      Vec xpp = x, xpm = x, xmp = x, xmm = x;
      xpp(i) += h; xpp(j) += h;
      xpm(i) += h; xpm(j) -= h;
      xmp(i) -= h; xmp(j) += h;
      xmm(i) -= h; xmm(j) -= h;
      const Vec fij = (map(xpp) - map(xpm) - map(xmp) + map(xmm)) / (4.0 * h * h);
      for (int c = 0; c < ambient_dim; ++c) {
        H[c](i, j) = fij(c);
        H[c](j, i) = fij(c);
      }
    }
  }
  return H;
}

Mat ImmersionChart::jac(const Vec& x) const {
  return jacobian ? jacobian(x) : jac_fd(x, fd_step);
}

std::vector<Mat> ImmersionChart::hess(const Vec& x) const {
  return hessian ? hessian(x) : hess_fd(x, std::max(fd_step, 1e-4));
}

Vec ImmersionChart::normal(const Vec& x) const {
  if (ambient_dim != dim_base + 1)
    fail(ErrorCode::UnsupportedDimension, "oriented normals exist for codimension 1 only");
  const Mat J = jac(x);
  if (dim_base == 1) {
    Vec t = J.col(0);
    const double len = t.norm();
    if (!(len > 1e-14)) fail(ErrorCode::NormalUndefined, "degenerate tangent at chart point");
    Vec n(2);
    n << -t(1), t(0);
    return orientation * n / len;
  }
  if (dim_base == 2) {
    const Vec3 a = J.col(0), b = J.col(1);
    const Vec3 c = a.cross(b);
    const double len = c.norm();
    if (!(len > 1e-12 * a.norm() * b.norm()) || !(len > 1e-300))
      fail(ErrorCode::NormalUndefined, "Jacobian columns linearly dependent");
    return orientation * c / len;
  }
  fail(ErrorCode::UnsupportedDimension, "normals implemented for n = 1, 2 only");
}

ImmersionChart reparametrize(const ImmersionChart& chart,
                             std::function<Vec(const Vec&)> phi,
                             double fd_step) {
  ImmersionChart out;
  out.dim_base = chart.dim_base;
  out.ambient_dim = chart.ambient_dim;
  out.name = chart.name + "+reparam";
  auto base_map = chart.map;
  out.map = [base_map, phi](const Vec& x) { return base_map(phi(x)); };
  out.fd_step = fd_step;
  out.radius_max = chart.radius_max;
  out.orientation = chart.orientation;
  out.ends = chart.ends;
  out.euler_char = chart.euler_char;
  return out;
}

}  // namespace layerlab
