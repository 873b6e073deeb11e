#include "layerlab/surfaces.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <memory>

namespace layerlab {

namespace {

// Chart of a graph z = f(x, y) with upward-oriented normal.
ImmersionChart graph_chart(std::string name,
                           std::function<double(double, double)> f,
                           std::function<Vec2(double, double)> grad,
                           std::function<Eigen::Matrix2d(double, double)> hess) {
  ImmersionChart c;
  c.dim_base = 2;
  c.ambient_dim = 3;
  c.name = std::move(name);
  c.map = [f](const Vec& x) {
    Vec p(3);
    p << x(0), x(1), f(x(0), x(1));
    return p;
  };
  c.jacobian = [grad](const Vec& x) {
    const Vec2 g = grad(x(0), x(1));
    Mat J(3, 2);
    J << 1, 0, 0, 1, g(0), g(1);
    return J;
  };
  c.hessian = [hess](const Vec& x) {
    std::vector<Mat> H(3, Mat::Zero(2, 2));
    H[2] = hess(x(0), x(1));
    return H;
  };
  c.orientation = +1.0; // cross of graph tangents already points upward
  End e;
  e.direction = Vec2(1.0, 0.0);
  e.half_angle = M_PI;
  c.ends = {e};
  c.euler_char = 1.0;
  return c;
}

}  // namespace

ImmersionChart make_plane() {
  return graph_chart(
      "plane", [](double, double) { return 0.0; },
      [](double, double) { return Vec2::Zero().eval(); },
      [](double, double) { return Eigen::Matrix2d::Zero().eval(); });
}

ImmersionChart make_gaussian_bump(double height, double width) {
  if (!(width > 0.0)) fail(ErrorCode::BadParameters, "gaussian_bump: width must be positive");
  const double w2 = width * width;
  auto f = [height, w2](double x, double y) {
    return height * std::exp(-(x * x + y * y) / (2.0 * w2));
  };
  auto grad = [f, w2](double x, double y) {
    const double v = f(x, y);
    return Vec2(-x * v / w2, -y * v / w2);
  };
  auto hess = [f, w2](double x, double y) {
    const double v = f(x, y);
    Eigen::Matrix2d H;
    H(0, 0) = v * (x * x / (w2 * w2) - 1.0 / w2);
    H(1, 1) = v * (y * y / (w2 * w2) - 1.0 / w2);
    H(0, 1) = H(1, 0) = v * x * y / (w2 * w2);
    return H;
  };
  return graph_chart("gaussian_bump", f, grad, hess);
}

ImmersionChart make_smoothed_cone(double slope, double smoothing) {
  if (!(slope > 0.0) || !(smoothing > 0.0))
    fail(ErrorCode::BadParameters, "smoothed_cone: slope and smoothing must be positive");
  const double s2 = smoothing * smoothing;
  auto q = [s2](double x, double y) { return std::sqrt(x * x + y * y + s2); };
  auto f = [slope, q](double x, double y) { return slope * q(x, y); };
  auto grad = [slope, q](double x, double y) {
    const double r = q(x, y);
    return Vec2(slope * x / r, slope * y / r);
  };
  auto hess = [slope, q](double x, double y) {
    const double r = q(x, y);
    const double r3 = r * r * r;
    Eigen::Matrix2d H;
    H(0, 0) = slope * (r * r - x * x) / r3;
    H(1, 1) = slope * (r * r - y * y) / r3;
    H(0, 1) = H(1, 0) = -slope * x * y / r3;
    return H;
  };
  return graph_chart("smoothed_cone", f, grad, hess);
}

ImmersionChart make_windowed_saddle(double amplitude, double sigma) {
  if (!(sigma > 0.0)) fail(ErrorCode::BadParameters, "windowed_saddle: sigma must be positive");
  const double s2 = sigma * sigma;
  auto g = [s2](double x, double y) { return std::exp(-(x * x + y * y) / (2.0 * s2)); };
  auto f = [amplitude, g](double x, double y) { return amplitude * x * y * g(x, y); };
  auto grad = [amplitude, g, s2](double x, double y) {
    const double e = g(x, y);
    return Vec2(amplitude * y * e * (1.0 - x * x / s2), amplitude * x * e * (1.0 - y * y / s2));
  };
  auto hess = [amplitude, g, s2](double x, double y) {
    const double e = g(x, y);
    Eigen::Matrix2d H;
    H(0, 0) = amplitude * y * e * (x / s2) * (x * x / s2 - 3.0);
    H(1, 1) = amplitude * x * e * (y / s2) * (y * y / s2 - 3.0);
    H(0, 1) = H(1, 0) = amplitude * e * (1.0 - x * x / s2) * (1.0 - y * y / s2);
    return H;
  };
  return graph_chart("windowed_saddle", f, grad, hess);
}

CubicProfile::CubicProfile(std::vector<double> r, std::vector<double> z)
    : r_(std::move(r)), z_(std::move(z)) {
  const int k = static_cast<int>(r_.size());
  if (k < 3 || z_.size() != r_.size())
    fail(ErrorCode::BadParameters, "rotational profile needs >= 3 (r, z) knots");
  if (r_.front() != 0.0) fail(ErrorCode::BadParameters, "rotational profile must start at r = 0");
  for (int i = 1; i < k; ++i)
    if (!(r_[i] > r_[i - 1])) fail(ErrorCode::BadParameters, "profile knots must be increasing");

  // Second-derivative system: clamped left slope (P'(0) = 0), natural right.
  Mat A = Mat::Zero(k, k);
  Vec b = Vec::Zero(k);
  const auto h = [this](int i) { return r_[i + 1] - r_[i]; };
  A(0, 0) = h(0) / 3.0;
  A(0, 1) = h(0) / 6.0;
  b(0) = (z_[1] - z_[0]) / h(0);
  for (int i = 1; i < k - 1; ++i) {
    A(i, i - 1) = h(i - 1) / 6.0;
    A(i, i) = (h(i - 1) + h(i)) / 3.0;
    A(i, i + 1) = h(i) / 6.0;
    b(i) = (z_[i + 1] - z_[i]) / h(i) - (z_[i] - z_[i - 1]) / h(i - 1);
  }
  A(k - 1, k - 1) = 1.0;
  const Vec m = A.partialPivLu().solve(b);
  m_.assign(m.data(), m.data() + k);
}

int CubicProfile::interval(double r) const {
  int lo = 0, hi = static_cast<int>(r_.size()) - 1;
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    (r_[static_cast<size_t>(mid)] <= r ? lo : hi) = mid;
  }
  return lo;
}

double CubicProfile::value(double r) const {
  if (r >= r_.back()) return z_.back() + deriv(r_.back()) * (r - r_.back());
  const int i = interval(r);
  const double h = r_[i + 1] - r_[i], t = r - r_[i], u = r_[i + 1] - r;
  return (m_[i] * u * u * u + m_[i + 1] * t * t * t) / (6.0 * h) +
         (z_[i] / h - m_[i] * h / 6.0) * u + (z_[i + 1] / h - m_[i + 1] * h / 6.0) * t;
}

double CubicProfile::deriv(double r) const {
  if (r >= r_.back()) r = r_.back();
  const int i = (r == r_.back()) ? static_cast<int>(r_.size()) - 2 : interval(r);
  const double h = r_[i + 1] - r_[i], t = r - r_[i], u = r_[i + 1] - r;
  return (-m_[i] * u * u + m_[i + 1] * t * t) / (2.0 * h) +
         (z_[i + 1] - z_[i]) / h - (m_[i + 1] - m_[i]) * h / 6.0;
}

double CubicProfile::second(double r) const {
  if (r >= r_.back()) return 0.0;
  const int i = interval(r);
  const double h = r_[i + 1] - r_[i];
  return (m_[i] * (r_[i + 1] - r) + m_[i + 1] * (r - r_[i])) / h;
}

ImmersionChart make_rotational_graph(const std::vector<double>& profile_r,
                                     const std::vector<double>& profile_z) {
  auto prof = std::make_shared<CubicProfile>(profile_r, profile_z);
  auto f = [prof](double x, double y) { return prof->value(std::hypot(x, y)); };
  auto grad = [prof](double x, double y) {
    const double rho = std::hypot(x, y);
    if (rho < 1e-12) return Vec2::Zero().eval();
    const double w = prof->deriv(rho) / rho;
    return Vec2(w * x, w * y);
  };
  auto hess = [prof](double x, double y) {
    const double rho = std::hypot(x, y);
    Eigen::Matrix2d H;
    if (rho < 1e-8) {
      const double c = prof->second(0.0);
      H << c, 0, 0, c;
      return H;
    }
    const double w = prof->deriv(rho) / rho;
    const double t = (prof->second(rho) - w) / (rho * rho);
    H(0, 0) = w + x * x * t;
    H(1, 1) = w + y * y * t;
    H(0, 1) = H(1, 0) = x * y * t;
    return H;
  };
  ImmersionChart c = graph_chart("rotational_graph", f, grad, hess);
  return c;
}

ImmersionChart make_sphere(double rho, double patch_radius) {
  if (!(rho > 0.0)) fail(ErrorCode::BadParameters, "sphere: radius must be positive");
  patch_radius = std::min(patch_radius, M_PI / 2.0 - 0.05); // keep clear of the poles
  ImmersionChart c;
  c.dim_base = 2;
  c.ambient_dim = 3;
  c.name = "sphere";
  c.radius_max = patch_radius;
  c.orientation = -1.0; // inward normal: principal curvatures +1/rho
  c.map = [rho](const Vec& x) {
    const double th = M_PI / 2.0 + x(0), ph = x(1);
    Vec p(3);
    p << rho * std::sin(th) * std::cos(ph), rho * std::sin(th) * std::sin(ph), rho * std::cos(th);
    return p;
  };
  c.jacobian = [rho](const Vec& x) {
    const double th = M_PI / 2.0 + x(0), ph = x(1);
    Mat J(3, 2);
    J << rho * std::cos(th) * std::cos(ph), -rho * std::sin(th) * std::sin(ph),
        rho * std::cos(th) * std::sin(ph), rho * std::sin(th) * std::cos(ph),
        -rho * std::sin(th), 0.0;
    return J;
  };
  c.hessian = [rho](const Vec& x) {
    const double th = M_PI / 2.0 + x(0), ph = x(1);
    std::vector<Mat> H(3, Mat::Zero(2, 2));
    // d2/dth2 = -pos; d2/dph2 = (-sx, -sy, 0); mixed = d/dph of dth column
    H[0] << -rho * std::sin(th) * std::cos(ph), -rho * std::cos(th) * std::sin(ph),
        -rho * std::cos(th) * std::sin(ph), -rho * std::sin(th) * std::cos(ph);
    H[1] << -rho * std::sin(th) * std::sin(ph), rho * std::cos(th) * std::cos(ph),
        rho * std::cos(th) * std::cos(ph), -rho * std::sin(th) * std::sin(ph);
    H[2] << -rho * std::cos(th), 0, 0, 0;
    return H;
  };
  return c;
}

namespace {

ImmersionChart strip_chart(std::string name) {
  ImmersionChart c;
  c.dim_base = 1;
  c.ambient_dim = 2;
  c.name = std::move(name);
  End plus, minus;
  plus.direction = Vec::Constant(1, 1.0);
  minus.direction = Vec::Constant(1, -1.0);
  plus.half_angle = minus.half_angle = M_PI / 2.0;
  c.ends = {plus, minus};
  return c;
}

}  // namespace

ImmersionChart make_straight_strip() {
  ImmersionChart c = strip_chart("straight_strip");
  c.map = [](const Vec& x) {
    Vec p(2);
    p << x(0), 0.0;
    return p;
  };
  c.jacobian = [](const Vec&) {
    Mat J(2, 1);
    J << 1.0, 0.0;
    return J;
  };
  c.hessian = [](const Vec&) { return std::vector<Mat>(2, Mat::Zero(1, 1)); };
  return c;
}

ImmersionChart make_bent_strip(double kappa, double arc_half_angle) {
  if (!(kappa > 0.0) || !(arc_half_angle > 0.0))
    fail(ErrorCode::BadParameters, "bent_strip: kappa and arc angle must be positive");
  const double s0 = arc_half_angle / kappa;
  // Position/tangent of the arc-with-straight-tails curve at arclength s.
  auto state = [kappa, s0](double s, Vec2& pos, Vec2& tan, Vec2& dtan) {
    const double sc = std::clamp(s, -s0, s0);
    const double c = std::cos(kappa * sc), d = std::sin(kappa * sc);
    pos = Vec2(d / kappa, (1.0 - c) / kappa);
    tan = Vec2(c, d);
    dtan = Vec2(-kappa * d, kappa * c);
    if (s > s0 || s < -s0) {
      pos += (s - sc) * tan;
      dtan.setZero();
    }
  };
  ImmersionChart c = strip_chart("bent_strip");
  c.map = [state](const Vec& x) {
    Vec2 p, t, dt;
    state(x(0), p, t, dt);
    Vec out(2);
    out << p(0), p(1);
    return out;
  };
  c.jacobian = [state](const Vec& x) {
    Vec2 p, t, dt;
    state(x(0), p, t, dt);
    Mat J(2, 1);
    J << t(0), t(1);
    return J;
  };
  c.hessian = [state](const Vec& x) {
    Vec2 p, t, dt;
    state(x(0), p, t, dt);
    std::vector<Mat> H(2, Mat::Zero(1, 1));
    H[0](0, 0) = dt(0);
    H[1](0, 0) = dt(1);
    return H;
  };
  return c;
}

ImmersionChart make_circle_strip(double rho) {
  if (!(rho > 0.0)) fail(ErrorCode::BadParameters, "circle_strip: radius must be positive");
  ImmersionChart c = strip_chart("circle_strip");
  c.ends.clear(); // compact
  c.radius_max = M_PI * rho;
  c.map = [rho](const Vec& x) {
    Vec p(2);
    p << rho * std::cos(x(0) / rho), rho * std::sin(x(0) / rho);
    return p;
  };
  c.jacobian = [rho](const Vec& x) {
    Mat J(2, 1);
    J << -std::sin(x(0) / rho), std::cos(x(0) / rho);
    return J;
  };
  c.hessian = [rho](const Vec& x) {
    std::vector<Mat> H(2, Mat::Zero(1, 1));
    H[0](0, 0) = -std::cos(x(0) / rho) / rho;
    H[1](0, 0) = -std::sin(x(0) / rho) / rho;
    return H;
  };
  return c;
}

}  // namespace layerlab
