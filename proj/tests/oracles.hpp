// Independent analytic/brute-force oracles for the test suites. Everything
// here is computed without touching the shape-operator or assembly paths it
// is used to check.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <vector>

namespace oracles {

// Gauss curvature of a graph z = f(x, y) from the Hessian formula.
inline double graph_gauss(double fx, double fy, double fxx, double fxy, double fyy) {
  const double w = 1.0 + fx * fx + fy * fy;
  return (fxx * fyy - fxy * fxy) / (w * w);
}

// Mean curvature of a graph (upward normal convention).
inline double graph_mean(double fx, double fy, double fxx, double fxy, double fyy) {
  const double w = 1.0 + fx * fx + fy * fy;
  return ((1.0 + fy * fy) * fxx - 2.0 * fx * fy * fxy + (1.0 + fx * fx) * fyy) /
         (2.0 * std::pow(w, 1.5));
}

// Total curvature of a radial graph z = f(rho) over the parameter ball of
// radius R: 2 pi (1 - (1 + f'(R)^2)^{-1/2}) for profiles with f'(0) = 0.
inline double radial_total_curvature(double fprime_at_R) {
  return 2.0 * M_PI * (1.0 - 1.0 / std::sqrt(1.0 + fprime_at_R * fprime_at_R));
}

// Dirichlet rectangle spectrum lambda_{jk} on (0, L) x (0, W).
inline double rectangle_eigenvalue(int j, int k, double L, double W) {
  return M_PI * M_PI * (j * j / (L * L) + k * k / (W * W));
}

// Lowest Dirichlet eigenvalue of -u'' on (-a, a) by second-order central
// finite differences with n interior points (dense solve). Independent of
// the finite-element path.
inline double fd_interval_lambda1(double a, int n) {
  const double h = 2.0 * a / (n + 1);
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    T(i, i) = 2.0 / (h * h);
    if (i + 1 < n) T(i, i + 1) = T(i + 1, i) = -1.0 / (h * h);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

// Richardson-extrapolated FD estimate of the interval ground mode.
inline double fd_interval_lambda1_extrapolated(double a, int n) {
  const double c = fd_interval_lambda1(a, n);
  const double f = fd_interval_lambda1(a, 2 * n + 1); // halves h exactly
  return f + (f - c) / 3.0;
}

// Composite Simpson quadrature.
inline double simpson(const std::function<double(double)>& f, double lo, double hi, int cells) {
  if (cells % 2) ++cells;
  const double h = (hi - lo) / cells;
  double acc = f(lo) + f(hi);
  for (int i = 1; i < cells; ++i) acc += f(lo + i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

// int_{B(R)} H dSigma for a radial graph, reduced to a 1-D integral:
// 2 pi int_0^R H(rho) sqrt(1 + f'^2) rho drho with the radial mean curvature.
inline double radial_mean_integral(const std::function<double(double)>& fp,
                                   const std::function<double(double)>& fpp, double R,
                                   int cells = 4000) {
  const auto integrand = [&](double rho) {
    if (rho < 1e-9) rho = 1e-9;
    const double p = fp(rho), q = fpp(rho), w = 1.0 + p * p;
    const double H = 0.5 * (q / std::pow(w, 1.5) + p / (rho * std::sqrt(w)));
    return 2.0 * M_PI * H * std::sqrt(w) * rho;
  };
  return simpson(integrand, 0.0, R, cells);
}

// Area of the parameter ball of radius R on a radial graph.
inline double radial_area(const std::function<double(double)>& fp, double R, int cells = 4000) {
  const auto integrand = [&](double rho) {
    const double p = fp(rho);
    return 2.0 * M_PI * std::sqrt(1.0 + p * p) * rho;
  };
  return simpson(integrand, 0.0, R, cells);
}

}  // namespace oracles
