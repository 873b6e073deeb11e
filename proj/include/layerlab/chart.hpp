#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "layerlab/types.hpp"

namespace layerlab {

/// One end of a complete noncompact base, described by a direction cone in
/// parameter space. A single end with half_angle >= pi covers everything.
struct End {
  Vec direction;            // unit vector in R^n
  double half_angle = M_PI; // radians
};

enum class DerivativeMode { Analytic, FiniteDifference };

/// A parametrized hypersurface patch: an immersion of a parameter domain
/// U in R^n into R^{n+1}. Derivatives come from analytic callbacks when
/// provided, otherwise from second-order central differences.
///
/// Charts are immutable after construction and safe to share across threads.
struct ImmersionChart {
  int dim_base = 2;    // n, 1 or 2
  int ambient_dim = 3; // n + 1
  std::string name;

  std::function<Vec(const Vec&)> map;                  // U -> R^{n+1}
  std::function<Mat(const Vec&)> jacobian;             // optional, (n+1) x n
  std::function<std::vector<Mat>(const Vec&)> hessian; // optional, per ambient coord, n x n

  double fd_step = 1e-5;       // h_fd for central differences
  double radius_max = 1e9;     // parameter-space radial truncation
  double orientation = +1.0;   // sign fixing the continuous unit normal
  std::vector<End> ends;
  std::optional<double> euler_char; // user-declared e(Sigma)

  DerivativeMode derivative_mode() const {
    return jacobian ? DerivativeMode::Analytic : DerivativeMode::FiniteDifference;
  }

  bool inside(const Vec& x, double slack = 1e-9) const {
    return x.norm() <= radius_max * (1.0 + slack);
  }

  Vec at(const Vec& x) const { return map(x); }

  /// Chart differential, analytic or central FD with step fd_step.
  Mat jac(const Vec& x) const;

  /// Second derivatives d^2 map_c / dx_i dx_j, one n x n block per ambient
  /// coordinate c. The FD fallback floors the step at 1e-4: second-difference
  /// rounding error grows like eps / h^2.
  std::vector<Mat> hess(const Vec& x) const;

  /// Oriented unit normal (codimension 1). Throws NormalUndefined when the
  /// Jacobian columns are linearly dependent.
  Vec normal(const Vec& x) const;

  /// FD variants are always available; used to cross-check analytic callbacks.
  Mat jac_fd(const Vec& x, double h) const;
  std::vector<Mat> hess_fd(const Vec& x, double h) const;
};

/// Reparametrize a chart by x -> phi(x) (with analytic Jacobian dphi of phi).
/// Derivatives of the composite are delegated to finite differences.
ImmersionChart reparametrize(const ImmersionChart& chart,
                             std::function<Vec(const Vec&)> phi,
                             double fd_step = 1e-5);

}  // namespace layerlab
