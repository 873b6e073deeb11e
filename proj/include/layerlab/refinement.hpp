#pragma once

#include "layerlab/spectral.hpp"

namespace layerlab {

struct LadderLevel {
  double truncation_R = 0, h_base = 0, h_u = 0;
  int dofs = 0;
  std::vector<double> eigenvalues;
  double lambda1 = 0;
  double residual = 0;
  double seconds = 0;
};

struct RefinementStudy {
  std::vector<LadderLevel> table;     // all (R, h) combinations, R-major
  double kappa1 = 0;
  double extrapolated_lambda1 = 0;    // Richardson in h at the largest R
  double error_bar = 0;               // |lambda(h) - lambda(h/2)| / (ratio^2 - 1)
  bool below_threshold = false;       // gap beats error bar + safety margin
  bool monotone_in_R = true;
  double safety_margin = 0;           // 1e-3 * kappa1
};

struct LadderOptions {
  int eigen_count = 1;
  double solver_tol = 1e-9;
  std::uint64_t seed = 0x5eed;
  double shift_factor = 0.9; // shift = factor * kappa1
};

/// lambda_1 across the (truncation, resolution) ladder with Richardson
/// extrapolation at the largest truncation. Dirichlet bracketing makes
/// lambda_1 non-increasing in R; violations flag quadrature or mesh bugs.
RefinementStudy refinement_study(const LayerGeometry& layer, const std::vector<double>& R_list,
                                 const std::vector<std::pair<double, double>>& h_levels,
                                 const LadderOptions& opts = {});

}  // namespace layerlab
