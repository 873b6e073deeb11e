#include "layerlab/refinement.hpp"

#include <chrono>
#include <cmath>

namespace layerlab {

RefinementStudy refinement_study(const LayerGeometry& layer, const std::vector<double>& R_list,
                                 const std::vector<std::pair<double, double>>& h_levels,
                                 const LadderOptions& opts) {
  if (h_levels.size() < 3) fail(ErrorCode::BadParameters, "need >= 3 refinement levels");
  if (R_list.size() < 2) fail(ErrorCode::BadParameters, "need >= 2 truncation radii");
  for (size_t i = 1; i < R_list.size(); ++i)
    if (!(R_list[i] > R_list[i - 1])) fail(ErrorCode::BadParameters, "truncations must increase");
  for (size_t i = 1; i < h_levels.size(); ++i)
    if (!(h_levels[i].first < h_levels[i - 1].first))
      fail(ErrorCode::BadParameters, "h levels must decrease");

  RefinementStudy study;
  study.kappa1 = transverse_threshold(layer.half_width);
  study.safety_margin = 1e-3 * study.kappa1;

  SolveOptions sopts;
  sopts.tol = opts.solver_tol;
  sopts.seed = opts.seed;
  sopts.shift = opts.shift_factor * study.kappa1;

  for (double R : R_list)
    for (const auto& [h, hu] : h_levels) {
      const auto t0 = std::chrono::steady_clock::now();
      const Mesh mesh = build_mesh(layer, R, h, hu);
      const OperatorPair pair = assemble(mesh, layer);
      const SpectralResult sol = lowest_eigenpairs(pair, opts.eigen_count, sopts);
      LadderLevel lvl;
      lvl.truncation_R = R;
      lvl.h_base = h;
      lvl.h_u = hu;
      lvl.dofs = static_cast<int>(pair.stiffness.rows());
      lvl.eigenvalues = sol.eigenvalues;
      lvl.lambda1 = sol.eigenvalues.front();
      lvl.residual = sol.residual_norms.front();
      lvl.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      study.table.push_back(lvl);
    }

  // Dirichlet bracketing: at fixed h, lambda_1 must not increase with R.
  const size_t nh = h_levels.size();
  for (size_t hi = 0; hi < nh; ++hi)
    for (size_t ri = 1; ri < R_list.size(); ++ri) {
      const double prev = study.table[(ri - 1) * nh + hi].lambda1;
      const double cur = study.table[ri * nh + hi].lambda1;
      if (cur > prev * (1.0 + 1e-8) + 1e-12) {
        study.monotone_in_R = false;
        fail(ErrorCode::MonotonicityViolation,
             "lambda_1 increased with truncation radius at fixed resolution");
      }
    }

  // Richardson in h from the two finest levels at the largest truncation.
  const LadderLevel& coarse = study.table[(R_list.size() - 1) * nh + (nh - 2)];
  const LadderLevel& fine = study.table[(R_list.size() - 1) * nh + (nh - 1)];
  const double ratio = coarse.h_base / fine.h_base;
  const double r2 = ratio * ratio;
  study.extrapolated_lambda1 = (r2 * fine.lambda1 - coarse.lambda1) / (r2 - 1.0);
  study.error_bar = std::abs(fine.lambda1 - coarse.lambda1) / (r2 - 1.0);
  study.below_threshold =
      study.extrapolated_lambda1 + study.error_bar + study.safety_margin < study.kappa1;
  return study;
}

}  // namespace layerlab
