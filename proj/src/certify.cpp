#include "layerlab/certify.hpp"

#include <cmath>

namespace layerlab {

const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::EigenGap: return "eigen_gap";
    case CertificateKind::Variational: return "variational";
    case CertificateKind::IntegralInvariant: return "integral_invariant";
    case CertificateKind::EulerIsoperimetric: return "euler_isoperimetric";
    case CertificateKind::MeanCurvatureGrowth: return "mean_curvature_growth";
    case CertificateKind::NonparabolicCondition: return "nonparabolic_condition";
  }
  return "unknown";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::GroundStateCertified: return "GroundStateCertified";
    case Verdict::ConditionSatisfied: return "ConditionSatisfied";
    case Verdict::ConditionFailed: return "ConditionFailed";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "unknown";
}

namespace {

void require_increasing(const std::vector<double>& radii, size_t min_count) {
  if (radii.size() < min_count)
    fail(ErrorCode::InsufficientRadii, "need at least " + std::to_string(min_count) + " radii");
  for (size_t i = 1; i < radii.size(); ++i)
    if (!(radii[i] > radii[i - 1]))
      fail(ErrorCode::InsufficientRadii, "radii must be strictly increasing");
}

/// Partial integrals of an invariant across radii plus tail diagnostics.
struct TailSweep {
  std::vector<double> partial;
  double tail_bound = 0;
  bool increments_decay = false;
};

TailSweep sweep_integral(const ImmersionChart& chart, const BallIntegrator::Field& field,
                         const std::vector<double>& radii, const CertifyOptions& opts,
                         double hard_floor) {
  BallIntegrator bi(chart, opts.mode, opts.quad, radii.back());
  TailSweep sweep;
  for (double r : radii) sweep.partial.push_back(bi.integrate(field, r));

  std::vector<double> inc;
  for (size_t k = 1; k < sweep.partial.size(); ++k)
    inc.push_back(std::abs(sweep.partial[k] - sweep.partial[k - 1]));
  const size_t k0 = inc.size() / 2;
  sweep.increments_decay = inc.back() <= inc[k0] * 1.05 + hard_floor;
  if (!sweep.increments_decay && inc.back() > 10.0 * hard_floor)
    fail(ErrorCode::NonConvergentTail, "partial-integral increments do not decay");
  const double last = inc.back();
  const double prev = inc.size() > 1 ? inc[inc.size() - 2] : last;
  const double q = prev > 0 ? last / prev : 0.0;
  sweep.tail_bound = (q > 0 && q < 1) ? last * q / (1 - q) : last;
  return sweep;
}

}  // namespace

Certificate eigen_gap_certificate(const RefinementStudy& study, const ValidityReport& validity,
                                  const FlatnessReport& flatness) {
  Certificate cert;
  cert.kind = CertificateKind::EigenGap;
  cert.numbers["kappa1"] = study.kappa1;
  cert.numbers["lambda1_extrapolated"] = study.extrapolated_lambda1;
  cert.numbers["error_bar"] = study.error_bar;
  cert.numbers["gap"] = study.kappa1 - study.extrapolated_lambda1;
  cert.numbers["safety_margin"] = study.safety_margin;
  cert.assumptions.push_back({"layer_validity", validity.passed,
                              "a sup||A|| = " + std::to_string(validity.a_sup_spectral)});
  cert.assumptions.push_back(
      {"asymptotic_flatness", flatness.flat, "essential spectrum threshold taken as kappa_1"});
  const bool hypotheses = validity.passed && flatness.flat;
  cert.verdict = (hypotheses && study.below_threshold) ? Verdict::GroundStateCertified
                                                       : Verdict::Inconclusive;
  if (!study.table.empty()) {
    const LadderLevel& fine = study.table.back();
    cert.provenance["truncation_R"] = std::to_string(fine.truncation_R);
    cert.provenance["h_base"] = std::to_string(fine.h_base);
    cert.provenance["h_u"] = std::to_string(fine.h_u);
    cert.provenance["dofs"] = std::to_string(fine.dofs);
  }
  return cert;
}

Certificate variational_certificate(const LayerGeometry& layer, const Mesh& mesh,
                                    const OperatorPair& pair, const VariationalFamily& family,
                                    double margin) {
  if (!pair.reduced) fail(ErrorCode::BadParameters, "variational certificate expects reduced pair");
  const double a = layer.half_width;
  const double kappa1 = transverse_threshold(a);
  if (margin < 0) margin = 1e-3 * kappa1;
  const double rp = family.plateau_radius, rc = family.cutoff_radius;
  if (!(rc > rp) || !(rp > 0)) fail(ErrorCode::BadParameters, "need 0 < plateau < cutoff");

  const auto lateral = [&](double s) -> double {
    if (s <= rp) return 1.0;
    if (s >= rc) return 0.0;
    switch (family.shape) {
      case CutoffShape::Linear: return (rc - s) / (rc - rp);
      case CutoffShape::Logarithmic: return std::log(rc / s) / std::log(rc / rp);
      case CutoffShape::PolynomialDecay: {
        const double p = 1.0 - family.decay_m / 2.0; // r^{1 - m/2} style decay
        return (std::pow(s, p) - std::pow(rc, p)) / (std::pow(rp, p) - std::pow(rc, p));
      }
    }
    return 0.0;
  };

  const int nb = mesh.base_dim;
  Vec v(pair.stiffness.rows());
  Vec w(pair.stiffness.rows());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const Vec& c = mesh.node_coords[static_cast<size_t>(pair.dof_map[static_cast<size_t>(i)])];
    const double s = nb > 0 ? c.head(nb).norm() : 0.0;
    const double chi = std::cos(M_PI * c(nb) / (2.0 * a));
    v(i) = lateral(s) * chi;
    w(i) = lateral(s) * c(nb) * chi;
  }
  if (!(v.norm() > 0)) fail(ErrorCode::ZeroVector, "cutoff annihilates the trial function");

  const double q_product = rayleigh_quotient(pair, v);
  double q = q_product;
  double mix = 0.0;
  if (family.odd_deformation) {
    // Minimize the quotient over span{phi chi_1, phi u chi_1}: a 2x2 pencil.
    Mat V(v.size(), 2);
    V.col(0) = v;
    V.col(1) = w;
    const Mat A = V.transpose() * (pair.stiffness * V);
    const Mat B = V.transpose() * (pair.mass * V);
    Eigen::GeneralizedSelfAdjointEigenSolver<Mat> es(A, B);
    q = es.eigenvalues()(0);
    const Vec combo = es.eigenvectors().col(0);
    mix = std::abs(combo(0)) > 1e-300 ? combo(1) / combo(0) : 0.0;
  }
  Certificate cert;
  cert.kind = CertificateKind::Variational;
  cert.numbers["rayleigh_quotient"] = q;
  cert.numbers["rayleigh_quotient_product"] = q_product;
  cert.numbers["deformation_mix"] = mix;
  cert.numbers["kappa1"] = kappa1;
  cert.numbers["margin"] = margin;
  cert.numbers["gap"] = kappa1 - q;
  cert.numbers["plateau_radius"] = rp;
  cert.numbers["cutoff_radius"] = rc;
  cert.provenance["cutoff_shape"] = family.shape == CutoffShape::Linear ? "linear"
                                    : family.shape == CutoffShape::Logarithmic ? "logarithmic"
                                                                               : "polynomial";
  cert.provenance["truncation_R"] = std::to_string(mesh.truncation_radius);
  cert.verdict = q < kappa1 - margin ? Verdict::GroundStateCertified : Verdict::Inconclusive;
  return cert;
}

Certificate condition_integral_invariant(const ImmersionChart& chart,
                                         const std::vector<double>& coeffs,
                                         const std::vector<double>& radii,
                                         const CertifyOptions& opts) {
  require_increasing(radii, 3);
  const auto field = [&](const Vec& x) { return curvature_invariant(chart, x, coeffs); };
  const TailSweep sweep = sweep_integral(chart, field, radii, opts, opts.tol_integral);

  Certificate cert;
  cert.kind = CertificateKind::IntegralInvariant;
  const double I_inf = sweep.partial.back();
  cert.numbers["I_last"] = sweep.partial.back();
  cert.numbers["I_inf_estimate"] = I_inf;
  cert.numbers["tail_bound"] = sweep.tail_bound;
  cert.numbers["tol"] = opts.tol_integral;
  cert.assumptions.push_back({"integrable_invariant", sweep.increments_decay,
                              "partial-integral increments decay across radii"});
  cert.verdict = I_inf <= opts.tol_integral ? Verdict::ConditionSatisfied : Verdict::ConditionFailed;
  cert.provenance["ball_mode"] = opts.mode == BallMode::Parameter ? "parameter" : "geodesic";
  cert.provenance["r_max"] = std::to_string(radii.back());
  cert.provenance["trace"] = "I(r)";
  for (size_t k = 0; k < radii.size(); ++k) cert.trace.emplace_back(radii[k], sweep.partial[k]);
  return cert;
}

Certificate euler_isoperimetric_condition(const ImmersionChart& chart, double euler_char,
                                          const std::vector<double>& radii,
                                          const CertifyOptions& opts) {
  if (chart.dim_base != 2)
    fail(ErrorCode::UnsupportedDimension, "isoperimetric constants defined for n = 2");
  const GrowthFit fit = volume_growth_fit(chart, radii, opts.growth);
  double sum_lambda = 0;
  for (double l : fit.end_constants) sum_lambda += l;

  Certificate cert;
  cert.kind = CertificateKind::EulerIsoperimetric;
  cert.numbers["euler_char"] = euler_char;
  cert.numbers["sum_lambda"] = sum_lambda;
  for (size_t i = 0; i < fit.end_constants.size(); ++i)
    cert.numbers["lambda_" + std::to_string(i)] = fit.end_constants[i];
  cert.numbers["value"] = euler_char - sum_lambda;
  cert.numbers["tol"] = opts.tol_euler;
  cert.numbers["growth_exponent_m"] = fit.exponent_m;
  cert.assumptions.push_back({"ends_declared", !chart.ends.empty(), "lambda_i need declared ends"});
  cert.assumptions.push_back({"parabolic_base", fit.parabolic,
                              "m = " + std::to_string(fit.exponent_m)});
  cert.verdict = (euler_char - sum_lambda) <= opts.tol_euler ? Verdict::ConditionSatisfied
                                                             : Verdict::ConditionFailed;
  cert.provenance["ball_mode"] = opts.growth.mode == BallMode::Parameter ? "parameter" : "geodesic";
  cert.provenance["r_max"] = std::to_string(radii.back());
  cert.provenance["trace"] = "V(r)/(pi r^2)";
  for (size_t k = 0; k < fit.radii.size(); ++k)
    cert.trace.emplace_back(fit.radii[k], fit.volumes[k] / (M_PI * fit.radii[k] * fit.radii[k]));
  return cert;
}

HartmanCheck hartman_check(const ImmersionChart& chart, double euler_char,
                           const std::vector<double>& radii, const CertifyOptions& opts) {
  if (chart.dim_base != 2) fail(ErrorCode::UnsupportedDimension, "Hartman identity is for n = 2");
  require_increasing(radii, 5);
  const auto field = [&](const Vec& x) { return curvatures(chart, x).gauss; };
  const TailSweep sweep = sweep_integral(chart, field, radii, opts, opts.tol_integral);
  const GrowthFit fit = volume_growth_fit(chart, radii, opts.growth);
  double sum_lambda = 0;
  for (double l : fit.end_constants) sum_lambda += l;

  HartmanCheck check;
  check.total_curvature_term = sweep.partial.back() / (2.0 * M_PI);
  check.euler_term = euler_char - sum_lambda;
  check.residual = check.total_curvature_term - check.euler_term;
  return check;
}

Certificate mean_curvature_growth(const ImmersionChart& chart, const std::vector<double>& radii,
                                  MeanGrowthMode mode, double eps, const CertifyOptions& opts) {
  require_increasing(radii, 5);
  if (!(radii.back() >= 10.0 * radii.front()))
    fail(ErrorCode::InsufficientRadii, "radii must span at least one decade");
  BallIntegrator bi(chart, opts.mode, opts.quad, radii.back());
  const auto field = [&](const Vec& x) {
    const double h = curvatures(chart, x).mean;
    return mode == MeanGrowthMode::Absolute ? std::abs(h) : h;
  };
  std::vector<double> growth;
  for (double r : radii) growth.push_back(std::abs(bi.integrate(field, r)) / r);

  const size_t k0 = radii.size() / 2;
  double estimate = 0;
  std::vector<double> rh(radii.begin() + static_cast<long>(k0), radii.end());
  std::vector<double> gh(growth.begin() + static_cast<long>(k0), growth.end());
  for (double g : gh) estimate = std::max(estimate, g);
  const auto [slope, intercept] = linear_fit(rh, gh);
  (void)intercept;
  const double projected_drop = slope * (rh.back() - rh.front());
  const bool stable = projected_drop >= -0.25 * std::max(estimate, eps);

  Certificate cert;
  cert.kind = CertificateKind::MeanCurvatureGrowth;
  cert.numbers["limsup_estimate"] = estimate;
  cert.numbers["eps"] = eps;
  cert.numbers["trend_slope"] = slope;
  cert.numbers["G_last"] = growth.back();
  cert.assumptions.push_back({"stable_trend", stable, "large-radius growth not decaying"});
  cert.verdict = (estimate >= eps && stable) ? Verdict::ConditionSatisfied : Verdict::ConditionFailed;
  cert.provenance["mode"] = mode == MeanGrowthMode::Absolute ? "absolute" : "signed";
  cert.provenance["ball_mode"] = opts.mode == BallMode::Parameter ? "parameter" : "geodesic";
  cert.provenance["r_max"] = std::to_string(radii.back());
  cert.provenance["trace"] = "G(r)";
  for (size_t k = 0; k < radii.size(); ++k) cert.trace.emplace_back(radii[k], growth[k]);
  return cert;
}

Certificate nonparabolic_condition(const ImmersionChart& chart, const std::vector<double>& coeffs,
                                   double m, double C, double c1,
                                   const std::vector<double>& radii,
                                   const std::vector<double>& flatness_radii,
                                   const CertifyOptions& opts) {
  require_increasing(radii, 3);
  const FlatnessReport flat = asymptotic_flatness_report(chart, flatness_radii);

  BallIntegrator bi(chart, opts.mode, opts.quad, radii.back());
  const auto field = [&](const Vec& x) { return curvature_invariant(chart, x, coeffs); };
  std::vector<double> scaled;
  for (double r : radii) scaled.push_back(std::pow(r, 2.0 - m) * bi.integrate(field, r));

  const double euler_e = std::exp(1.0);
  const double threshold = -0.25 * C * c1 * m * m * euler_e * euler_e;
  const size_t k0 = radii.size() / 2;
  bool below = true;
  for (size_t k = k0; k < scaled.size(); ++k) below = below && scaled[k] < threshold;

  Certificate cert;
  cert.kind = CertificateKind::NonparabolicCondition;
  cert.numbers["threshold"] = threshold;
  cert.numbers["L_last"] = scaled.back();
  cert.numbers["m"] = m;
  cert.numbers["C"] = C;
  cert.numbers["C1"] = c1;
  cert.numbers["r2_supA_last"] = flat.r2_sup_norm_a.back();
  cert.assumptions.push_back({"strong_decay", flat.strong_decay, "r^2 sup||A|| -> 0 required"});
  if (!flat.strong_decay) {
    cert.verdict = Verdict::Inconclusive; // hypothesis unmet forces inconclusive
  } else {
    cert.verdict = below ? Verdict::ConditionSatisfied : Verdict::ConditionFailed;
  }
  cert.provenance["ball_mode"] = opts.mode == BallMode::Parameter ? "parameter" : "geodesic";
  cert.provenance["r_max"] = std::to_string(radii.back());
  cert.provenance["trace"] = "L(R)";
  for (size_t k = 0; k < radii.size(); ++k) cert.trace.emplace_back(radii[k], scaled[k]);
  return cert;
}

}  // namespace layerlab
