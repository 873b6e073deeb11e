#pragma once

#include <map>
#include <string>

#include "layerlab/growth.hpp"
#include "layerlab/refinement.hpp"

namespace layerlab {

enum class CertificateKind {
  EigenGap,
  Variational,
  IntegralInvariant,
  EulerIsoperimetric,
  MeanCurvatureGrowth,
  NonparabolicCondition,
};

enum class Verdict { GroundStateCertified, ConditionSatisfied, ConditionFailed, Inconclusive };

const char* to_string(CertificateKind k);
const char* to_string(Verdict v);

struct Assumption {
  std::string name;
  bool satisfied = false;
  std::string detail;
};

/// Verdict plus the numbers that produced it. GroundStateCertified is
/// reserved for the eigen-gap and variational kinds whose margin beats the
/// error bar; the curvature conditions certify only their own hypothesis.
struct Certificate {
  CertificateKind kind{};
  Verdict verdict = Verdict::Inconclusive;
  std::map<std::string, double> numbers;
  std::vector<Assumption> assumptions;
  std::map<std::string, std::string> provenance;
  std::vector<std::pair<double, double>> trace; // (r, value) curve behind the verdict
};

struct CertifyOptions {
  BallMode mode = BallMode::Parameter;
  BallQuadratureOptions quad = {};
  GrowthOptions growth = {};
  std::vector<double> mu = {1.0}; // invariant coefficients, n = 2 default
  double tol_integral = 1e-3;     // integral verdicts
  double tol_euler = 0.02;        // growth-fit verdicts
  double c1 = 1.0;                // nonparabolic threshold constant, user supplied
};

/// Spectral-gap certificate assembled from a refinement study plus the
/// hypothesis checks it consumed.
Certificate eigen_gap_certificate(const RefinementStudy& study, const ValidityReport& validity,
                                  const FlatnessReport& flatness);

/// Test function psi = phi(|x|) * cos(pi u / (2a)) interpolated on the mesh;
/// certifies when the Rayleigh quotient drops below kappa_1 by the margin.
enum class CutoffShape { Linear, Logarithmic, PolynomialDecay };

struct VariationalFamily {
  double plateau_radius = 5.0;
  double cutoff_radius = 50.0;
  CutoffShape shape = CutoffShape::Logarithmic;
  double decay_m = 3.0; // exponent for PolynomialDecay profiles, phi ~ r^{1 - m/2}

  // Adds the transverse-odd trial component phi * u * chi_1 and minimizes the
  // quotient over the two-dimensional span. The plain product phi * chi_1
  // cannot dip below kappa_1 when the total curvature vanishes; the odd
  // component couples to the mean curvature and resolves that boundary case.
  bool odd_deformation = true;
};

Certificate variational_certificate(const LayerGeometry& layer, const Mesh& mesh,
                                    const OperatorPair& pair, const VariationalFamily& family,
                                    double margin = -1);

/// I(r) = int_{B(r)} sum mu_2p K_2p across radii; satisfied when the tail
/// extrapolation stays <= tol.
Certificate condition_integral_invariant(const ImmersionChart& chart,
                                         const std::vector<double>& coeffs,
                                         const std::vector<double>& radii,
                                         const CertifyOptions& opts = {});

/// e(Sigma) - sum lambda_i <= tol with lambda_i from the volume growth fit.
Certificate euler_isoperimetric_condition(const ImmersionChart& chart, double euler_char,
                                          const std::vector<double>& radii,
                                          const CertifyOptions& opts = {});

/// Residual of (1/2pi) int K = e - sum lambda_i; a pipeline cross-check.
struct HartmanCheck {
  double total_curvature_term = 0; // (1/2pi) I_K(inf)
  double euler_term = 0;           // e - sum lambda_i
  double residual = 0;
};

HartmanCheck hartman_check(const ImmersionChart& chart, double euler_char,
                           const std::vector<double>& radii, const CertifyOptions& opts = {});

/// G(r) = (1/r) |int_{B(r)} H| (signed) or with |H| inside (absolute);
/// satisfied when the large-r estimate stays >= eps without decaying.
enum class MeanGrowthMode { Signed, Absolute };

Certificate mean_curvature_growth(const ImmersionChart& chart, const std::vector<double>& radii,
                                  MeanGrowthMode mode, double eps,
                                  const CertifyOptions& opts = {});

/// L(R) = R^{2-m} I_S(R) against the threshold -(1/4) C C1 m^2 e^2, with the
/// r^2 ||A|| -> 0 decay verdict as a required hypothesis.
Certificate nonparabolic_condition(const ImmersionChart& chart, const std::vector<double>& coeffs,
                                   double m, double C, double c1,
                                   const std::vector<double>& radii,
                                   const std::vector<double>& flatness_radii,
                                   const CertifyOptions& opts = {});

}  // namespace layerlab
