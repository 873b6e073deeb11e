#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "layerlab/certify.hpp"
#include "layerlab/surfaces.hpp"
#include "oracles.hpp"

using namespace layerlab;

namespace {

LayerGeometry layer_of(ImmersionChart c, double a, double c0 = 0.9) {
  LayerGeometry l;
  l.base = std::move(c);
  l.half_width = a;
  l.safety_c0 = c0;
  return l;
}

const std::vector<double> kIntegralRadii = {1, 1.5, 2, 3, 4, 5, 6, 8};
const std::vector<double> kGrowthRadii = {2.5, 4, 6, 9, 13, 18, 25};

CertifyOptions fast_opts() {
  CertifyOptions o;
  o.quad.radial_cells = 128;
  o.quad.angular_cells = 128;
  o.growth.quad.geodesic_grid_h = 0.08;
  return o;
}

}  // namespace

TEST_CASE("integral invariant condition") {
  const CertifyOptions opts = fast_opts();
  SUBCASE("plane: boundary case, satisfied") {
    const Certificate c =
        condition_integral_invariant(make_plane(), {1.0}, kIntegralRadii, opts);
    CHECK(c.verdict == Verdict::ConditionSatisfied);
    CHECK(std::abs(c.numbers.at("I_inf_estimate")) < 1e-12);
  }
  SUBCASE("bump: I(inf) = 0 within tolerance, satisfied") {
    const Certificate c =
        condition_integral_invariant(make_gaussian_bump(1, 1), {1.0}, kIntegralRadii, opts);
    CHECK(c.verdict == Verdict::ConditionSatisfied);
    CHECK(std::abs(c.numbers.at("I_inf_estimate")) < 1e-3);
    CHECK(c.trace.size() == kIntegralRadii.size());
  }
  SUBCASE("smoothed cone: positive total curvature, failed") {
    const Certificate c =
        condition_integral_invariant(make_smoothed_cone(1.0, 0.5), {1.0}, kIntegralRadii, opts);
    CHECK(c.verdict == Verdict::ConditionFailed);
    // Closed form: 2 pi (1 - cos(theta)) with tan(theta) = slope.
    const double expect = 2.0 * M_PI * (1.0 - 1.0 / std::sqrt(2.0));
    CHECK(c.numbers.at("I_inf_estimate") == doctest::Approx(expect).epsilon(0.01));
  }
}

TEST_CASE("growing increments raise NonConvergentTail") {
  // Inside the saddle core the partial curvature integrals accelerate.
  const CertifyOptions opts = fast_opts();
  CHECK_THROWS_AS(condition_integral_invariant(make_windowed_saddle(1.5, 2.0), {1.0},
                                               {1.5, 2.0, 2.5, 3.0}, opts),
                  Error);
}

TEST_CASE("euler isoperimetric condition") {
  const CertifyOptions opts = fast_opts();
  SUBCASE("plane: e = 1, lambda = 1, boundary satisfied") {
    const Certificate c = euler_isoperimetric_condition(make_plane(), 1.0, kGrowthRadii, opts);
    CHECK(c.verdict == Verdict::ConditionSatisfied);
    CHECK(c.numbers.at("value") == doctest::Approx(0.0).epsilon(0.02));
  }
  SUBCASE("bump: matches the integral condition on the boundary case") {
    const Certificate c =
        euler_isoperimetric_condition(make_gaussian_bump(1, 1), 1.0, kGrowthRadii, opts);
    CHECK(c.verdict == Verdict::ConditionSatisfied);
    CHECK(std::abs(c.numbers.at("value")) < 0.02);
  }
  SUBCASE("smoothed cone: 1 - 1/sqrt(2) > 0, failed") {
    const Certificate c =
        euler_isoperimetric_condition(make_smoothed_cone(1.0, 0.5), 1.0, kGrowthRadii, opts);
    CHECK(c.verdict == Verdict::ConditionFailed);
    CHECK(c.numbers.at("value") == doctest::Approx(1.0 - 1.0 / std::sqrt(2.0)).epsilon(0.1));
  }
}

TEST_CASE("hartman identity cross-check") {
  const CertifyOptions opts = fast_opts();
  for (const char* kind : {"plane", "bump", "cone"}) {
    ImmersionChart chart = std::string(kind) == "plane" ? make_plane()
                           : std::string(kind) == "bump" ? make_gaussian_bump(1, 1)
                                                         : make_smoothed_cone(1.0, 0.5);
    const HartmanCheck check = hartman_check(chart, 1.0, kGrowthRadii, opts);
    INFO(kind, ": lhs=", check.total_curvature_term, " rhs=", check.euler_term);
    CHECK(std::abs(check.residual) < 0.02);
  }
}

TEST_CASE("mean curvature growth") {
  const CertifyOptions opts = fast_opts();
  SUBCASE("plane: identically zero, failed for any eps") {
    const Certificate c =
        mean_curvature_growth(make_plane(), kGrowthRadii, MeanGrowthMode::Signed, 0.05, opts);
    CHECK(c.verdict == Verdict::ConditionFailed);
    CHECK(c.numbers.at("limsup_estimate") == 0.0);
  }
  SUBCASE("bump: Gaussian decay, failed") {
    const Certificate c = mean_curvature_growth(make_gaussian_bump(1, 1), kGrowthRadii,
                                                MeanGrowthMode::Signed, 0.05, opts);
    CHECK(c.verdict == Verdict::ConditionFailed);
  }
  SUBCASE("smoothed cone: G(r) tends to a positive constant") {
    const Certificate c = mean_curvature_growth(make_smoothed_cone(1.0, 0.5), kGrowthRadii,
                                                MeanGrowthMode::Signed, 0.5, opts);
    CHECK(c.verdict == Verdict::ConditionSatisfied);
    // Radial oracle for the last sample of G(r).
    const auto fp = [](double r) { return r / std::sqrt(r * r + 0.25); };
    const auto fpp = [](double r) {
      const double q = std::sqrt(r * r + 0.25);
      return 0.25 / (q * q * q);
    };
    const double R = kGrowthRadii.back();
    const double expect = std::abs(oracles::radial_mean_integral(fp, fpp, R)) / R;
    CHECK(c.numbers.at("G_last") == doctest::Approx(expect).epsilon(0.01));
  }
  SUBCASE("absolute mode dominates the signed mode") {
    const Certificate cs = mean_curvature_growth(make_windowed_saddle(1.5, 2.0), kGrowthRadii,
                                                 MeanGrowthMode::Signed, 1e9, opts);
    const Certificate ca = mean_curvature_growth(make_windowed_saddle(1.5, 2.0), kGrowthRadii,
                                                 MeanGrowthMode::Absolute, 1e9, opts);
    CHECK(ca.numbers.at("limsup_estimate") + 1e-12 >= cs.numbers.at("limsup_estimate"));
  }
}

TEST_CASE("positive partial total curvature comes with |H| growth on the catalog") {
  const CertifyOptions opts = fast_opts();
  for (ImmersionChart chart : {make_gaussian_bump(1, 1), make_smoothed_cone(1.0, 0.5)}) {
    BallIntegrator bi(chart, BallMode::Parameter, opts.quad, 3.0);
    const double partial =
        bi.integrate([&](const Vec& x) { return curvatures(chart, x).gauss; }, 3.0);
    if (partial <= 0.1) continue;
    const Certificate c = mean_curvature_growth(chart, {0.5, 1, 2, 3, 4, 5, 6},
                                                MeanGrowthMode::Absolute, 1e-6, opts);
    CHECK(c.numbers.at("limsup_estimate") > 0.0);
  }
}

TEST_CASE("nonparabolic condition") {
  const CertifyOptions opts = fast_opts();
  const std::vector<double> flat_radii = {4, 6, 8, 10, 12};
  SUBCASE("plane: L = 0 above a negative threshold, failed") {
    const Certificate c = nonparabolic_condition(make_plane(), {1.0}, 2.0, 1.0, 1.0,
                                                 kIntegralRadii, flat_radii, opts);
    CHECK(c.verdict == Verdict::ConditionFailed);
    CHECK(std::abs(c.numbers.at("L_last")) < 1e-12);
    CHECK(c.numbers.at("threshold") < 0.0);
  }
  SUBCASE("bump with forced m = 2 reduces to the integral condition") {
    const Certificate c = nonparabolic_condition(make_gaussian_bump(1, 1), {1.0}, 2.0, 1.0, 1.0,
                                                 kIntegralRadii, flat_radii, opts);
    CHECK(std::abs(c.numbers.at("L_last")) < 1e-3); // L(inf) = I(inf) = 0
    CHECK(c.verdict == Verdict::ConditionFailed);   // 0 is not below the negative threshold
  }
  SUBCASE("windowed saddle with declared m = 3 satisfies a small-C1 threshold") {
    // K <= -delta pointwise on an annulus in the saddle core; the far field
    // decays at Gaussian rate so the strong-decay hypothesis holds.
    const ImmersionChart saddle = make_windowed_saddle(1.5, 2.0);
    for (double rho : {0.3, 0.5, 0.7}) {
      for (int k = 0; k < 16; ++k) {
        const double th = 2 * M_PI * k / 16;
        Vec x(2);
        x << rho * std::cos(th), rho * std::sin(th);
        CHECK(curvatures(saddle, x).gauss < -0.05);
      }
    }
    // Sample inside the negative-curvature window: beyond rho ~ 2 sigma the
    // compensating positive ring takes over and I(R) drains back to zero.
    const Certificate c = nonparabolic_condition(saddle, {1.0}, 3.0, 0.05, 0.05,
                                                 {0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0},
                                                 flat_radii, opts);
    CHECK(c.verdict == Verdict::ConditionSatisfied);
    CHECK(c.numbers.at("L_last") < c.numbers.at("threshold"));
  }
  SUBCASE("failed decay hypothesis forces Inconclusive") {
    const Certificate c = nonparabolic_condition(make_smoothed_cone(1.0, 0.5), {1.0}, 3.0, 1.0,
                                                 1.0, kIntegralRadii, flat_radii, opts);
    CHECK(c.verdict == Verdict::Inconclusive); // r^2 ||A|| grows on the cone
    bool found = false;
    for (const auto& a : c.assumptions)
      if (a.name == "strong_decay") {
        found = true;
        CHECK_FALSE(a.satisfied);
      }
    CHECK(found);
  }
}

TEST_CASE("variational certificate") {
  SUBCASE("flat layer: quotient never drops below kappa_1") {
    const LayerGeometry flat = layer_of(make_plane(), 0.5);
    const Mesh mesh = build_mesh(flat, 12.0, 0.5, 0.125);
    const OperatorPair pair = assemble(mesh, flat);
    VariationalFamily family;
    family.plateau_radius = 3.0;
    family.cutoff_radius = 11.0;
    for (CutoffShape shape : {CutoffShape::Linear, CutoffShape::Logarithmic,
                              CutoffShape::PolynomialDecay}) {
      family.shape = shape;
      const Certificate c = variational_certificate(flat, mesh, pair, family);
      CHECK(c.verdict == Verdict::Inconclusive);
      CHECK(c.numbers.at("rayleigh_quotient") >= transverse_threshold(0.5));
    }
  }
  SUBCASE("long bent strip: certified, and q bounds lambda_1 from above") {
    const double kappa1 = transverse_threshold(0.5);
    const LayerGeometry bent = layer_of(make_bent_strip(0.5, 2.0 * M_PI), 0.5);
    const Mesh mesh = build_mesh(bent, 48.0, 0.25, 1.0 / 48.0);
    const OperatorPair pair = assemble(mesh, bent);
    VariationalFamily family;
    family.plateau_radius = 8.0;
    family.cutoff_radius = 46.0;
    family.shape = CutoffShape::Logarithmic;
    const Certificate c = variational_certificate(bent, mesh, pair, family);
    CHECK(c.verdict == Verdict::GroundStateCertified);
    const double q = c.numbers.at("rayleigh_quotient");
    CHECK(q < kappa1 - c.numbers.at("margin"));

    SolveOptions sopts;
    sopts.shift = 0.9 * kappa1;
    const double lam1 = lowest_eigenpairs(pair, 1, sopts).eigenvalues[0];
    CHECK(q >= lam1 - 1e-10); // variational bound sits above the eigensolver
  }
  SUBCASE("degenerate cutoff parameters are rejected") {
    const LayerGeometry flat = layer_of(make_plane(), 0.5);
    const Mesh mesh = build_mesh(flat, 4.0, 0.5, 0.125);
    const OperatorPair pair = assemble(mesh, flat);
    VariationalFamily family;
    family.plateau_radius = 11.0;
    family.cutoff_radius = 3.0; // cutoff below plateau
    CHECK_THROWS_AS(variational_certificate(flat, mesh, pair, family), Error);
  }
}

TEST_CASE("eigen gap certificate wiring") {
  const LayerGeometry bent = layer_of(make_bent_strip(0.5), 0.5);
  LadderOptions lopts;
  const RefinementStudy study =
      refinement_study(bent, {16.0, 24.0}, {{0.2, 0.1}, {0.1, 0.05}, {0.05, 0.025}}, lopts);
  const ValidityReport validity = validity_check(bent);
  const FlatnessReport flatness = asymptotic_flatness_report(bent.base, {4, 8, 12, 16, 20});
  const Certificate cert = eigen_gap_certificate(study, validity, flatness);
  CHECK(cert.verdict == Verdict::GroundStateCertified);
  CHECK(cert.numbers.at("gap") > cert.numbers.at("error_bar") + cert.numbers.at("safety_margin"));

  // A failed hypothesis forces Inconclusive even with a numerical gap.
  FlatnessReport bad = flatness;
  bad.flat = false;
  CHECK(eigen_gap_certificate(study, validity, bad).verdict == Verdict::Inconclusive);
}

TEST_CASE("scale covariance of curvatures and thresholds") {
  // Scaling the immersion by s: K -> K/s^2, H -> H/s, kappa_1 -> kappa_1/s^2.
  const double s = 2.0;
  const ImmersionChart small = make_gaussian_bump(1, 1);
  const ImmersionChart big = make_gaussian_bump(s, s);
  Vec x(2);
  x << 0.8, -0.5;
  const CurvatureReport cs = curvatures(small, x);
  const CurvatureReport cb = curvatures(big, (s * x).eval());
  CHECK(cb.gauss == doctest::Approx(cs.gauss / (s * s)).epsilon(1e-10));
  CHECK(cb.mean == doctest::Approx(cs.mean / s).epsilon(1e-10));
  CHECK(transverse_threshold(s * 0.5) == doctest::Approx(transverse_threshold(0.5) / (s * s)));
}
