#include "layerlab/experiment.hpp"

#include <chrono>
#include <cmath>

namespace layerlab {

namespace {

double param_or(const std::map<std::string, double>& params, const std::string& key, double def) {
  const auto it = params.find(key);
  return it == params.end() ? def : it->second;
}

class StageClock {
 public:
  explicit StageClock(std::vector<StageTiming>& sink) : sink_(sink) {}
  template <typename F>
  auto run(const std::string& stage, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    auto result = f();
    sink_.push_back({stage, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()});
    return result;
  }

 private:
  std::vector<StageTiming>& sink_;
};

}  // namespace

ImmersionChart catalog_surface(const std::string& name, const std::map<std::string, double>& params,
                               const SurfaceSpec* spec) {
  if (name == "plane") return make_plane();
  if (name == "gaussian_bump")
    return make_gaussian_bump(param_or(params, "height", 1.0), param_or(params, "width", 1.0));
  if (name == "smoothed_cone")
    return make_smoothed_cone(param_or(params, "slope", 1.0), param_or(params, "smoothing", 0.5));
  if (name == "windowed_saddle")
    return make_windowed_saddle(param_or(params, "amplitude", 1.0), param_or(params, "sigma", 2.0));
  if (name == "rotational_graph") {
    if (!spec || spec->profile_r.empty())
      fail(ErrorCode::BadParameters, "rotational_graph needs a (profile_r, profile_z) table");
    return make_rotational_graph(spec->profile_r, spec->profile_z);
  }
  if (name == "sphere")
    return make_sphere(param_or(params, "radius", 1.0), param_or(params, "patch_radius", 1.0));
  if (name == "straight_strip") return make_straight_strip();
  if (name == "bent_strip")
    return make_bent_strip(param_or(params, "kappa", 0.5),
                           param_or(params, "arc_half_angle", M_PI / 2.0));
  if (name == "circle_strip") return make_circle_strip(param_or(params, "radius", 1.0));
  fail(ErrorCode::UnknownSurface, "no catalog surface named '" + name + "'");
}

LayerGeometry make_layer(const ExperimentConfig& cfg) {
  LayerGeometry layer;
  layer.base = catalog_surface(cfg.surface.kind, cfg.surface.params, &cfg.surface);
  if (cfg.surface.euler_char) layer.base.euler_char = cfg.surface.euler_char;
  layer.half_width = cfg.half_width;
  layer.safety_c0 = cfg.safety_c0;
  layer.sample_radius =
      cfg.sample_radius > 0 ? cfg.sample_radius : cfg.ladder.truncation_radii.back();
  layer.seed = cfg.seed;
  return layer;
}

ExperimentReport run_experiment(const ExperimentConfig& cfg, ExperimentStage stage) {
  ExperimentReport rep;
  StageClock clock(rep.timings);

  LayerGeometry layer = make_layer(cfg);
  const ImmersionChart& chart = layer.base;
  rep.surface_name = chart.name;
  rep.dim_base = chart.dim_base;
  rep.kappa1 = transverse_threshold(cfg.half_width);
  const CertifyOptions copts = cfg.certify_options();

  // Geometry diagnostics.
  rep.flatness = clock.run("flatness", [&] {
    return asymptotic_flatness_report(chart, cfg.flatness_radii);
  });
  const bool growth_possible = chart.dim_base == 1 || !chart.ends.empty();
  if (growth_possible)
    rep.growth = clock.run("growth_fit", [&] {
      GrowthOptions gopts = copts.growth;
      return volume_growth_fit(chart, cfg.growth_radii, gopts);
    });

  // Validity gate.
  rep.validity = clock.run("validity", [&] { return validity_check(layer); });
  if (!rep.validity->passed) {
    rep.aborted_stage = "validity";
    return rep;
  }
  if (stage == ExperimentStage::Describe) return rep;

  // Mesh/assembly/eigensolve ladder.
  if (stage != ExperimentStage::Certify || cfg.certificates.eigen_gap) {
    LadderOptions lopts;
    lopts.eigen_count = cfg.ladder.eigen_count;
    lopts.solver_tol = cfg.ladder.solver_tol;
    lopts.shift_factor = cfg.ladder.shift_factor;
    lopts.seed = cfg.seed ? cfg.seed : 0x5eed;
    rep.study = clock.run("spectral_ladder", [&] {
      return refinement_study(layer, cfg.ladder.truncation_radii, cfg.ladder.h_levels, lopts);
    });
  }
  if (stage == ExperimentStage::Spectrum) return rep;

  // Certificates.
  if (cfg.certificates.eigen_gap && rep.study)
    rep.certificates.push_back(eigen_gap_certificate(*rep.study, *rep.validity, *rep.flatness));

  if (cfg.certificates.variational) {
    auto cert = clock.run("variational", [&] {
      const Mesh vmesh = build_mesh(layer, cfg.variational_mesh.truncation_R,
                                    cfg.variational_mesh.h_base, cfg.variational_mesh.h_u);
      const OperatorPair vpair = assemble(vmesh, layer);
      return variational_certificate(layer, vmesh, vpair, cfg.variational);
    });
    cert.assumptions.push_back({"layer_validity", rep.validity->passed, ""});
    cert.assumptions.push_back({"asymptotic_flatness", rep.flatness->flat,
                                "essential spectrum threshold taken as kappa_1"});
    if (!rep.flatness->flat) cert.verdict = Verdict::Inconclusive;
    rep.certificates.push_back(cert);
  }

  if (cfg.certificates.integral_invariant) {
    std::vector<double> coeffs = chart.dim_base >= 2 ? cfg.mu : std::vector<double>{};
    rep.certificates.push_back(clock.run("integral_invariant", [&] {
      return condition_integral_invariant(chart, coeffs, cfg.integral_radii, copts);
    }));
  }

  if (cfg.certificates.euler_isoperimetric && chart.dim_base == 2 && chart.euler_char) {
    rep.certificates.push_back(clock.run("euler_isoperimetric", [&] {
      return euler_isoperimetric_condition(chart, *chart.euler_char, cfg.growth_radii, copts);
    }));
  }

  if (cfg.certificates.hartman && chart.dim_base == 2 && chart.euler_char) {
    rep.hartman = clock.run("hartman", [&] {
      return hartman_check(chart, *chart.euler_char, cfg.growth_radii, copts);
    });
  }

  if (cfg.certificates.mean_curvature_growth) {
    rep.certificates.push_back(clock.run("mean_curvature_growth", [&] {
      return mean_curvature_growth(chart, cfg.growth_radii, cfg.mean_growth_mode, cfg.growth_eps,
                                   copts);
    }));
  }

  if (cfg.certificates.nonparabolic && chart.dim_base == 2) {
    const double m = cfg.declared_m ? *cfg.declared_m
                     : rep.growth   ? rep.growth->exponent_m
                                    : 2.0;
    const double C = cfg.declared_C ? *cfg.declared_C
                     : rep.growth   ? rep.growth->constant_C / M_PI
                                    : 1.0;
    const std::vector<double>& np_radii =
        cfg.nonparabolic_radii.empty() ? cfg.integral_radii : cfg.nonparabolic_radii;
    rep.certificates.push_back(clock.run("nonparabolic", [&] {
      return nonparabolic_condition(chart, cfg.mu, m, C, cfg.c1, np_radii, cfg.flatness_radii,
                                    copts);
    }));
  }

  return rep;
}

}  // namespace layerlab
