#include "layerlab/config.hpp"

#include <nlohmann/json.hpp>
#include <fstream>

namespace layerlab {

using nlohmann::json;

namespace {

template <typename T>
void read_into(const json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

BallMode mode_from(const std::string& s) {
  if (s == "parameter") return BallMode::Parameter;
  if (s == "geodesic") return BallMode::Geodesic;
  fail(ErrorCode::BadConfig, "ball_mode must be parameter|geodesic");
}

CutoffShape shape_from(const std::string& s) {
  if (s == "linear") return CutoffShape::Linear;
  if (s == "logarithmic") return CutoffShape::Logarithmic;
  if (s == "polynomial") return CutoffShape::PolynomialDecay;
  fail(ErrorCode::BadConfig, "cutoff shape must be linear|logarithmic|polynomial");
}

}  // namespace

CertifyOptions ExperimentConfig::certify_options() const {
  CertifyOptions o;
  o.mode = ball_mode;
  o.quad = quad;
  o.growth.mode = BallMode::Geodesic;
  o.growth.quad = quad;
  o.mu = mu;
  o.tol_integral = tol_integral;
  o.tol_euler = tol_euler;
  o.c1 = c1;
  return o;
}

ExperimentConfig config_from_json(const json& j) {
  ExperimentConfig cfg;
  try {
    if (j.contains("surface")) {
      const json& s = j.at("surface");
      read_into(s, "kind", cfg.surface.kind);
      if (s.contains("params"))
        for (const auto& [k, v] : s.at("params").items())
          cfg.surface.params[k] = v.get<double>();
      if (s.contains("euler_char")) cfg.surface.euler_char = s.at("euler_char").get<double>();
      read_into(s, "profile_r", cfg.surface.profile_r);
      read_into(s, "profile_z", cfg.surface.profile_z);
    }
    if (j.contains("layer")) {
      const json& l = j.at("layer");
      read_into(l, "half_width", cfg.half_width);
      read_into(l, "safety_c0", cfg.safety_c0);
      read_into(l, "sample_radius", cfg.sample_radius);
    }
    if (j.contains("ladder")) {
      const json& l = j.at("ladder");
      read_into(l, "truncation_radii", cfg.ladder.truncation_radii);
      if (l.contains("h_levels")) {
        cfg.ladder.h_levels.clear();
        for (const auto& lev : l.at("h_levels"))
          cfg.ladder.h_levels.emplace_back(lev.at(0).get<double>(), lev.at(1).get<double>());
      }
      read_into(l, "eigen_count", cfg.ladder.eigen_count);
      read_into(l, "solver_tol", cfg.ladder.solver_tol);
      read_into(l, "shift_factor", cfg.ladder.shift_factor);
    }
    if (j.contains("certificates")) {
      const json& c = j.at("certificates");
      read_into(c, "eigen_gap", cfg.certificates.eigen_gap);
      read_into(c, "variational", cfg.certificates.variational);
      read_into(c, "integral_invariant", cfg.certificates.integral_invariant);
      read_into(c, "euler_isoperimetric", cfg.certificates.euler_isoperimetric);
      read_into(c, "hartman", cfg.certificates.hartman);
      read_into(c, "mean_curvature_growth", cfg.certificates.mean_curvature_growth);
      read_into(c, "nonparabolic", cfg.certificates.nonparabolic);
    }
    if (j.contains("coefficients")) {
      const json& c = j.at("coefficients");
      read_into(c, "mu", cfg.mu);
      read_into(c, "c1", cfg.c1);
      read_into(c, "growth_eps", cfg.growth_eps);
      if (c.contains("declared_m") && !c.at("declared_m").is_null())
        cfg.declared_m = c.at("declared_m").get<double>();
      if (c.contains("declared_C") && !c.at("declared_C").is_null())
        cfg.declared_C = c.at("declared_C").get<double>();
      if (c.contains("mean_growth_mode"))
        cfg.mean_growth_mode = c.at("mean_growth_mode").get<std::string>() == "absolute"
                                   ? MeanGrowthMode::Absolute
                                   : MeanGrowthMode::Signed;
    }
    if (j.contains("radii")) {
      const json& r = j.at("radii");
      read_into(r, "integral", cfg.integral_radii);
      read_into(r, "growth", cfg.growth_radii);
      read_into(r, "flatness", cfg.flatness_radii);
      read_into(r, "nonparabolic", cfg.nonparabolic_radii);
    }
    if (j.contains("quadrature")) {
      const json& q = j.at("quadrature");
      if (q.contains("ball_mode")) cfg.ball_mode = mode_from(q.at("ball_mode").get<std::string>());
      read_into(q, "radial_cells", cfg.quad.radial_cells);
      read_into(q, "angular_cells", cfg.quad.angular_cells);
      read_into(q, "geodesic_grid_h", cfg.quad.geodesic_grid_h);
    }
    if (j.contains("variational")) {
      const json& v = j.at("variational");
      read_into(v, "plateau_radius", cfg.variational.plateau_radius);
      read_into(v, "cutoff_radius", cfg.variational.cutoff_radius);
      if (v.contains("shape")) cfg.variational.shape = shape_from(v.at("shape").get<std::string>());
      read_into(v, "decay_m", cfg.variational.decay_m);
      read_into(v, "mesh_R", cfg.variational_mesh.truncation_R);
      read_into(v, "mesh_h_base", cfg.variational_mesh.h_base);
      read_into(v, "mesh_h_u", cfg.variational_mesh.h_u);
    }
    if (j.contains("output")) {
      const json& o = j.at("output");
      read_into(o, "dir", cfg.out_dir);
      read_into(o, "csv", cfg.write_csv);
      read_into(o, "dump_matrices", cfg.dump_matrices);
    }
    read_into(j, "seed", cfg.seed);
  } catch (const json::exception& e) {
    fail(ErrorCode::BadConfig, std::string("malformed config: ") + e.what());
  }
  if (!(cfg.half_width > 0)) fail(ErrorCode::BadConfig, "layer.half_width must be positive");
  if (!(cfg.safety_c0 > 0 && cfg.safety_c0 < 1))
    fail(ErrorCode::BadConfig, "layer.safety_c0 must lie in (0, 1)");
  if (cfg.ladder.truncation_radii.empty() || cfg.ladder.h_levels.empty())
    fail(ErrorCode::BadConfig, "ladder lists must be nonempty");
  for (size_t i = 1; i < cfg.ladder.truncation_radii.size(); ++i)
    if (!(cfg.ladder.truncation_radii[i] > cfg.ladder.truncation_radii[i - 1]))
      fail(ErrorCode::BadConfig, "ladder truncation radii must be sorted");
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::BadConfig, "cannot open config file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    fail(ErrorCode::BadConfig, std::string("config parse error: ") + e.what());
  }
  return config_from_json(j);
}

json config_to_json(const ExperimentConfig& cfg) {
  json j;
  j["surface"]["kind"] = cfg.surface.kind;
  j["surface"]["params"] = cfg.surface.params;
  if (cfg.surface.euler_char) j["surface"]["euler_char"] = *cfg.surface.euler_char;
  if (!cfg.surface.profile_r.empty()) {
    j["surface"]["profile_r"] = cfg.surface.profile_r;
    j["surface"]["profile_z"] = cfg.surface.profile_z;
  }
  j["layer"] = {{"half_width", cfg.half_width},
                {"safety_c0", cfg.safety_c0},
                {"sample_radius", cfg.sample_radius}};
  json levels = json::array();
  for (const auto& [h, hu] : cfg.ladder.h_levels) levels.push_back({h, hu});
  j["ladder"] = {{"truncation_radii", cfg.ladder.truncation_radii},
                 {"h_levels", levels},
                 {"eigen_count", cfg.ladder.eigen_count},
                 {"solver_tol", cfg.ladder.solver_tol},
                 {"shift_factor", cfg.ladder.shift_factor}};
  j["certificates"] = {{"eigen_gap", cfg.certificates.eigen_gap},
                       {"variational", cfg.certificates.variational},
                       {"integral_invariant", cfg.certificates.integral_invariant},
                       {"euler_isoperimetric", cfg.certificates.euler_isoperimetric},
                       {"hartman", cfg.certificates.hartman},
                       {"mean_curvature_growth", cfg.certificates.mean_curvature_growth},
                       {"nonparabolic", cfg.certificates.nonparabolic}};
  j["coefficients"] = {{"mu", cfg.mu},
                       {"c1", cfg.c1},
                       {"growth_eps", cfg.growth_eps},
                       {"mean_growth_mode",
                        cfg.mean_growth_mode == MeanGrowthMode::Absolute ? "absolute" : "signed"}};
  if (cfg.declared_m) j["coefficients"]["declared_m"] = *cfg.declared_m;
  if (cfg.declared_C) j["coefficients"]["declared_C"] = *cfg.declared_C;
  j["radii"] = {{"integral", cfg.integral_radii},
                {"growth", cfg.growth_radii},
                {"flatness", cfg.flatness_radii}};
  if (!cfg.nonparabolic_radii.empty()) j["radii"]["nonparabolic"] = cfg.nonparabolic_radii;
  j["quadrature"] = {{"ball_mode", cfg.ball_mode == BallMode::Parameter ? "parameter" : "geodesic"},
                     {"radial_cells", cfg.quad.radial_cells},
                     {"angular_cells", cfg.quad.angular_cells},
                     {"geodesic_grid_h", cfg.quad.geodesic_grid_h}};
  j["variational"] = {{"plateau_radius", cfg.variational.plateau_radius},
                      {"cutoff_radius", cfg.variational.cutoff_radius},
                      {"shape", cfg.variational.shape == CutoffShape::Linear        ? "linear"
                                : cfg.variational.shape == CutoffShape::Logarithmic ? "logarithmic"
                                                                                    : "polynomial"},
                      {"decay_m", cfg.variational.decay_m},
                      {"mesh_R", cfg.variational_mesh.truncation_R},
                      {"mesh_h_base", cfg.variational_mesh.h_base},
                      {"mesh_h_u", cfg.variational_mesh.h_u}};
  j["output"] = {{"dir", cfg.out_dir}, {"csv", cfg.write_csv}, {"dump_matrices", cfg.dump_matrices}};
  j["seed"] = cfg.seed;
  return j;
}

}  // namespace layerlab
