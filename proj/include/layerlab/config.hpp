#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>

#include "layerlab/certify.hpp"

namespace layerlab {

struct SurfaceSpec {
  std::string kind = "plane";
  std::map<std::string, double> params;
  std::optional<double> euler_char;        // overrides the catalog default
  std::vector<double> profile_r, profile_z; // rotational_graph table
};

struct LadderSpec {
  std::vector<double> truncation_radii = {6.0, 10.0};
  std::vector<std::pair<double, double>> h_levels = {{2.0, 0.25}, {1.0, 0.25}, {0.5, 0.125}};
  int eigen_count = 1;
  double solver_tol = 1e-9;
  double shift_factor = 0.9;
};

struct CertificateToggles {
  bool eigen_gap = true;
  bool variational = true;
  bool integral_invariant = true;
  bool euler_isoperimetric = true;
  bool hartman = true;
  bool mean_curvature_growth = true;
  bool nonparabolic = false;
};

struct VariationalMesh {
  double truncation_R = 52.0;
  double h_base = 1.0;
  double h_u = 0.125;
};

struct ExperimentConfig {
  SurfaceSpec surface;
  double half_width = 0.5;
  double safety_c0 = 0.9;
  double sample_radius = -1;

  LadderSpec ladder;
  CertificateToggles certificates;

  std::vector<double> mu = {1.0};
  double c1 = 1.0;           // nonparabolic threshold constant, user supplied
  double growth_eps = 0.1;   // mean-curvature growth threshold
  std::optional<double> declared_m, declared_C;
  MeanGrowthMode mean_growth_mode = MeanGrowthMode::Signed;

  std::vector<double> integral_radii = {1, 1.5, 2, 3, 4, 5, 6, 8};
  std::vector<double> growth_radii = {2.5, 4, 6, 9, 13, 18, 25};
  std::vector<double> flatness_radii = {1, 2, 3, 4, 5, 8, 12};
  std::vector<double> nonparabolic_radii; // empty: fall back to integral_radii

  BallMode ball_mode = BallMode::Parameter; // curvature integrals
  BallQuadratureOptions quad;               // geodesic grid for growth fits too
  double tol_integral = 1e-3;
  double tol_euler = 0.02;

  VariationalFamily variational;
  VariationalMesh variational_mesh;

  std::string out_dir = ".";
  bool write_csv = true;
  bool dump_matrices = false;
  std::uint64_t seed = 0;

  CertifyOptions certify_options() const;
};

ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);
nlohmann::json config_to_json(const ExperimentConfig& cfg);

}  // namespace layerlab
