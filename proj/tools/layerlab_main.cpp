// layerlab: quantum-layer spectral laboratory.
//
// Builds a tubular layer about a catalog surface, runs geometry diagnostics,
// the Dirichlet eigenvalue ladder and the ground-state certificates, and
// writes a JSON report plus CSV tables and SVG plots.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "layerlab/experiment.hpp"
#include "layerlab/plot.hpp"

namespace {

using namespace layerlab;

struct CommonArgs {
  std::string config_path;
  std::string out_dir;
  std::string surface_kind;
  double half_width = -1;
  double safety_c0 = -1;
  std::uint64_t seed = 0;
  bool have_seed = false;
  bool dump_matrices = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("-c,--config", args.config_path, "experiment config (JSON)")->required();
  cmd->add_option("-o,--out-dir", args.out_dir, "output directory (default: config, then $LAYERLAB_OUT)");
  cmd->add_option("--surface", args.surface_kind, "override surface kind");
  cmd->add_option("--half-width", args.half_width, "override layer half width a");
  cmd->add_option("--c0", args.safety_c0, "override validity constant C0");
  cmd->add_option("--seed", args.seed, "override random seed")->each([&](const std::string&) {
    args.have_seed = true;
  });
  cmd->add_flag("--dump-matrices", args.dump_matrices, "write stiffness/mass in coordinate format");
}

ExperimentConfig make_config(const CommonArgs& args) {
  ExperimentConfig cfg = load_config(args.config_path);
  if (!args.surface_kind.empty()) cfg.surface.kind = args.surface_kind;
  if (args.half_width > 0) cfg.half_width = args.half_width;
  if (args.safety_c0 > 0) cfg.safety_c0 = args.safety_c0;
  if (args.have_seed) cfg.seed = args.seed;
  if (args.dump_matrices) cfg.dump_matrices = true;
  if (!args.out_dir.empty()) {
    cfg.out_dir = args.out_dir;
  } else if (const char* env = std::getenv("LAYERLAB_OUT"); env && cfg.out_dir == ".") {
    cfg.out_dir = env;
  }
  return cfg;
}

int run_stage(const CommonArgs& args, ExperimentStage stage) {
  const ExperimentConfig cfg = make_config(args);
  const ExperimentReport rep = run_experiment(cfg, stage);
  write_report_files(rep, cfg);
  if (cfg.dump_matrices && stage != ExperimentStage::Describe) {
    const LayerGeometry layer = make_layer(cfg);
    const Mesh mesh = build_mesh(layer, cfg.ladder.truncation_radii.back(),
                                 cfg.ladder.h_levels.back().first, cfg.ladder.h_levels.back().second);
    const OperatorPair pair = assemble(mesh, layer);
    std::ofstream ks(std::filesystem::path(cfg.out_dir) / "stiffness.coo");
    dump_coordinate(pair.stiffness, ks);
    std::ofstream ms(std::filesystem::path(cfg.out_dir) / "mass.coo");
    dump_coordinate(pair.mass, ms);
  }
  std::cout << render_summary(rep);
  std::cout << "report written to " << (std::filesystem::path(cfg.out_dir) / "report.json").string()
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum-layer spectral laboratory"};
  app.require_subcommand(1);

  CommonArgs describe_args, spectrum_args, certify_args, full_args;
  auto* describe = app.add_subcommand("describe", "geometry diagnostics only");
  add_common(describe, describe_args);
  auto* spectrum = app.add_subcommand("spectrum", "mesh/assembly ladder and eigensolve");
  add_common(spectrum, spectrum_args);
  auto* certify = app.add_subcommand("certify", "run every applicable certificate");
  add_common(certify, certify_args);
  auto* full = app.add_subcommand("full", "diagnostics, spectrum and certificates");
  add_common(full, full_args);

  std::string report_path, plot_kind = "convergence", plot_out = "plot.svg";
  auto* plot = app.add_subcommand("plot", "emit an SVG plot from a report");
  plot->add_option("-r,--report", report_path, "report.json produced by a previous run")->required();
  plot->add_option("-k,--kind", plot_kind, "convergence|integral_tail|growth");
  plot->add_option("-o,--out", plot_out, "output SVG path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1; // usage errors
  }

  try {
    if (describe->parsed()) return run_stage(describe_args, ExperimentStage::Describe);
    if (spectrum->parsed()) return run_stage(spectrum_args, ExperimentStage::Spectrum);
    if (certify->parsed()) return run_stage(certify_args, ExperimentStage::Certify);
    if (full->parsed()) return run_stage(full_args, ExperimentStage::Full);
    if (plot->parsed()) {
      std::ifstream in(report_path);
      if (!in) fail(ErrorCode::BadConfig, "cannot open report " + report_path);
      nlohmann::json j;
      in >> j;
      // Rebuild the tables the plotter needs from the serialized report.
      ExperimentReport rep;
      rep.surface_name = j.at("surface").at("name").get<std::string>();
      rep.kappa1 = j.at("kappa1").get<double>();
      if (j.contains("spectral")) {
        RefinementStudy st;
        for (const auto& row : j.at("spectral").at("table")) {
          LadderLevel lvl;
          lvl.truncation_R = row.at("truncation_R").get<double>();
          lvl.h_base = row.at("h_base").get<double>();
          lvl.lambda1 = row.at("lambda1").get<double>();
          st.table.push_back(lvl);
        }
        rep.study = st;
      }
      for (const auto& cj : j.at("certificates")) {
        Certificate cert;
        const std::string kind = cj.at("kind").get<std::string>();
        if (kind == "integral_invariant") cert.kind = CertificateKind::IntegralInvariant;
        else if (kind == "mean_curvature_growth") cert.kind = CertificateKind::MeanCurvatureGrowth;
        else continue;
        for (const auto& pt : cj.at("trace"))
          cert.trace.emplace_back(pt.at(0).get<double>(), pt.at(1).get<double>());
        rep.certificates.push_back(cert);
      }
      plot_emit_file(rep, plot_kind_from(plot_kind), plot_out);
      std::cout << "wrote " << plot_out << "\n";
      return 0;
    }
  } catch (const layerlab::Error& e) {
    const bool usage = e.code() == ErrorCode::BadConfig || e.code() == ErrorCode::UnknownSurface ||
                       e.code() == ErrorCode::BadParameters || e.code() == ErrorCode::MissingTable;
    std::cerr << "error: " << e.what() << "\n";
    return usage ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
