#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "layerlab/experiment.hpp"
#include "layerlab/plot.hpp"

using namespace layerlab;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

json strip_timings(json j) {
  j.erase("timings");
  if (j.contains("spectral"))
    for (auto& row : j["spectral"]["table"]) row.erase("seconds");
  return j;
}

ExperimentConfig strip_config() {
  ExperimentConfig cfg;
  cfg.surface.kind = "straight_strip";
  cfg.half_width = 0.5;
  cfg.ladder.truncation_radii = {4.0, 6.0};
  cfg.ladder.h_levels = {{0.4, 0.25}, {0.2, 0.125}, {0.1, 0.0625}};
  cfg.growth_radii = {2, 3, 4, 6, 9, 13, 20};
  cfg.flatness_radii = {1, 2, 3, 4, 5};
  cfg.integral_radii = {1, 2, 3, 4, 5};
  cfg.variational_mesh = {12.0, 0.2, 0.125};
  cfg.variational.plateau_radius = 3.0;
  cfg.variational.cutoff_radius = 11.0;
  return cfg;
}

}  // namespace

TEST_CASE("config round trip and validation") {
  const ExperimentConfig cfg = strip_config();
  const json j = config_to_json(cfg);
  const ExperimentConfig back = config_from_json(j);
  CHECK(config_to_json(back) == j);

  json bad = j;
  bad["layer"]["safety_c0"] = 1.5;
  CHECK_THROWS_AS(config_from_json(bad), Error);
  json bad2 = j;
  bad2["ladder"]["truncation_radii"] = json::array({6.0, 4.0});
  CHECK_THROWS_AS(config_from_json(bad2), Error);
  CHECK_THROWS_AS(load_config("/nonexistent/path.json"), Error);
}

TEST_CASE("catalog surfaces") {
  for (const char* name : {"plane", "gaussian_bump", "smoothed_cone", "windowed_saddle",
                           "straight_strip", "bent_strip", "sphere", "circle_strip"}) {
    const ImmersionChart c = catalog_surface(name, {}, nullptr);
    CHECK(c.map != nullptr);
    CHECK((c.dim_base == 1 || c.dim_base == 2));
  }
  CHECK(catalog_surface("plane", {}, nullptr).euler_char == 1.0);
  CHECK(catalog_surface("gaussian_bump", {{"height", 1.0}, {"width", 1.0}}, nullptr).ends.size() ==
        1);
  CHECK(catalog_surface("bent_strip", {{"kappa", 0.5}}, nullptr).dim_base == 1);
  CHECK_THROWS_AS(catalog_surface("helicoid", {}, nullptr), Error);
  CHECK_THROWS_AS(catalog_surface("gaussian_bump", {{"width", -1.0}}, nullptr), Error);
  SurfaceSpec rot;
  rot.profile_r = {0.0, 1.0, 2.0};
  rot.profile_z = {0.0, 0.5, 2.0};
  CHECK(catalog_surface("rotational_graph", {}, &rot).dim_base == 2);
  CHECK_THROWS_AS(catalog_surface("rotational_graph", {}, nullptr), Error);
}

TEST_CASE("describe stage produces geometry diagnostics only") {
  ExperimentConfig cfg = strip_config();
  const ExperimentReport rep = run_experiment(cfg, ExperimentStage::Describe);
  CHECK(rep.flatness.has_value());
  CHECK(rep.growth.has_value());
  CHECK(rep.validity.has_value());
  CHECK(rep.validity->passed);
  CHECK_FALSE(rep.study.has_value());
  CHECK(rep.certificates.empty());
}

TEST_CASE("validity failure aborts the pipeline with a margin report") {
  ExperimentConfig cfg;
  cfg.surface.kind = "sphere";
  cfg.surface.params = {{"radius", 1.0}, {"patch_radius", 1.0}};
  cfg.half_width = 1.5; // a sup||A|| = 1.5 > C0
  cfg.sample_radius = 0.8;
  cfg.ladder.truncation_radii = {0.5, 0.7};
  cfg.flatness_radii = {0.2, 0.4, 0.6, 0.8}; // stay inside the sphere patch
  const ExperimentReport rep = run_experiment(cfg, ExperimentStage::Full);
  CHECK(rep.aborted_stage == "validity");
  REQUIRE(rep.validity.has_value());
  CHECK_FALSE(rep.validity->passed);
  CHECK(rep.validity->margin < 0);
  CHECK_FALSE(rep.study.has_value());
  CHECK(rep.certificates.empty());
}

TEST_CASE("full strip experiment: verdicts, report schema, determinism") {
  ExperimentConfig cfg = strip_config();
  const ExperimentReport rep = run_experiment(cfg, ExperimentStage::Full);

  REQUIRE(rep.study.has_value());
  CHECK_FALSE(rep.study->below_threshold);
  for (const auto& lvl : rep.study->table) CHECK(lvl.lambda1 > rep.kappa1);

  // The flat strip never earns a ground-state certificate; its curvature
  // certificates sit on the trivial boundary.
  for (const auto& cert : rep.certificates) {
    CHECK(cert.verdict != Verdict::GroundStateCertified);
    if (cert.kind == CertificateKind::IntegralInvariant) {
      CHECK(cert.verdict == Verdict::ConditionSatisfied);
      CHECK(std::abs(cert.numbers.at("I_inf_estimate")) < 1e-12);
    }
    if (cert.kind == CertificateKind::MeanCurvatureGrowth)
      CHECK(cert.numbers.at("limsup_estimate") == 0.0);
  }

  const json doc = report_to_json(rep, cfg);
  std::string err;
  CHECK_MESSAGE(validate_against_schema(doc, report_schema(), &err), err);

  // Identical config and seed reproduce every value; timings are informational.
  const ExperimentReport rep2 = run_experiment(cfg, ExperimentStage::Full);
  CHECK(strip_timings(report_to_json(rep, cfg)) == strip_timings(report_to_json(rep2, cfg)));
}

TEST_CASE("shipped schema file matches the embedded schema") {
  std::ifstream in(std::string(LAYERLAB_SOURCE_DIR) + "/schema/report.schema.json");
  REQUIRE(in.good());
  json file_schema;
  in >> file_schema;
  CHECK(file_schema == report_schema());
}

TEST_CASE("schema validator flags structural violations") {
  json doc = {{"schema", "layerlab-report/1"},
              {"surface", {{"name", "x"}, {"dim_base", 2}}},
              {"kappa1", 1.0},
              {"config", json::object()},
              {"aborted_stage", ""},
              {"certificates", json::array()},
              {"timings", json::array()}};
  std::string err;
  CHECK(validate_against_schema(doc, report_schema(), &err));
  json bad = doc;
  bad.erase("kappa1");
  CHECK_FALSE(validate_against_schema(bad, report_schema(), &err));
  json bad2 = doc;
  bad2["certificates"].push_back({{"kind", "bogus"}});
  CHECK_FALSE(validate_against_schema(bad2, report_schema(), &err));
}

TEST_CASE("report files and plots") {
  ExperimentConfig cfg = strip_config();
  const fs::path dir = fs::temp_directory_path() / "layerlab_test_out";
  fs::remove_all(dir);
  cfg.out_dir = dir.string();
  const ExperimentReport rep = run_experiment(cfg, ExperimentStage::Full);
  write_report_files(rep, cfg);
  CHECK(fs::exists(dir / "report.json"));
  CHECK(fs::exists(dir / "spectral_table.csv"));
  CHECK(fs::exists(dir / "flatness.csv"));

  const std::string svg = plot_emit(rep, PlotKind::Convergence);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("kappa_1") != std::string::npos);
  const std::string tail = plot_emit(rep, PlotKind::IntegralTail);
  CHECK(tail.find("I(r)") != std::string::npos);
  // Deterministic output for a fixed report.
  CHECK(plot_emit(rep, PlotKind::Convergence) == svg);

  ExperimentReport empty;
  CHECK_THROWS_AS(plot_emit(empty, PlotKind::Convergence), Error);
  CHECK_THROWS_AS(plot_emit(empty, PlotKind::IntegralTail), Error);
  CHECK_THROWS_AS(plot_emit(empty, PlotKind::Growth), Error);

  const std::string summary = render_summary(rep);
  CHECK(summary.find("kappa_1") != std::string::npos);
  CHECK(summary.find("certificate") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("command line interface end to end") {
  const fs::path dir = fs::temp_directory_path() / "layerlab_cli_out";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path cfg_path = dir / "strip.json";
  {
    ExperimentConfig cfg = strip_config();
    std::ofstream out(cfg_path);
    out << config_to_json(cfg).dump(2);
  }
  const std::string cli = LAYERLAB_CLI_PATH;
  const std::string out_dir = (dir / "out").string();

  const auto run = [&](const std::string& args) {
    const int status = std::system((cli + " " + args + " > /dev/null 2>&1").c_str());
    return WEXITSTATUS(status);
  };

  CHECK(run("full -c " + cfg_path.string() + " -o " + out_dir) == 0);
  CHECK(fs::exists(fs::path(out_dir) / "report.json"));
  {
    std::ifstream in(fs::path(out_dir) / "report.json");
    json doc;
    in >> doc;
    std::string err;
    CHECK_MESSAGE(validate_against_schema(doc, report_schema(), &err), err);
  }
  CHECK(run("plot -r " + (fs::path(out_dir) / "report.json").string() + " -k convergence -o " +
            (dir / "conv.svg").string()) == 0);
  CHECK(fs::exists(dir / "conv.svg"));

  CHECK(run("describe -c " + cfg_path.string() + " -o " + out_dir + "_d") == 0);

  CHECK(run("spectrum -c " + cfg_path.string() + " --dump-matrices -o " + out_dir + "_m") == 0);
  CHECK(fs::exists(fs::path(out_dir + "_m") / "stiffness.coo"));
  CHECK(fs::exists(fs::path(out_dir + "_m") / "mass.coo"));

  // A validity failure is a verdict: exit 0 with the aborted-stage report.
  {
    ExperimentConfig invalid;
    invalid.surface.kind = "sphere";
    invalid.surface.params = {{"radius", 1.0}, {"patch_radius", 1.0}};
    invalid.half_width = 1.5;
    invalid.sample_radius = 0.8;
    invalid.ladder.truncation_radii = {0.5, 0.7};
    invalid.flatness_radii = {0.2, 0.4, 0.6, 0.8};
    std::ofstream out(dir / "invalid.json");
    out << config_to_json(invalid).dump();
  }
  CHECK(run("full -c " + (dir / "invalid.json").string() + " -o " + out_dir + "_v") == 0);
  {
    std::ifstream in(fs::path(out_dir + "_v") / "report.json");
    json doc;
    in >> doc;
    CHECK(doc.at("aborted_stage") == "validity");
    CHECK(doc.at("validity").at("margin").get<double>() < 0);
  }

  // Usage errors exit 1.
  CHECK(run("full") == 1);                                     // missing --config
  CHECK(run("full -c /nonexistent.json -o " + out_dir) == 1);  // unreadable config
  CHECK(run("bogus-subcommand") == 1);
  {
    json j = config_to_json(strip_config());
    j["surface"]["kind"] = "helicoid";
    std::ofstream out(dir / "bad.json");
    out << j.dump();
  }
  CHECK(run("full -c " + (dir / "bad.json").string() + " -o " + out_dir) == 1);
  fs::remove_all(dir);
}
