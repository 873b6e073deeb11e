#pragma once

#include <nlohmann/json_fwd.hpp>
#include <optional>

#include "layerlab/config.hpp"

namespace layerlab {

struct StageTiming {
  std::string stage;
  double seconds = 0;
};

/// Self-contained experiment record: config echo, geometry diagnostics,
/// spectral ladder, kappa_1, certificates and timings. Values reproduce for
/// identical configs; timings are informational only.
struct ExperimentReport {
  std::string schema_version = "layerlab-report/1";
  std::string surface_name;
  int dim_base = 2;
  double kappa1 = 0;

  std::optional<ValidityReport> validity;
  std::optional<FlatnessReport> flatness;
  std::optional<GrowthFit> growth;
  std::optional<RefinementStudy> study;
  std::optional<HartmanCheck> hartman;
  std::vector<Certificate> certificates;

  std::string aborted_stage; // empty when the pipeline ran to completion
  std::vector<StageTiming> timings;
};

nlohmann::json report_to_json(const ExperimentReport& rep, const ExperimentConfig& cfg);
nlohmann::json certificate_to_json(const Certificate& cert);

/// The versioned report schema (same content as schema/report.schema.json).
const nlohmann::json& report_schema();

/// Structural validation against the subset of JSON Schema the report schema
/// uses: type, properties, required, items, enum, additionalProperties.
bool validate_against_schema(const nlohmann::json& doc, const nlohmann::json& schema,
                             std::string* error = nullptr);

/// report.json plus CSV tables under cfg.out_dir.
void write_report_files(const ExperimentReport& rep, const ExperimentConfig& cfg);

/// Human-readable certificate summary table.
std::string render_summary(const ExperimentReport& rep);

}  // namespace layerlab
