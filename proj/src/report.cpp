#include "layerlab/report.hpp"

#include <nlohmann/json.hpp>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace layerlab {

using nlohmann::json;

namespace {

json validity_to_json(const ValidityReport& v) {
  return json{{"passed", v.passed},
              {"a_sup_spectral", v.a_sup_spectral},
              {"a_sup_frobenius", v.a_sup_frobenius},
              {"sup_spectral", v.sup_spectral},
              {"sup_frobenius", v.sup_frobenius},
              {"margin", v.margin},
              {"samples", v.samples},
              {"norm_mode", v.norm_mode}};
}

json flatness_to_json(const FlatnessReport& f) {
  return json{{"radii", f.radii},
              {"sup_norm_a", f.sup_norm_a},
              {"r2_sup_norm_a", f.r2_sup_norm_a},
              {"flat", f.flat},
              {"strong_decay", f.strong_decay}};
}

json growth_to_json(const GrowthFit& g) {
  return json{{"exponent_m", g.exponent_m},
              {"constant_C", g.constant_C},
              {"parabolic", g.parabolic},
              {"fit_residual", g.fit_residual},
              {"end_constants", g.end_constants},
              {"radii", g.radii},
              {"volumes", g.volumes}};
}

json study_to_json(const RefinementStudy& s) {
  json table = json::array();
  for (const auto& lvl : s.table)
    table.push_back(json{{"truncation_R", lvl.truncation_R},
                         {"h_base", lvl.h_base},
                         {"h_u", lvl.h_u},
                         {"dofs", lvl.dofs},
                         {"lambda1", lvl.lambda1},
                         {"eigenvalues", lvl.eigenvalues},
                         {"residual", lvl.residual},
                         {"seconds", lvl.seconds}});
  return json{{"table", table},
              {"extrapolated_lambda1", s.extrapolated_lambda1},
              {"error_bar", s.error_bar},
              {"below_threshold", s.below_threshold},
              {"monotone_in_R", s.monotone_in_R},
              {"safety_margin", s.safety_margin}};
}

}  // namespace

json certificate_to_json(const Certificate& cert) {
  json assumptions = json::array();
  for (const auto& a : cert.assumptions)
    assumptions.push_back(json{{"name", a.name}, {"satisfied", a.satisfied}, {"detail", a.detail}});
  json trace = json::array();
  for (const auto& [r, v] : cert.trace) trace.push_back({r, v});
  return json{{"kind", to_string(cert.kind)},
              {"verdict", to_string(cert.verdict)},
              {"numbers", cert.numbers},
              {"assumptions", assumptions},
              {"provenance", cert.provenance},
              {"trace", trace}};
}

json report_to_json(const ExperimentReport& rep, const ExperimentConfig& cfg) {
  json j;
  j["schema"] = rep.schema_version;
  j["reproducibility"] = "values deterministic for a fixed config and seed; timings informational";
  j["surface"] = {{"name", rep.surface_name}, {"dim_base", rep.dim_base}};
  j["config"] = config_to_json(cfg);
  j["kappa1"] = rep.kappa1;
  j["aborted_stage"] = rep.aborted_stage;
  if (rep.validity) j["validity"] = validity_to_json(*rep.validity);
  if (rep.flatness || rep.growth) {
    j["geometry"] = json::object();
    if (rep.flatness) j["geometry"]["flatness"] = flatness_to_json(*rep.flatness);
    if (rep.growth) j["geometry"]["growth"] = growth_to_json(*rep.growth);
  }
  if (rep.study) j["spectral"] = study_to_json(*rep.study);
  if (rep.hartman)
    j["hartman"] = {{"total_curvature_term", rep.hartman->total_curvature_term},
                    {"euler_term", rep.hartman->euler_term},
                    {"residual", rep.hartman->residual}};
  j["certificates"] = json::array();
  for (const auto& c : rep.certificates) j["certificates"].push_back(certificate_to_json(c));
  j["timings"] = json::array();
  for (const auto& t : rep.timings)
    j["timings"].push_back(json{{"stage", t.stage}, {"seconds", t.seconds}});
  return j;
}

const json& report_schema() {
  static const json schema = [] {
    std::istringstream in(
#include "layerlab/report_schema_inc.hpp"
    );
    json s;
    in >> s;
    return s;
  }();
  return schema;
}

bool validate_against_schema(const json& doc, const json& schema, std::string* error) {
  const auto set_err = [&](const std::string& msg) {
    if (error) *error = msg;
    return false;
  };
  if (schema.contains("type")) {
    const std::string t = schema.at("type").get<std::string>();
    const bool ok = (t == "object" && doc.is_object()) || (t == "array" && doc.is_array()) ||
                    (t == "string" && doc.is_string()) || (t == "boolean" && doc.is_boolean()) ||
                    (t == "number" && doc.is_number()) || (t == "integer" && doc.is_number_integer());
    if (!ok) return set_err("expected type " + t + ", got " + std::string(doc.type_name()));
  }
  if (schema.contains("enum")) {
    bool found = false;
    for (const auto& v : schema.at("enum")) found = found || v == doc;
    if (!found) return set_err("value not in enum: " + doc.dump());
  }
  if (doc.is_object()) {
    if (schema.contains("required"))
      for (const auto& key : schema.at("required"))
        if (!doc.contains(key.get<std::string>()))
          return set_err("missing required key " + key.get<std::string>());
    if (schema.contains("properties"))
      for (const auto& [key, sub] : schema.at("properties").items())
        if (doc.contains(key)) {
          std::string suberr;
          if (!validate_against_schema(doc.at(key), sub, &suberr))
            return set_err(key + ": " + suberr);
        }
    if (schema.contains("additionalProperties") &&
        schema.at("additionalProperties").is_boolean() &&
        !schema.at("additionalProperties").get<bool>()) {
      for (const auto& [key, val] : doc.items()) {
        (void)val;
        if (!schema.contains("properties") || !schema.at("properties").contains(key))
          return set_err("unexpected key " + key);
      }
    }
  }
  if (doc.is_array() && schema.contains("items")) {
    size_t i = 0;
    for (const auto& el : doc) {
      std::string suberr;
      if (!validate_against_schema(el, schema.at("items"), &suberr))
        return set_err("item " + std::to_string(i) + ": " + suberr);
      ++i;
    }
  }
  return true;
}

namespace {

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

void write_report_files(const ExperimentReport& rep, const ExperimentConfig& cfg) {
  namespace fs = std::filesystem;
  const fs::path dir(cfg.out_dir);
  fs::create_directories(dir);

  const json j = report_to_json(rep, cfg);
  write_text(dir / "report.json", j.dump(2) + "\n");

  if (!cfg.write_csv) return;
  if (rep.study) {
    std::ostringstream csv;
    csv << "truncation_R,h_base,h_u,dofs,lambda1,residual,seconds\n";
    for (const auto& lvl : rep.study->table)
      csv << lvl.truncation_R << "," << lvl.h_base << "," << lvl.h_u << "," << lvl.dofs << ","
          << lvl.lambda1 << "," << lvl.residual << "," << lvl.seconds << "\n";
    write_text(dir / "spectral_table.csv", csv.str());
  }
  if (rep.growth) {
    std::ostringstream csv;
    csv << "r,volume\n";
    for (size_t i = 0; i < rep.growth->radii.size(); ++i)
      csv << rep.growth->radii[i] << "," << rep.growth->volumes[i] << "\n";
    write_text(dir / "growth.csv", csv.str());
  }
  if (rep.flatness) {
    std::ostringstream csv;
    csv << "r,sup_norm_a,r2_sup_norm_a\n";
    for (size_t i = 0; i < rep.flatness->radii.size(); ++i)
      csv << rep.flatness->radii[i] << "," << rep.flatness->sup_norm_a[i] << ","
          << rep.flatness->r2_sup_norm_a[i] << "\n";
    write_text(dir / "flatness.csv", csv.str());
  }
  for (const auto& cert : rep.certificates) {
    if (cert.trace.empty()) continue;
    std::ostringstream csv;
    csv << "r,value\n";
    for (const auto& [r, v] : cert.trace) csv << r << "," << v << "\n";
    write_text(dir / (std::string(to_string(cert.kind)) + "_trace.csv"), csv.str());
  }
}

std::string render_summary(const ExperimentReport& rep) {
  std::ostringstream os;
  os << "surface: " << rep.surface_name << " (n = " << rep.dim_base << ")\n";
  os << "kappa_1 = " << rep.kappa1 << "\n";
  if (rep.validity)
    os << "validity: " << (rep.validity->passed ? "pass" : "FAIL")
       << "  a sup||A|| = " << rep.validity->a_sup_spectral << "  margin = " << rep.validity->margin
       << "\n";
  if (rep.study)
    os << "lambda_1 (extrapolated) = " << rep.study->extrapolated_lambda1 << " +/- "
       << rep.study->error_bar << "  below threshold: " << (rep.study->below_threshold ? "yes" : "no")
       << "\n";
  if (rep.hartman) os << "hartman residual = " << rep.hartman->residual << "\n";
  if (!rep.aborted_stage.empty()) os << "aborted at stage: " << rep.aborted_stage << "\n";
  if (!rep.certificates.empty()) {
    os << "\ncertificate                 verdict               key numbers\n";
    os << "--------------------------- --------------------- ----------------------------\n";
    for (const auto& c : rep.certificates) {
      std::string kind = to_string(c.kind), verdict = to_string(c.verdict);
      kind.resize(27, ' ');
      verdict.resize(21, ' ');
      os << kind << " " << verdict << " ";
      int shown = 0;
      for (const auto& [k, v] : c.numbers) {
        if (shown++ >= 3) break;
        os << k << "=" << v << " ";
      }
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace layerlab
