// String literal of schema/report.schema.json; keep the two in sync
// (tests compare them).
R"layerlab_schema(
{
  "$id": "layerlab-report/1",
  "type": "object",
  "required": ["schema", "surface", "kappa1", "config", "certificates", "timings", "aborted_stage"],
  "properties": {
    "schema": { "type": "string", "enum": ["layerlab-report/1"] },
    "reproducibility": { "type": "string" },
    "surface": {
      "type": "object",
      "required": ["name", "dim_base"],
      "properties": {
        "name": { "type": "string" },
        "dim_base": { "type": "integer" }
      }
    },
    "kappa1": { "type": "number" },
    "config": { "type": "object" },
    "aborted_stage": { "type": "string" },
    "validity": {
      "type": "object",
      "required": ["passed", "a_sup_spectral", "a_sup_frobenius", "margin", "norm_mode"],
      "properties": {
        "passed": { "type": "boolean" },
        "a_sup_spectral": { "type": "number" },
        "a_sup_frobenius": { "type": "number" },
        "sup_spectral": { "type": "number" },
        "sup_frobenius": { "type": "number" },
        "margin": { "type": "number" },
        "samples": { "type": "integer" },
        "norm_mode": { "type": "string" }
      }
    },
    "geometry": {
      "type": "object",
      "properties": {
        "flatness": {
          "type": "object",
          "required": ["radii", "sup_norm_a", "r2_sup_norm_a", "flat", "strong_decay"],
          "properties": {
            "radii": { "type": "array", "items": { "type": "number" } },
            "sup_norm_a": { "type": "array", "items": { "type": "number" } },
            "r2_sup_norm_a": { "type": "array", "items": { "type": "number" } },
            "flat": { "type": "boolean" },
            "strong_decay": { "type": "boolean" }
          }
        },
        "growth": {
          "type": "object",
          "required": ["exponent_m", "constant_C", "parabolic", "end_constants"],
          "properties": {
            "exponent_m": { "type": "number" },
            "constant_C": { "type": "number" },
            "parabolic": { "type": "boolean" },
            "fit_residual": { "type": "number" },
            "end_constants": { "type": "array", "items": { "type": "number" } },
            "radii": { "type": "array", "items": { "type": "number" } },
            "volumes": { "type": "array", "items": { "type": "number" } }
          }
        }
      }
    },
    "spectral": {
      "type": "object",
      "required": ["table", "extrapolated_lambda1", "error_bar", "below_threshold"],
      "properties": {
        "table": {
          "type": "array",
          "items": {
            "type": "object",
            "required": ["truncation_R", "h_base", "h_u", "dofs", "lambda1", "residual"],
            "properties": {
              "truncation_R": { "type": "number" },
              "h_base": { "type": "number" },
              "h_u": { "type": "number" },
              "dofs": { "type": "integer" },
              "lambda1": { "type": "number" },
              "eigenvalues": { "type": "array", "items": { "type": "number" } },
              "residual": { "type": "number" },
              "seconds": { "type": "number" }
            }
          }
        },
        "extrapolated_lambda1": { "type": "number" },
        "error_bar": { "type": "number" },
        "below_threshold": { "type": "boolean" },
        "monotone_in_R": { "type": "boolean" },
        "safety_margin": { "type": "number" }
      }
    },
    "hartman": {
      "type": "object",
      "required": ["total_curvature_term", "euler_term", "residual"],
      "properties": {
        "total_curvature_term": { "type": "number" },
        "euler_term": { "type": "number" },
        "residual": { "type": "number" }
      }
    },
    "certificates": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["kind", "verdict", "numbers", "assumptions"],
        "properties": {
          "kind": {
            "type": "string",
            "enum": ["eigen_gap", "variational", "integral_invariant", "euler_isoperimetric", "mean_curvature_growth", "nonparabolic_condition"]
          },
          "verdict": {
            "type": "string",
            "enum": ["GroundStateCertified", "ConditionSatisfied", "ConditionFailed", "Inconclusive"]
          },
          "numbers": { "type": "object" },
          "assumptions": {
            "type": "array",
            "items": {
              "type": "object",
              "required": ["name", "satisfied"],
              "properties": {
                "name": { "type": "string" },
                "satisfied": { "type": "boolean" },
                "detail": { "type": "string" }
              }
            }
          },
          "provenance": { "type": "object" },
          "trace": { "type": "array" }
        }
      }
    },
    "timings": {
      "type": "array",
      "items": {
        "type": "object",
        "required": ["stage", "seconds"],
        "properties": {
          "stage": { "type": "string" },
          "seconds": { "type": "number" }
        }
      }
    }
  }
}
)layerlab_schema"
