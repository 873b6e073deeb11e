#pragma once

#include "layerlab/report.hpp"
#include "layerlab/surfaces.hpp"

namespace layerlab {

/// Builds a catalog chart by name with parameter map (heights, widths,
/// slopes...). Throws UnknownSurface / BadParameters.
ImmersionChart catalog_surface(const std::string& name, const std::map<std::string, double>& params,
                               const SurfaceSpec* spec = nullptr);

LayerGeometry make_layer(const ExperimentConfig& cfg);

enum class ExperimentStage { Describe, Spectrum, Certify, Full };

/// Geometry diagnostics -> validity -> ladder/eigensolve -> certificates,
/// stopping after the requested stage. A failed validity check aborts the
/// pipeline and leaves the margin report in place; verdicts never throw.
ExperimentReport run_experiment(const ExperimentConfig& cfg,
                                ExperimentStage stage = ExperimentStage::Full);

}  // namespace layerlab
