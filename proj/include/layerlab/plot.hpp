#pragma once

#include "layerlab/report.hpp"

namespace layerlab {

enum class PlotKind { Convergence, IntegralTail, Growth };

PlotKind plot_kind_from(const std::string& name);

/// Deterministic SVG emission from report tables: lambda_1 against h per
/// truncation with the kappa_1 reference line, the I(r) curvature tail, or
/// the G(r) mean-curvature growth curve. Throws MissingTable when the report
/// lacks the requested data.
std::string plot_emit(const ExperimentReport& rep, PlotKind kind);

void plot_emit_file(const ExperimentReport& rep, PlotKind kind, const std::string& path);

}  // namespace layerlab
