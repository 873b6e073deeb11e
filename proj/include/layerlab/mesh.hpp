#pragma once

#include <array>
#include <vector>

#include "layerlab/layer.hpp"

namespace layerlab {

enum class BoundaryTag { Interior, TransverseWall, LateralTruncation };

/// Structured tensor-product mesh of the truncated layer: a base grid
/// (interval for n = 1, axis-aligned grid restricted to the parameter disc
/// for n = 2) times a uniform partition of (-a, a). dim() = base_dim + 1 is
/// the element dimension; base_dim = 0 encodes a pure transverse interval.
struct Mesh {
  int base_dim = 2;
  double truncation_radius = 0;
  double half_width = 0;
  std::vector<double> xs, ys, us; // grid lines; ys only for base_dim = 2

  std::vector<Vec> node_coords;        // (x[, y], u) per node
  std::vector<BoundaryTag> tags;       // per node
  std::vector<std::array<int, 8>> elements; // 2^dim node ids, rest unset

  int dim() const { return base_dim + 1; }
  int nodes_per_element() const { return 1 << dim(); }
  std::size_t node_count() const { return node_coords.size(); }
};

/// Base grid lines sit on integer multiples of h_base so that meshes with
/// growing truncation_R nest (Dirichlet domain monotonicity holds discretely).
Mesh build_mesh(const LayerGeometry& layer, double truncation_R, double h_base, double h_u);

/// Pure 1-D Dirichlet interval (-a, a) with n_u cells; transverse walls at the ends.
Mesh build_interval_mesh(double a, int n_u);

}  // namespace layerlab
