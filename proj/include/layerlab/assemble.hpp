#pragma once

#include <Eigen/SparseCore>
#include <functional>
#include <iosfwd>

#include "layerlab/mesh.hpp"

namespace layerlab {

using SpMat = Eigen::SparseMatrix<double>;

/// Stiffness/mass pair of the Dirichlet quadratic form. Unreduced pairs act
/// on all mesh nodes; reduced pairs act on interior dofs with dof_map
/// recording the interior-node indexing.
struct OperatorPair {
  SpMat stiffness;
  SpMat mass;
  std::vector<int> dof_map; // reduced dof -> mesh node id; empty when unreduced
  bool reduced = false;
};

using MetricAt = std::function<MetricTensor(const Vec&)>;

/// Multilinear nodal elements, 2-point Gauss per direction, metric-weighted:
///   K_pq = int G^{ij} d_i phi_p d_j phi_q sqrt(det G),
///   M_pq = int phi_p phi_q sqrt(det G).
/// No boundary elimination; the constant vector is in the stiffness kernel.
OperatorPair assemble_full(const Mesh& mesh, const MetricAt& metric);

/// Layer metric convenience wrapper.
OperatorPair assemble_full(const Mesh& mesh, const LayerGeometry& layer);

/// Eliminates transverse_wall and lateral_truncation rows/columns.
OperatorPair apply_dirichlet(const OperatorPair& pair, const std::vector<BoundaryTag>& tags);

/// assemble_full followed by apply_dirichlet on the mesh tags.
OperatorPair assemble(const Mesh& mesh, const LayerGeometry& layer);

/// Coordinate-format (row col value) dump for external cross-validation.
void dump_coordinate(const SpMat& m, std::ostream& os);

}  // namespace layerlab
