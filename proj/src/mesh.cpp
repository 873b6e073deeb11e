#include "layerlab/mesh.hpp"

#include <cmath>

namespace layerlab {

namespace {

std::vector<double> u_lines(double a, int n_u) {
  std::vector<double> us(n_u + 1);
  for (int k = 0; k <= n_u; ++k) us[k] = -a + 2.0 * a * k / n_u;
  return us;
}

}  // namespace

Mesh build_interval_mesh(double a, int n_u) {
  if (!(a > 0)) fail(ErrorCode::BadParameters, "interval mesh needs a > 0");
  if (n_u < 2) fail(ErrorCode::ResolutionTooCoarse, "interval mesh needs >= 2 cells");
  Mesh m;
  m.base_dim = 0;
  m.half_width = a;
  m.us = u_lines(a, n_u);
  for (int k = 0; k <= n_u; ++k) {
    Vec c(1);
    c << m.us[k];
    m.node_coords.push_back(c);
    m.tags.push_back(k == 0 || k == n_u ? BoundaryTag::TransverseWall : BoundaryTag::Interior);
  }
  for (int k = 0; k < n_u; ++k) m.elements.push_back({k, k + 1, -1, -1, -1, -1, -1, -1});
  return m;
}

Mesh build_mesh(const LayerGeometry& layer, double truncation_R, double h_base, double h_u) {
  const int n = layer.base.dim_base;
  if (n != 1 && n != 2) fail(ErrorCode::UnsupportedDimension, "meshing supports n = 1, 2");
  if (!(h_base > 0) || !(h_u > 0)) fail(ErrorCode::BadParameters, "mesh steps must be positive");
  if (truncation_R > layer.base.radius_max * (1 + 1e-12))
    fail(ErrorCode::DomainExceeded, "truncation beyond chart domain");
  const double a = layer.half_width;
  const int n_u = static_cast<int>(std::lround(2.0 * a / h_u));
  if (n_u < 4) fail(ErrorCode::ResolutionTooCoarse, "fewer than 4 transverse intervals");

  // Base grid lines on integer multiples of h_base, so truncations nest.
  const int M = static_cast<int>(std::floor(truncation_R / h_base + 1e-9));
  if (M < 1) fail(ErrorCode::ResolutionTooCoarse, "no base cells inside truncation radius");

  Mesh m;
  m.base_dim = n;
  m.truncation_radius = truncation_R;
  m.half_width = a;
  m.us = u_lines(a, n_u);
  for (int i = -M; i <= M; ++i) m.xs.push_back(i * h_base);
  const int nx = static_cast<int>(m.xs.size());

  if (n == 1) {
    const int base_nodes = nx;
    auto node_id = [&](int i, int k) { return k * base_nodes + i; };
    for (int k = 0; k <= n_u; ++k)
      for (int i = 0; i < nx; ++i) {
        Vec c(2);
        c << m.xs[i], m.us[k];
        m.node_coords.push_back(c);
        BoundaryTag t = BoundaryTag::Interior;
        if (k == 0 || k == n_u) t = BoundaryTag::TransverseWall;
        else if (i == 0 || i == nx - 1) t = BoundaryTag::LateralTruncation;
        m.tags.push_back(t);
      }
    for (int k = 0; k < n_u; ++k)
      for (int i = 0; i + 1 < nx; ++i)
        m.elements.push_back({node_id(i, k), node_id(i + 1, k), node_id(i, k + 1),
                              node_id(i + 1, k + 1), -1, -1, -1, -1});
    return m;
  }

  m.ys = m.xs;
  const int ny = nx;
  // Base cell (i, j) spans [xs[i], xs[i+1]] x [ys[j], ys[j+1]]; keep the cell
  // when all four corners are inside the parameter disc of radius R.
  std::vector<char> cell(static_cast<size_t>(nx - 1) * (ny - 1), 0);
  auto cell_at = [&](int i, int j) -> char& { return cell[static_cast<size_t>(j) * (nx - 1) + i]; };
  const double R2 = truncation_R * truncation_R * (1 + 1e-12);
  int included_cells = 0;
  for (int j = 0; j + 1 < ny; ++j)
    for (int i = 0; i + 1 < nx; ++i) {
      bool in = true;
      for (int cj = 0; cj <= 1 && in; ++cj)
        for (int ci = 0; ci <= 1 && in; ++ci)
          in = m.xs[i + ci] * m.xs[i + ci] + m.ys[j + cj] * m.ys[j + cj] <= R2;
      cell_at(i, j) = in;
      included_cells += in;
    }
  if (included_cells == 0) fail(ErrorCode::ResolutionTooCoarse, "no base cells inside truncation radius");

  // Base node is kept when touching an included cell; interior when all its
  // incident cells are included.
  std::vector<int> base_compact(static_cast<size_t>(nx) * ny, -1);
  std::vector<char> base_interior;
  std::vector<std::pair<int, int>> base_nodes;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      int touching = 0, included = 0;
      for (int cj = -1; cj <= 0; ++cj)
        for (int ci = -1; ci <= 0; ++ci) {
          const int bi = i + ci, bj = j + cj;
          if (bi < 0 || bj < 0 || bi >= nx - 1 || bj >= ny - 1) continue;
          ++touching;
          included += cell_at(bi, bj);
        }
      if (included == 0) continue;
      base_compact[static_cast<size_t>(j) * nx + i] = static_cast<int>(base_nodes.size());
      base_nodes.emplace_back(i, j);
      base_interior.push_back(touching == 4 && included == 4);
    }

  const int nb = static_cast<int>(base_nodes.size());
  auto node_id = [&](int b, int k) { return k * nb + b; };
  for (int k = 0; k <= n_u; ++k)
    for (int b = 0; b < nb; ++b) {
      Vec c(3);
      c << m.xs[base_nodes[b].first], m.ys[base_nodes[b].second], m.us[k];
      m.node_coords.push_back(c);
      BoundaryTag t = BoundaryTag::Interior;
      if (k == 0 || k == n_u) t = BoundaryTag::TransverseWall;
      else if (!base_interior[b]) t = BoundaryTag::LateralTruncation;
      m.tags.push_back(t);
    }
  for (int k = 0; k < n_u; ++k)
    for (int j = 0; j + 1 < ny; ++j)
      for (int i = 0; i + 1 < nx; ++i) {
        if (!cell_at(i, j)) continue;
        const int b00 = base_compact[static_cast<size_t>(j) * nx + i];
        const int b10 = base_compact[static_cast<size_t>(j) * nx + i + 1];
        const int b01 = base_compact[static_cast<size_t>(j + 1) * nx + i];
        const int b11 = base_compact[static_cast<size_t>(j + 1) * nx + i + 1];
        m.elements.push_back({node_id(b00, k), node_id(b10, k), node_id(b01, k), node_id(b11, k),
                              node_id(b00, k + 1), node_id(b10, k + 1), node_id(b01, k + 1),
                              node_id(b11, k + 1)});
      }
  return m;
}

}  // namespace layerlab
