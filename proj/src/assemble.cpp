#include "layerlab/assemble.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <ostream>

namespace layerlab {

namespace {

// Multilinear shape function of corner c at reference point xi in [0,1]^d.
double shape_value(int c, const Vec& xi) {
  double v = 1.0;
  for (int d = 0; d < xi.size(); ++d) v *= ((c >> d) & 1) ? xi(d) : (1.0 - xi(d));
  return v;
}

Vec shape_grad(int c, const Vec& xi) {
  Vec g(xi.size());
  for (int d = 0; d < xi.size(); ++d) {
    double v = ((c >> d) & 1) ? 1.0 : -1.0;
    for (int e = 0; e < xi.size(); ++e) {
      if (e == d) continue;
      v *= ((c >> e) & 1) ? xi(e) : (1.0 - xi(e));
    }
    g(d) = v;
  }
  return g;
}

}  // namespace

OperatorPair assemble_full(const Mesh& mesh, const MetricAt& metric) {
  const int d = mesh.dim();
  const int npe = mesh.nodes_per_element();
  const int n_nodes = static_cast<int>(mesh.node_count());
  const int n_gauss = 1 << d;
  const double g0 = 0.5 - 0.5 / std::sqrt(3.0), g1 = 0.5 + 0.5 / std::sqrt(3.0);

  // Gauss points and cached shape values/gradients on the reference cell.
  std::vector<Vec> gp(n_gauss, Vec(d));
  for (int q = 0; q < n_gauss; ++q)
    for (int e = 0; e < d; ++e) gp[q](e) = ((q >> e) & 1) ? g1 : g0;
  const double gw = std::pow(0.5, d);
  std::vector<std::vector<double>> val(n_gauss, std::vector<double>(npe));
  std::vector<std::vector<Vec>> grad(n_gauss, std::vector<Vec>(npe));
  for (int q = 0; q < n_gauss; ++q)
    for (int c = 0; c < npe; ++c) {
      val[q][c] = shape_value(c, gp[q]);
      grad[q][c] = shape_grad(c, gp[q]);
    }

  std::vector<Eigen::Triplet<double>> kt, mt;
  kt.reserve(mesh.elements.size() * npe * (npe + 1) / 2);
  mt.reserve(mesh.elements.size() * npe * (npe + 1) / 2);

  Mat kloc(npe, npe), mloc(npe, npe);
  Vec len(d), xq(d), gphi_p(d), gphi_q(d);
  for (const auto& el : mesh.elements) {
    const Vec& x0 = mesh.node_coords[static_cast<size_t>(el[0])];
    for (int e = 0; e < d; ++e)
      len(e) = mesh.node_coords[static_cast<size_t>(el[1 << e])](e) - x0(e);
    const double cellvol = len.prod();
    kloc.setZero();
    mloc.setZero();
    for (int q = 0; q < n_gauss; ++q) {
      for (int e = 0; e < d; ++e) xq(e) = x0(e) + len(e) * gp[q](e);
      const MetricTensor G = metric(xq);
      const double w = gw * cellvol * std::sqrt(G.det);
      for (int p = 0; p < npe; ++p) {
        gphi_p = grad[q][p].cwiseQuotient(len);
        for (int r = p; r < npe; ++r) {
          gphi_q = grad[q][r].cwiseQuotient(len);
          kloc(p, r) += w * gphi_p.dot(G.inverse * gphi_q);
          mloc(p, r) += w * val[q][p] * val[q][r];
        }
      }
    }
    if (!kloc.allFinite() || !mloc.allFinite())
      fail(ErrorCode::AssemblyNaN, "non-finite element contribution");
    for (int p = 0; p < npe; ++p)
      for (int r = p; r < npe; ++r) {
        const int a = el[p], b = el[r];
        const int lo = std::min(a, b), hi = std::max(a, b);
        kt.emplace_back(lo, hi, kloc(p, r));
        mt.emplace_back(lo, hi, mloc(p, r));
      }
  }

  OperatorPair pair;
  SpMat ku(n_nodes, n_nodes), mu(n_nodes, n_nodes);
  ku.setFromTriplets(kt.begin(), kt.end());
  mu.setFromTriplets(mt.begin(), mt.end());
  pair.stiffness = ku.selfadjointView<Eigen::Upper>();
  pair.mass = mu.selfadjointView<Eigen::Upper>();
  pair.reduced = false;
  return pair;
}

OperatorPair assemble_full(const Mesh& mesh, const LayerGeometry& layer) {
  const int n = layer.base.dim_base;
  MetricAt metric = [&layer, n](const Vec& xu) {
    return pullback_metric(layer, xu.head(n), xu(n));
  };
  if (mesh.base_dim == 0)
    metric = [](const Vec&) {
      MetricTensor m;
      m.g = Mat::Identity(1, 1);
      m.inverse = m.g;
      m.det = 1.0;
      return m;
    };
  return assemble_full(mesh, metric);
}

OperatorPair apply_dirichlet(const OperatorPair& pair, const std::vector<BoundaryTag>& tags) {
  if (static_cast<Eigen::Index>(tags.size()) != pair.stiffness.rows())
    fail(ErrorCode::BadParameters, "tag list does not match operator size");
  std::vector<int> old2new(tags.size(), -1);
  std::vector<int> dof_map;
  for (size_t i = 0; i < tags.size(); ++i)
    if (tags[i] == BoundaryTag::Interior) {
      old2new[i] = static_cast<int>(dof_map.size());
      dof_map.push_back(static_cast<int>(i));
    }
  if (dof_map.empty()) fail(ErrorCode::EmptyInterior, "all nodes eliminated by Dirichlet tags");

  const auto reduce = [&](const SpMat& m) {
    std::vector<Eigen::Triplet<double>> t;
    t.reserve(static_cast<size_t>(m.nonZeros()));
    for (int k = 0; k < m.outerSize(); ++k)
      for (SpMat::InnerIterator it(m, k); it; ++it) {
        const int r = old2new[static_cast<size_t>(it.row())];
        const int c = old2new[static_cast<size_t>(it.col())];
        if (r >= 0 && c >= 0) t.emplace_back(r, c, it.value());
      }
    SpMat out(static_cast<int>(dof_map.size()), static_cast<int>(dof_map.size()));
    out.setFromTriplets(t.begin(), t.end());
    return out;
  };

  OperatorPair out;
  out.stiffness = reduce(pair.stiffness);
  out.mass = reduce(pair.mass);
  out.dof_map = std::move(dof_map);
  out.reduced = true;
  return out;
}

OperatorPair assemble(const Mesh& mesh, const LayerGeometry& layer) {
  return apply_dirichlet(assemble_full(mesh, layer), mesh.tags);
}

void dump_coordinate(const SpMat& m, std::ostream& os) {
  for (int k = 0; k < m.outerSize(); ++k)
    for (SpMat::InnerIterator it(m, k); it; ++it)
      os << it.row() << " " << it.col() << " " << it.value() << "\n";
}

}  // namespace layerlab
