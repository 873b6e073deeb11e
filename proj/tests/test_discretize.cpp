#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/SparseCholesky>
#include <cmath>
#include <limits>
#include <sstream>

#include "layerlab/assemble.hpp"
#include "layerlab/spectral.hpp"
#include "layerlab/surfaces.hpp"
#include "oracles.hpp"

using namespace layerlab;

namespace {

LayerGeometry layer_of(ImmersionChart c, double a, double c0 = 0.9) {
  LayerGeometry l;
  l.base = std::move(c);
  l.half_width = a;
  l.safety_c0 = c0;
  return l;
}

int count_tag(const Mesh& m, BoundaryTag t) {
  int n = 0;
  for (const auto& tag : m.tags) n += (tag == t);
  return n;
}

double sparse_sum(const SpMat& m) {
  double s = 0;
  for (int k = 0; k < m.outerSize(); ++k)
    for (SpMat::InnerIterator it(m, k); it; ++it) s += it.value();
  return s;
}

}  // namespace

TEST_CASE("strip mesh counting and tags") {
  const LayerGeometry strip = layer_of(make_straight_strip(), 0.5);
  const Mesh m = build_mesh(strip, 10.0, 0.5, 2.0 * 0.5 / 8);
  const int base_nodes = 41; // lines at multiples of 0.5 in [-10, 10]
  CHECK(m.node_count() == static_cast<size_t>(base_nodes * 9));
  CHECK(m.elements.size() == static_cast<size_t>(40 * 8));
  CHECK(count_tag(m, BoundaryTag::TransverseWall) == 2 * base_nodes);
  for (size_t i = 0; i < m.node_count(); ++i) {
    const Vec& c = m.node_coords[i];
    if (std::abs(std::abs(c(1)) - 0.5) < 1e-12)
      CHECK(m.tags[i] == BoundaryTag::TransverseWall);
    else if (std::abs(std::abs(c(0)) - 10.0) < 1e-12)
      CHECK(m.tags[i] == BoundaryTag::LateralTruncation);
  }
}

TEST_CASE("layer mesh on the parameter disc") {
  const LayerGeometry flat = layer_of(make_plane(), 0.5);
  const Mesh m = build_mesh(flat, 4.0, 0.5, 0.125);
  REQUIRE(!m.elements.empty());
  const int base_nodes = static_cast<int>(m.node_count()) / 9;
  CHECK(static_cast<int>(m.node_count()) == base_nodes * 9);
  CHECK(count_tag(m, BoundaryTag::TransverseWall) == 2 * base_nodes);
  for (size_t i = 0; i < m.node_count(); ++i)
    CHECK(m.node_coords[i].head(2).norm() <= 4.0 + 1e-9);

  CHECK_THROWS_AS(build_mesh(flat, 4.0, 0.5, 0.4), Error);    // < 4 transverse cells
  CHECK_THROWS_AS(build_mesh(flat, 4.0, 9.0, 0.125), Error);  // no base cells
  const LayerGeometry patch = layer_of(make_sphere(1.0, 0.9), 0.2);
  CHECK_THROWS_AS(build_mesh(patch, 2.0, 0.1, 0.05), Error);  // beyond chart domain
}

TEST_CASE("mass row sums accumulate the layer volume") {
  // Flat slab: the volume element is exactly 1, quadrature is exact.
  const LayerGeometry flat = layer_of(make_plane(), 0.5);
  const Mesh m = build_mesh(flat, 3.0, 0.5, 0.125);
  const OperatorPair full = assemble_full(m, flat);
  const int base_cells = static_cast<int>(m.elements.size()) / 8;
  const double volume = base_cells * 0.25 * 1.0;
  CHECK(sparse_sum(full.mass) == doctest::Approx(volume).epsilon(1e-10));

  // Curved n = 1 layer: int (1 - u/rho) du over (-a, a) is exactly 2a.
  const LayerGeometry ring = layer_of(make_circle_strip(4.0), 0.4);
  const Mesh rm = build_mesh(ring, 2.0, 0.25, 0.1);
  const OperatorPair rfull = assemble_full(rm, ring);
  CHECK(sparse_sum(rfull.mass) == doctest::Approx(4.0 * 0.8).epsilon(1e-9));
}

TEST_CASE("constants span the pre-elimination stiffness kernel") {
  const LayerGeometry bump = layer_of(make_gaussian_bump(1, 1), 0.5);
  const Mesh m = build_mesh(bump, 2.0, 0.5, 0.125);
  const OperatorPair full = assemble_full(m, bump);
  const Vec ones = Vec::Ones(full.stiffness.rows());
  CHECK((full.stiffness * ones).cwiseAbs().maxCoeff() < 1e-10);
  const SpMat diff = SpMat(full.stiffness.transpose()) - full.stiffness;
  CHECK(Mat(diff).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("apply_dirichlet reduces to the textbook tridiagonal pair") {
  const Mesh m = build_interval_mesh(1.0, 4); // h = 0.5, 3 interior nodes
  const LayerGeometry dummy = layer_of(make_straight_strip(), 1.0);
  const OperatorPair full = assemble_full(m, dummy);
  const OperatorPair red = apply_dirichlet(full, m.tags);
  REQUIRE(red.stiffness.rows() == 3);
  REQUIRE(red.dof_map.size() == 3);
  const Mat K = Mat(red.stiffness), M = Mat(red.mass);
  const double h = 0.5;
  for (int i = 0; i < 3; ++i) {
    CHECK(K(i, i) == doctest::Approx(2.0 / h));
    CHECK(M(i, i) == doctest::Approx(4.0 * h / 6.0));
    if (i + 1 < 3) {
      CHECK(K(i, i + 1) == doctest::Approx(-1.0 / h));
      CHECK(M(i, i + 1) == doctest::Approx(h / 6.0));
    }
  }
  CHECK(K(0, 2) == 0.0);

  Eigen::SimplicialLLT<SpMat> llt(red.mass);
  CHECK(llt.info() == Eigen::Success); // mass positive definite
  Eigen::SimplicialLLT<SpMat> kllt(red.stiffness);
  CHECK(kllt.info() == Eigen::Success); // stiffness PD after elimination

  std::vector<BoundaryTag> all_wall(m.node_count(), BoundaryTag::TransverseWall);
  CHECK_THROWS_AS(apply_dirichlet(full, all_wall), Error); // EmptyInterior
}

TEST_CASE("flat strip eigenvalues reproduce the rectangle spectrum") {
  const LayerGeometry strip = layer_of(make_straight_strip(), 0.5);
  const Mesh m = build_mesh(strip, 1.0, 0.025, 0.025);
  const OperatorPair pair = assemble(m, strip);
  SolveOptions opts;
  opts.shift = 0.9 * transverse_threshold(0.5);
  const SpectralResult sol = lowest_eigenpairs(pair, 3, opts);
  // (L, W) = (2, 1): lambda_{jk} = pi^2 (j^2/4 + k^2).
  CHECK(sol.eigenvalues[0] ==
        doctest::Approx(oracles::rectangle_eigenvalue(1, 1, 2, 1)).epsilon(5e-3));
  CHECK(sol.eigenvalues[1] ==
        doctest::Approx(oracles::rectangle_eigenvalue(2, 1, 2, 1)).epsilon(5e-3));
  CHECK(sol.eigenvalues[2] ==
        doctest::Approx(oracles::rectangle_eigenvalue(3, 1, 2, 1)).epsilon(5e-3));
}

TEST_CASE("second-order convergence on the flat strip") {
  const LayerGeometry strip = layer_of(make_straight_strip(), 0.5);
  const double exact = oracles::rectangle_eigenvalue(1, 1, 4, 1);
  double prev_err = 0, ratio = 0;
  int level = 0;
  for (double h : {0.1, 0.05, 0.025}) {
    const Mesh m = build_mesh(strip, 2.0, h, h);
    const OperatorPair pair = assemble(m, strip);
    SolveOptions opts;
    opts.shift = 0.5 * exact;
    const double lam = lowest_eigenpairs(pair, 1, opts).eigenvalues[0];
    const double err = std::abs(lam - exact);
    CHECK(lam > exact); // conforming elements bound from above
    if (level > 0) ratio = prev_err / err;
    prev_err = err;
    ++level;
  }
  CHECK(ratio > 3.4);
  CHECK(ratio < 4.6);
}

TEST_CASE("rigid ambient motions leave the matrices unchanged") {
  const LayerGeometry bump = layer_of(make_gaussian_bump(1, 1), 0.5);

  LayerGeometry moved = bump;
  Eigen::Matrix3d Q;
  const double c = std::cos(0.7), s = std::sin(0.7);
  Q << c, -s, 0, s, c, 0, 0, 0, 1;
  Eigen::Matrix3d tilt;
  const double c2 = std::cos(0.3), s2 = std::sin(0.3);
  tilt << 1, 0, 0, 0, c2, -s2, 0, s2, c2;
  Q = tilt * Q;
  const Vec3 shift(0.4, -1.1, 2.0);
  auto base_map = bump.base.map;
  auto base_jac = bump.base.jacobian;
  auto base_hess = bump.base.hessian;
  moved.base.map = [base_map, Q, shift](const Vec& x) { return (Q * base_map(x) + shift).eval(); };
  moved.base.jacobian = [base_jac, Q](const Vec& x) { return (Q * base_jac(x)).eval(); };
  moved.base.hessian = [base_hess, Q](const Vec& x) {
    const std::vector<Mat> H = base_hess(x);
    std::vector<Mat> out(3, Mat::Zero(2, 2));
    for (int c = 0; c < 3; ++c)
      for (int d = 0; d < 3; ++d) out[c] += Q(c, d) * H[d];
    return out;
  };

  const Mesh m = build_mesh(bump, 2.0, 0.5, 0.25);
  const OperatorPair a = assemble(m, bump);
  const OperatorPair b = assemble(m, moved);
  CHECK((Mat(a.stiffness) - Mat(b.stiffness)).cwiseAbs().maxCoeff() < 1e-10);
  CHECK((Mat(a.mass) - Mat(b.mass)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("lambda_1 is non-increasing as the truncation grows") {
  const LayerGeometry strip = layer_of(make_straight_strip(), 0.5);
  double prev = 1e300;
  for (double R : {4.0, 6.0, 8.0}) {
    const Mesh m = build_mesh(strip, R, 0.1, 0.1);
    const OperatorPair pair = assemble(m, strip);
    SolveOptions opts;
    opts.shift = 0.9 * transverse_threshold(0.5);
    const double lam = lowest_eigenpairs(pair, 1, opts).eigenvalues[0];
    CHECK(lam < prev * (1 + 1e-12));
    prev = lam;
  }
}

TEST_CASE("non-finite chart values surface as AssemblyNaN") {
  LayerGeometry broken = layer_of(make_plane(), 0.5);
  auto base_map = broken.base.map;
  broken.base.map = [base_map](const Vec& x) {
    Vec p = base_map(x);
    if (x.norm() > 1.0) p(2) = std::numeric_limits<double>::quiet_NaN();
    return p;
  };
  broken.base.jacobian = nullptr;
  broken.base.hessian = nullptr;
  const Mesh m = build_mesh(broken, 2.0, 0.5, 0.125);
  CHECK_THROWS_AS(assemble_full(m, broken), Error);
}

TEST_CASE("coordinate dump emits one line per stored entry") {
  const Mesh m = build_interval_mesh(1.0, 4);
  const LayerGeometry dummy = layer_of(make_straight_strip(), 1.0);
  const OperatorPair red = apply_dirichlet(assemble_full(m, dummy), m.tags);
  std::ostringstream os;
  dump_coordinate(red.stiffness, os);
  int rows = 0;
  for (char ch : os.str()) rows += (ch == '\n');
  CHECK(rows == red.stiffness.nonZeros());
}
