#include "layerlab/geodesic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace layerlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Plane-wave update of vertex C from frozen vertices A, B with straight-edge
// lengths b = |AC|, a = |BC|, c = |AB|. Falls back to edge propagation when
// the characteristic would not pass through segment AB.
double triangle_update(double ua, double ub, double b, double a, double c) {
  if (ub < ua) {
    std::swap(ua, ub);
    std::swap(a, b);
  }
  const double delta = ub - ua;
  const double edge = std::min(ua + b, ub + a);
  if (!(c > 0.0) || delta > c) return edge;
  // Embed A at the origin and B at (c, 0); place C above the edge.
  const double cx = (b * b + c * c - a * a) / (2.0 * c);
  const double cy2 = b * b - cx * cx;
  if (cy2 <= 0.0) return edge;
  const double cy = std::sqrt(cy2);
  const double root = std::sqrt(std::max(0.0, c * c - delta * delta));
  const double cand = ua + (delta * cx + root * cy) / c;
  // Characteristic foot on the AB line must fall inside the segment.
  if (root <= 0.0) return edge;
  const double foot = cx - delta * cy / root;
  if (foot <= 0.0 || foot >= c) return edge;
  if (cand < ub) return edge; // acausal
  return std::min(cand, edge);
}

}  // namespace

double DistanceField::at(double x, double y) const {
  const double fx = std::clamp((x - x0) / h, 0.0, static_cast<double>(nx - 1) - 1e-12);
  const double fy = std::clamp((y - y0) / h, 0.0, static_cast<double>(ny - 1) - 1e-12);
  const int i = static_cast<int>(fx), j = static_cast<int>(fy);
  const double tx = fx - i, ty = fy - j;
  return (1 - tx) * (1 - ty) * dist(i, j) + tx * (1 - ty) * dist(i + 1, j) +
         (1 - tx) * ty * dist(i, j + 1) + tx * ty * dist(i + 1, j + 1);
}

DistanceField geodesic_distance_field(const ImmersionChart& chart, const Vec& center,
                                      double extent, double h) {
  if (chart.dim_base != 2)
    fail(ErrorCode::UnsupportedDimension, "fast marching implemented for n = 2 charts");
  if (!(h > 0.0) || !(extent > h))
    fail(ErrorCode::BadParameters, "geodesic field needs extent > h > 0");

  DistanceField f;
  f.h = h;
  f.nx = f.ny = 2 * static_cast<int>(std::ceil(extent / h)) + 1;
  f.x0 = center(0) - (f.nx - 1) / 2 * h;
  f.y0 = center(1) - (f.ny - 1) / 2 * h;
  f.dist = Mat::Constant(f.nx, f.ny, kInf);

  const int nx = f.nx, ny = f.ny;
  const auto id = [nx](int i, int j) { return j * nx + i; };

  // Ambient positions of all grid nodes.
  std::vector<Vec3> pos(static_cast<size_t>(nx) * ny);
  Vec x(2);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      x << f.x0 + i * h, f.y0 + j * h;
      const Vec p = chart.at(x);
      pos[id(i, j)] = Vec3(p(0), p(1), p(2));
    }

  std::vector<char> frozen(static_cast<size_t>(nx) * ny, 0);
  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;

  // Seed an exact ring around the source: chordal distance through the
  // immersion is second-order accurate at this scale.
  const int ci = (nx - 1) / 2, cj = (ny - 1) / 2;
  const Vec3 cpos = pos[id(ci, cj)];
  const int ring = 3;
  for (int dj = -ring; dj <= ring; ++dj)
    for (int di = -ring; di <= ring; ++di) {
      const int i = ci + di, j = cj + dj;
      if (i < 0 || j < 0 || i >= nx || j >= ny) continue;
      f.dist(i, j) = (pos[id(i, j)] - cpos).norm();
      heap.emplace(f.dist(i, j), id(i, j));
    }

  constexpr int off[8][2] = {{1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}, {0, -1}, {1, -1}};

  const auto update_node = [&](int i, int j) {
    const int c = id(i, j);
    double best = f.dist(i, j);
    const Vec3& pc = pos[c];
    for (int t = 0; t < 8; ++t) {
      const int ai = i + off[t][0], aj = j + off[t][1];
      const int bi = i + off[(t + 1) % 8][0], bj = j + off[(t + 1) % 8][1];
      if (ai < 0 || aj < 0 || ai >= nx || aj >= ny) continue;
      const int a = id(ai, aj);
      if (!frozen[a]) continue;
      const double ua = f.dist(ai, aj);
      const double la = (pos[a] - pc).norm();
      best = std::min(best, ua + la);
      if (bi < 0 || bj < 0 || bi >= nx || bj >= ny) continue;
      const int b = id(bi, bj);
      if (!frozen[b]) continue;
      best = std::min(best, triangle_update(ua, f.dist(bi, bj), la, (pos[b] - pc).norm(),
                                            (pos[b] - pos[a]).norm()));
    }
    if (best < f.dist(i, j)) {
      f.dist(i, j) = best;
      heap.emplace(best, c);
    }
  };

  while (!heap.empty()) {
    const auto [d, c] = heap.top();
    heap.pop();
    if (frozen[c] || d > f.dist(c % nx, c / nx)) continue;
    frozen[c] = 1;
    const int i = c % nx, j = c / nx;
    for (const auto& o : off) {
      const int ni = i + o[0], nj = j + o[1];
      if (ni < 0 || nj < 0 || ni >= nx || nj >= ny) continue;
      if (!frozen[id(ni, nj)]) update_node(ni, nj);
    }
  }

  double boundary_min = kInf;
  for (int i = 0; i < nx; ++i)
    boundary_min = std::min({boundary_min, f.dist(i, 0), f.dist(i, ny - 1)});
  for (int j = 0; j < ny; ++j)
    boundary_min = std::min({boundary_min, f.dist(0, j), f.dist(nx - 1, j)});
  f.reliable_radius = boundary_min;
  return f;
}

double arclength_1d(const ImmersionChart& chart, double s_from, double s_to,
                    int cells_per_unit) {
  const double len = std::abs(s_to - s_from);
  const int cells = std::max(4, static_cast<int>(std::ceil(len * cells_per_unit)));
  const double ds = (s_to - s_from) / cells;
  double acc = 0.0;
  Vec x(1);
  for (int k = 0; k < cells; ++k) {
    x(0) = s_from + (k + 0.5) * ds;
    acc += chart.jac(x).col(0).norm() * std::abs(ds);
  }
  return acc;
}

}  // namespace layerlab
