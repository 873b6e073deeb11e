#include "layerlab/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <random>

namespace layerlab {

double transverse_threshold(double a) {
  if (!(a > 0)) fail(ErrorCode::BadParameters, "half width must be positive");
  const double k = M_PI / (2.0 * a);
  return k * k;
}

double rayleigh_quotient(const OperatorPair& pair, const Vec& v) {
  const double vmv = v.dot(pair.mass * v);
  if (!(v.norm() > 0) || !(vmv > 0)) fail(ErrorCode::ZeroVector, "Rayleigh quotient of a null vector");
  return v.dot(pair.stiffness * v) / vmv;
}

namespace {

void check_pair(const OperatorPair& pair, int count) {
  if (!pair.reduced) fail(ErrorCode::BadParameters, "eigensolve expects a Dirichlet-reduced pair");
  if (count < 1) fail(ErrorCode::BadParameters, "count must be >= 1");
  if (pair.stiffness.rows() < count)
    fail(ErrorCode::BadParameters, "fewer dofs than requested eigenpairs");
}

std::vector<double> residuals(const OperatorPair& pair, const std::vector<double>& lambda,
                              const Mat& vecs) {
  std::vector<double> res;
  for (size_t i = 0; i < lambda.size(); ++i) {
    const Vec v = vecs.col(static_cast<Eigen::Index>(i));
    const double vm = std::sqrt(v.dot(pair.mass * v));
    res.push_back((pair.stiffness * v - lambda[i] * (pair.mass * v)).norm() / vm);
  }
  return res;
}

}  // namespace

SpectralResult dense_eigenpairs(const OperatorPair& pair, int count) {
  check_pair(pair, count);
  const Mat K = Mat(pair.stiffness), M = Mat(pair.mass);
  Eigen::GeneralizedSelfAdjointEigenSolver<Mat> es(K, M);
  if (es.info() != Eigen::Success) fail(ErrorCode::NoConvergence, "dense generalized solve failed");
  SpectralResult r;
  r.eigenvectors.resize(K.rows(), count);
  for (int i = 0; i < count; ++i) {
    r.eigenvalues.push_back(es.eigenvalues()(i));
    r.eigenvectors.col(i) = es.eigenvectors().col(i);
  }
  r.residual_norms = residuals(pair, r.eigenvalues, r.eigenvectors);
  return r;
}

SpectralResult lowest_eigenpairs(const OperatorPair& pair, int count, SolveOptions opts) {
  check_pair(pair, count);
  const int n = static_cast<int>(pair.stiffness.rows());
  const SpMat& K = pair.stiffness;
  const SpMat& M = pair.mass;

  // Factor K - sigma M, nudging the shift away from a singular point.
  double sigma = opts.shift;
  Eigen::SimplicialLDLT<SpMat> ldlt;
  bool ok = false;
  for (int attempt = 0; attempt < 4 && !ok; ++attempt) {
    SpMat A = K - sigma * M;
    ldlt.compute(A);
    ok = ldlt.info() == Eigen::Success;
    if (!ok) sigma -= 0.05 * (std::abs(sigma) + 1.0);
  }
  if (!ok) fail(ErrorCode::FactorizationFailure, "could not factor shifted matrix");

  // Lanczos on Op = (K - sigma M)^{-1} M in the M inner product.
  const int m_max = std::min(n, std::max(opts.max_basis, 6 * count + 30));
  std::vector<Vec> basis;   // M-orthonormal
  std::vector<Vec> mbasis;  // M * basis
  std::vector<double> alpha, beta;

  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v(n);
  for (int i = 0; i < n; ++i) v(i) = gauss(rng);
  Vec mv = M * v;
  v /= std::sqrt(v.dot(mv));
  basis.push_back(v);
  mbasis.push_back(M * v);

  SpectralResult result;
  const auto try_extract = [&](bool final_pass) -> bool {
    const int m = static_cast<int>(alpha.size());
    if (m < count) return false;
    Mat T = Mat::Zero(m, m);
    for (int i = 0; i < m; ++i) {
      T(i, i) = alpha[static_cast<size_t>(i)];
      if (i + 1 < m) T(i, i + 1) = T(i + 1, i) = beta[static_cast<size_t>(i)];
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(T);
    // Ritz values nu of Op map to lambda = sigma + 1/nu; sort by lambda.
    std::vector<int> order(static_cast<size_t>(m));
    std::vector<double> lam(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      const double nu = es.eigenvalues()(i);
      lam[static_cast<size_t>(i)] =
          (std::abs(nu) > 1e-300) ? sigma + 1.0 / nu : std::numeric_limits<double>::infinity();
      order[static_cast<size_t>(i)] = i;
    }
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return lam[static_cast<size_t>(a)] < lam[static_cast<size_t>(b)]; });

    Mat vecs(n, count);
    std::vector<double> vals;
    for (int i = 0; i < count; ++i) {
      const int oi = order[static_cast<size_t>(i)];
      Vec x = Vec::Zero(n);
      for (int j = 0; j < m; ++j) x += es.eigenvectors()(j, oi) * basis[static_cast<size_t>(j)];
      const double xm = std::sqrt(x.dot(M * x));
      vecs.col(i) = x / xm;
      vals.push_back(lam[static_cast<size_t>(oi)]);
    }
    std::vector<double> res = residuals(pair, vals, vecs);
    bool converged = true;
    for (int i = 0; i < count; ++i)
      converged = converged && res[static_cast<size_t>(i)] <= opts.tol * (1.0 + std::abs(vals[static_cast<size_t>(i)]));
    if (converged || final_pass) {
      result.eigenvalues = vals;
      result.eigenvectors = vecs;
      result.residual_norms = res;
      result.iterations = m;
    }
    return converged;
  };

  bool converged = false;
  for (int j = 0; j < m_max && !converged; ++j) {
    Vec w = ldlt.solve(mbasis[static_cast<size_t>(j)]);
    const double a = w.dot(mbasis[static_cast<size_t>(j)]);
    alpha.push_back(a);
    w -= a * basis[static_cast<size_t>(j)];
    if (j > 0) w -= beta[static_cast<size_t>(j - 1)] * basis[static_cast<size_t>(j - 1)];
    // Full reorthogonalization, twice for safety.
    for (int pass = 0; pass < 2; ++pass)
      for (size_t i = 0; i < basis.size(); ++i) w -= w.dot(mbasis[i]) * basis[i];
    const double b = std::sqrt(std::max(0.0, w.dot(M * w)));
    if (j + 1 >= count && (j % 5 == 4 || b < 1e-13)) converged = try_extract(false);
    if (b < 1e-13) {
      if (!converged && static_cast<int>(alpha.size()) >= count) converged = try_extract(false);
      break; // invariant subspace exhausted
    }
    if (converged || j + 1 == m_max || static_cast<int>(basis.size()) >= n) break;
    beta.push_back(b);
    basis.push_back(w / b);
    mbasis.push_back(M * basis.back());
  }
  if (!converged) {
    if (!try_extract(true))
      fail(ErrorCode::NoConvergence, "Lanczos basis exhausted before extraction");
    // Accept only if the final residuals already meet the tolerance.
    for (size_t i = 0; i < result.residual_norms.size(); ++i)
      if (result.residual_norms[i] > opts.tol * (1.0 + std::abs(result.eigenvalues[i])))
        fail(ErrorCode::NoConvergence,
             "eigensolver stalled at basis size " + std::to_string(result.iterations) +
                 ", residual " + std::to_string(result.residual_norms[i]));
  }
  return result;
}

}  // namespace layerlab
