#pragma once

#include <cstdint>

#include "layerlab/assemble.hpp"

namespace layerlab {

/// kappa_1 = (pi / (2a))^2: lowest Dirichlet eigenvalue of -d^2/du^2 on (-a, a),
/// the transverse threshold below which bound states live.
double transverse_threshold(double a);

struct SpectralResult {
  std::vector<double> eigenvalues;     // ascending
  std::vector<double> residual_norms;  // ||K v - lambda M v|| / ||v||_M
  Mat eigenvectors;                    // columns, on reduced dofs
  double truncation_R = 0, h_base = 0, h_u = 0; // provenance, filled by callers
  int iterations = 0;
};

struct SolveOptions {
  double shift = 0.0;   // sigma for the shift-invert transform
  double tol = 1e-9;    // relative residual target
  int max_basis = 250;  // Lanczos basis cap before NoConvergence
  std::uint64_t seed = 0x5eed;
};

/// Smallest `count` generalized eigenpairs of (K, M) by shift-invert Lanczos
/// in the M inner product with full reorthogonalization. The factorization
/// retries with a perturbed shift when (K - sigma M) is singular.
SpectralResult lowest_eigenpairs(const OperatorPair& pair, int count, SolveOptions opts = {});

/// Dense oracle for small problems (GeneralizedSelfAdjointEigenSolver).
SpectralResult dense_eigenpairs(const OperatorPair& pair, int count);

/// (v^T K v) / (v^T M v).
double rayleigh_quotient(const OperatorPair& pair, const Vec& v);

}  // namespace layerlab
