#pragma once

#include <vector>

#include "quench/mesh.hpp"
#include "quench/sparse.hpp"

namespace quench {

/// Assembled blocks of the semi-implicit time-step system
///
///   [ A + dI   Bᵀ ] [u]      [f]          A = eps (K + m mᵀ)
///   [ B       -C  ] [w]  ∋   [g],         B = M,  C = tau K.
///
/// A is kept factored as eps*K plus the rank-one vector sqrt(eps)*m; the
/// dense m mᵀ block is never formed.
struct SaddleSystem {
  CsrMatrix K;            // stiffness, K·1 = 0
  CsrMatrix M;            // mass, sum of all entries = |Omega| = 1
  std::vector<double> m;  // m_p = <lambda_p, 1> = M·1
  double epsilon = 0.0;
  double tau = 0.0;
  double eta = 0.0;  // tau * epsilon, the parameter of the scaled system

  index_t n() const { return K.n_rows; }

  /// y = A x without forming m mᵀ.
  void apply_A(std::span<const double> x, std::span<double> y) const;
};

CsrMatrix assemble_stiffness(const TriangleMesh& mesh);
CsrMatrix assemble_mass(const TriangleMesh& mesh);
std::vector<double> assemble_mean_vector(const TriangleMesh& mesh);
SaddleSystem assemble_system(const TriangleMesh& mesh, double epsilon, double tau);

}  // namespace quench
