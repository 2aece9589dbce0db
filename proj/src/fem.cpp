#include "quench/fem.hpp"

#include <array>

#include "quench/errors.hpp"
#include "quench/kernels.hpp"

namespace quench {

void SaddleSystem::apply_A(std::span<const double> x, std::span<double> y) const {
  K.apply(x, y);
  const double mx = kernels::dot(m, x);
  kernels::scale(epsilon, y);
  kernels::axpy(epsilon * mx, m, y);
}

CsrMatrix assemble_stiffness(const TriangleMesh& mesh) {
  CsrBuilder builder(mesh.n_nodes(), mesh.n_nodes());
  for (index_t e = 0; e < mesh.n_elements(); ++e) {
    const auto& t = mesh.elements[e];
    const double area = mesh.element_area(e);
    if (area <= 0.0) throw NumericalError("assemble_stiffness: degenerate triangle");
    // Gradients of the P1 hat functions: grad phi_i = (b_i, c_i) / (2 area).
    std::array<double, 3> b, c;
    for (int i = 0; i < 3; ++i) {
      const auto& pj = mesh.coords[t[(i + 1) % 3]];
      const auto& pk = mesh.coords[t[(i + 2) % 3]];
      b[i] = pj[1] - pk[1];
      c[i] = pk[0] - pj[0];
    }
    const double s = 1.0 / (4.0 * area);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        builder.add(t[i], t[j], (b[i] * b[j] + c[i] * c[j]) * s);
  }
  return builder.build();
}

CsrMatrix assemble_mass(const TriangleMesh& mesh) {
  CsrBuilder builder(mesh.n_nodes(), mesh.n_nodes());
  for (index_t e = 0; e < mesh.n_elements(); ++e) {
    const auto& t = mesh.elements[e];
    const double area = mesh.element_area(e);
    if (area <= 0.0) throw NumericalError("assemble_mass: degenerate triangle");
    const double off = area / 12.0;
    const double diag = 2.0 * off;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        builder.add(t[i], t[j], i == j ? diag : off);
  }
  return builder.build();
}

std::vector<double> assemble_mean_vector(const TriangleMesh& mesh) {
  return assemble_mass(mesh).row_sums();
}

SaddleSystem assemble_system(const TriangleMesh& mesh, double epsilon, double tau) {
  if (!(epsilon > 0.0) || !(tau > 0.0))
    throw ConfigError("assemble_system: epsilon and tau must be positive");
  SaddleSystem sys;
  sys.K = assemble_stiffness(mesh);
  sys.M = assemble_mass(mesh);
  sys.m = sys.M.row_sums();
  sys.epsilon = epsilon;
  sys.tau = tau;
  sys.eta = tau * epsilon;
  return sys;
}

}  // namespace quench
