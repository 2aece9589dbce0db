#include "quench/mesh.hpp"

#include "quench/errors.hpp"

namespace quench {

double TriangleMesh::element_area(index_t e) const {
  const auto& t = elements[e];
  const auto& a = coords[t[0]];
  const auto& b = coords[t[1]];
  const auto& c = coords[t[2]];
  return 0.5 * ((b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]));
}

TriangleMesh build_uniform_mesh(int p) {
  if (p < 2 || p > 12) throw ConfigError("build_uniform_mesh: p must be in [2, 12]");

  TriangleMesh mesh;
  mesh.p = p;
  mesh.n_side = static_cast<index_t>((1 << p) + 1);
  mesh.h = 1.0 / static_cast<double>(1 << p);

  const index_t n = mesh.n_side;
  mesh.coords.reserve(static_cast<std::size_t>(n) * n);
  for (index_t iy = 0; iy < n; ++iy)
    for (index_t ix = 0; ix < n; ++ix)
      mesh.coords.push_back({ix * mesh.h, iy * mesh.h});

  mesh.elements.reserve(2u * (n - 1) * (n - 1));
  for (index_t iy = 0; iy + 1 < n; ++iy) {
    for (index_t ix = 0; ix + 1 < n; ++ix) {
      const index_t ll = mesh.node_index(ix, iy);
      const index_t lr = mesh.node_index(ix + 1, iy);
      const index_t ul = mesh.node_index(ix, iy + 1);
      const index_t ur = mesh.node_index(ix + 1, iy + 1);
      mesh.elements.push_back({ll, lr, ur});
      mesh.elements.push_back({ll, ur, ul});
    }
  }
  return mesh;
}

}  // namespace quench
