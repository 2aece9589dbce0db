#pragma once

#include <array>
#include <vector>

#include "quench/sparse.hpp"

namespace quench {

/// Structured P1 triangulation of the unit square. Nodes are ordered
/// lexicographically by (y, x); every cell is split along the same
/// lower-left/upper-right diagonal into two counterclockwise right triangles.
struct TriangleMesh {
  int p = 0;             // refinement exponent, n_side = 2^p + 1
  index_t n_side = 0;    // nodes per side
  double h = 0.0;        // mesh size 1/2^p
  std::vector<std::array<double, 2>> coords;
  std::vector<std::array<index_t, 3>> elements;

  index_t n_nodes() const { return static_cast<index_t>(coords.size()); }
  index_t n_elements() const { return static_cast<index_t>(elements.size()); }
  index_t node_index(index_t ix, index_t iy) const { return iy * n_side + ix; }

  double element_area(index_t e) const;
};

/// Builds the uniform mesh for p in [2, 12].
TriangleMesh build_uniform_mesh(int p);

}  // namespace quench
