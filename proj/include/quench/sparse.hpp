#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace quench {

using index_t = std::int32_t;

/// Compressed sparse row matrix. Column indices are strictly increasing
/// within each row and assembly drops exact zeros, so the stored pattern is
/// canonical: equal matrices have equal storage.
struct CsrMatrix {
  index_t n_rows = 0;
  index_t n_cols = 0;
  std::vector<index_t> row_ptr;  // size n_rows + 1
  std::vector<index_t> col;
  std::vector<double> val;

  index_t nnz() const { return static_cast<index_t>(col.size()); }

  /// y = A x  (row-parallel; bit-identical to the serial reference)
  void apply(std::span<const double> x, std::span<double> y) const;
  /// y += alpha * A x
  void apply_add(double alpha, std::span<const double> x, std::span<double> y) const;

  double entry(index_t i, index_t j) const;  // 0 if not stored
  std::vector<double> diagonal() const;
  std::vector<double> row_sums() const;
  CsrMatrix transposed() const;

  bool same_storage(const CsrMatrix& other) const;
};

namespace serial_ref {
void spmv(const CsrMatrix& a, std::span<const double> x, std::span<double> y);
}

/// Accumulates (i, j, value) triplets and compresses to canonical CSR:
/// duplicates summed, exact zeros dropped, columns sorted.
class CsrBuilder {
 public:
  CsrBuilder(index_t n_rows, index_t n_cols);
  void add(index_t i, index_t j, double value);
  CsrMatrix build() const;

 private:
  index_t n_rows_, n_cols_;
  std::vector<index_t> is_, js_;
  std::vector<double> vs_;
};

/// C = A + beta * B (patterns merged, exact zeros kept out)
CsrMatrix add_scaled(const CsrMatrix& a, double beta, const CsrMatrix& b);

/// B = PᵀAP for a sparse P (used for Galerkin coarse operators).
CsrMatrix triple_product(const CsrMatrix& p, const CsrMatrix& a);

/// Masked copy: rows/cols with keep[i]==false are cleared and the diagonal
/// there is set to `masked_diag` (the T·A·T + diag construction).
CsrMatrix masked_matrix(const CsrMatrix& a, const std::vector<std::uint8_t>& keep,
                        double masked_diag);

}  // namespace quench
