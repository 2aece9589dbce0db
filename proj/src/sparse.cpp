#include "quench/sparse.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "quench/errors.hpp"

namespace quench {

void CsrMatrix::apply(std::span<const double> x, std::span<double> y) const {
  if (static_cast<index_t>(x.size()) != n_cols || static_cast<index_t>(y.size()) != n_rows)
    throw ContractError("CsrMatrix::apply: dimension mismatch");
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n_rows; ++i) {
    double s = 0.0;
    for (index_t k = row_ptr[i]; k < row_ptr[i + 1]; ++k) s += val[k] * x[col[k]];
    y[i] = s;
  }
}

void CsrMatrix::apply_add(double alpha, std::span<const double> x, std::span<double> y) const {
  if (static_cast<index_t>(x.size()) != n_cols || static_cast<index_t>(y.size()) != n_rows)
    throw ContractError("CsrMatrix::apply_add: dimension mismatch");
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n_rows; ++i) {
    double s = 0.0;
    for (index_t k = row_ptr[i]; k < row_ptr[i + 1]; ++k) s += val[k] * x[col[k]];
    y[i] += alpha * s;
  }
}

namespace serial_ref {
void spmv(const CsrMatrix& a, std::span<const double> x, std::span<double> y) {
  for (index_t i = 0; i < a.n_rows; ++i) {
    double s = 0.0;
    for (index_t k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) s += a.val[k] * x[a.col[k]];
    y[i] = s;
  }
}
}  // namespace serial_ref

double CsrMatrix::entry(index_t i, index_t j) const {
  for (index_t k = row_ptr[i]; k < row_ptr[i + 1]; ++k)
    if (col[k] == j) return val[k];
  return 0.0;
}

std::vector<double> CsrMatrix::diagonal() const {
  std::vector<double> d(n_rows, 0.0);
  for (index_t i = 0; i < n_rows; ++i) d[i] = entry(i, i);
  return d;
}

std::vector<double> CsrMatrix::row_sums() const {
  std::vector<double> s(n_rows, 0.0);
  for (index_t i = 0; i < n_rows; ++i) {
    double r = 0.0;
    for (index_t k = row_ptr[i]; k < row_ptr[i + 1]; ++k) r += val[k];
    s[i] = r;
  }
  return s;
}

CsrMatrix CsrMatrix::transposed() const {
  CsrBuilder b(n_cols, n_rows);
  for (index_t i = 0; i < n_rows; ++i)
    for (index_t k = row_ptr[i]; k < row_ptr[i + 1]; ++k) b.add(col[k], i, val[k]);
  return b.build();
}

bool CsrMatrix::same_storage(const CsrMatrix& other) const {
  return n_rows == other.n_rows && n_cols == other.n_cols && row_ptr == other.row_ptr &&
         col == other.col && val == other.val;
}

CsrBuilder::CsrBuilder(index_t n_rows, index_t n_cols) : n_rows_(n_rows), n_cols_(n_cols) {
  if (n_rows < 0 || n_cols < 0) throw ContractError("CsrBuilder: negative dimension");
}

void CsrBuilder::add(index_t i, index_t j, double value) {
  if (i < 0 || i >= n_rows_ || j < 0 || j >= n_cols_)
    throw ContractError("CsrBuilder::add: index out of range");
  is_.push_back(i);
  js_.push_back(j);
  vs_.push_back(value);
}

CsrMatrix CsrBuilder::build() const {
  const std::size_t nt = is_.size();
  std::vector<std::size_t> order(nt);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return is_[a] != is_[b] ? is_[a] < is_[b] : js_[a] < js_[b];
  });

  CsrMatrix m;
  m.n_rows = n_rows_;
  m.n_cols = n_cols_;
  m.row_ptr.assign(n_rows_ + 1, 0);
  m.col.reserve(nt);
  m.val.reserve(nt);

  std::size_t k = 0;
  for (index_t i = 0; i < n_rows_; ++i) {
    while (k < nt && is_[order[k]] == i) {
      const index_t j = js_[order[k]];
      double sum = 0.0;
      while (k < nt && is_[order[k]] == i && js_[order[k]] == j) {
        sum += vs_[order[k]];
        ++k;
      }
      if (sum != 0.0) {
        m.col.push_back(j);
        m.val.push_back(sum);
      }
    }
    m.row_ptr[i + 1] = static_cast<index_t>(m.col.size());
  }
  return m;
}

CsrMatrix add_scaled(const CsrMatrix& a, double beta, const CsrMatrix& b) {
  if (a.n_rows != b.n_rows || a.n_cols != b.n_cols)
    throw ContractError("add_scaled: shape mismatch");
  CsrBuilder out(a.n_rows, a.n_cols);
  for (index_t i = 0; i < a.n_rows; ++i) {
    for (index_t k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) out.add(i, a.col[k], a.val[k]);
    for (index_t k = b.row_ptr[i]; k < b.row_ptr[i + 1]; ++k) out.add(i, b.col[k], beta * b.val[k]);
  }
  return out.build();
}

CsrMatrix triple_product(const CsrMatrix& p, const CsrMatrix& a) {
  if (a.n_rows != p.n_rows || a.n_cols != p.n_rows)
    throw ContractError("triple_product: A must be n_fine x n_fine");
  // Pᵀ A P with P tall (n_fine x n_coarse).
  CsrBuilder out(p.n_cols, p.n_cols);
  for (index_t i = 0; i < a.n_rows; ++i) {
    for (index_t ka = a.row_ptr[i]; ka < a.row_ptr[i + 1]; ++ka) {
      const index_t j = a.col[ka];
      const double av = a.val[ka];
      for (index_t kp = p.row_ptr[i]; kp < p.row_ptr[i + 1]; ++kp) {
        for (index_t kq = p.row_ptr[j]; kq < p.row_ptr[j + 1]; ++kq) {
          out.add(p.col[kp], p.col[kq], p.val[kp] * av * p.val[kq]);
        }
      }
    }
  }
  return out.build();
}

CsrMatrix masked_matrix(const CsrMatrix& a, const std::vector<std::uint8_t>& keep,
                        double masked_diag) {
  if (static_cast<index_t>(keep.size()) != a.n_rows || a.n_rows != a.n_cols)
    throw ContractError("masked_matrix: square matrix and full-size mask required");
  CsrBuilder out(a.n_rows, a.n_cols);
  for (index_t i = 0; i < a.n_rows; ++i) {
    if (!keep[i]) {
      if (masked_diag != 0.0) out.add(i, i, masked_diag);
      continue;
    }
    for (index_t k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k)
      if (keep[a.col[k]]) out.add(i, a.col[k], a.val[k]);
  }
  return out.build();
}

}  // namespace quench
