#include "quench/ic.hpp"

#include <cmath>

#include "quench/errors.hpp"

namespace quench {

IncompleteCholesky::IncompleteCholesky(const CsrMatrix& a) {
  if (a.n_rows != a.n_cols) throw ContractError("IncompleteCholesky: square matrix required");
  n_ = a.n_rows;
  double shift = 0.0;
  for (int attempt = 0; attempt <= 3; ++attempt) {
    if (try_factor(a, shift)) {
      shift_used_ = shift;
      return;
    }
    shift = (shift == 0.0) ? 1e-3 : shift * 10.0;
  }
  throw NumericalError("IncompleteCholesky: pivot stayed non-positive after 3 diagonal shifts");
}

bool IncompleteCholesky::try_factor(const CsrMatrix& a, double shift) {
  row_ptr_.assign(n_ + 1, 0);
  col_.clear();
  val_.clear();
  for (index_t i = 0; i < n_; ++i) {
    for (index_t k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) {
      if (a.col[k] <= i) {
        col_.push_back(a.col[k]);
        double v = a.val[k];
        if (a.col[k] == i) v *= 1.0 + shift;
        val_.push_back(v);
      }
    }
    row_ptr_[i + 1] = static_cast<index_t>(col_.size());
  }

  std::vector<index_t> diag_pos(n_);
  for (index_t i = 0; i < n_; ++i) {
    if (row_ptr_[i + 1] == row_ptr_[i] || col_[row_ptr_[i + 1] - 1] != i) return false;
    diag_pos[i] = row_ptr_[i + 1] - 1;
  }

  for (index_t i = 0; i < n_; ++i) {
    for (index_t k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k) {
      const index_t j = col_[k];
      // dot of the already-computed parts of rows i and j (merge walk)
      double s = 0.0;
      index_t pi = row_ptr_[i], pj = row_ptr_[j];
      while (pi < k && pj < diag_pos[j]) {
        if (col_[pi] == col_[pj]) {
          s += val_[pi] * val_[pj];
          ++pi;
          ++pj;
        } else if (col_[pi] < col_[pj]) {
          ++pi;
        } else {
          ++pj;
        }
      }
      if (j < i) {
        val_[k] = (val_[k] - s) / val_[diag_pos[j]];
      } else {
        const double piv = val_[k] - s;
        if (!(piv > 0.0)) return false;
        val_[k] = std::sqrt(piv);
      }
    }
  }
  return true;
}

void IncompleteCholesky::apply(std::span<const double> x, std::span<double> y) const {
  if (static_cast<index_t>(x.size()) != n_ || static_cast<index_t>(y.size()) != n_)
    throw ContractError("IncompleteCholesky::apply: dimension mismatch");
  // L z = x
  for (index_t i = 0; i < n_; ++i) {
    double s = x[i];
    for (index_t k = row_ptr_[i]; k < row_ptr_[i + 1] - 1; ++k) s -= val_[k] * y[col_[k]];
    y[i] = s / val_[row_ptr_[i + 1] - 1];
  }
  // Lᵀ y = z
  for (index_t i = n_ - 1; i >= 0; --i) {
    y[i] /= val_[row_ptr_[i + 1] - 1];
    const double yi = y[i];
    for (index_t k = row_ptr_[i]; k < row_ptr_[i + 1] - 1; ++k) y[col_[k]] -= val_[k] * yi;
  }
}

std::shared_ptr<LinearOperator> ic_factor(const CsrMatrix& a) {
  return std::make_shared<IncompleteCholesky>(a);
}

}  // namespace quench
