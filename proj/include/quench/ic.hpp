#pragma once

#include <memory>

#include "quench/operators.hpp"

namespace quench {

/// Zero-fill incomplete Cholesky. apply() runs the forward/backward
/// triangular solves, i.e. the operator approximates A⁻¹. Exact whenever the
/// lower-triangular pattern of A admits no fill (diagonal, tridiagonal).
///
/// A non-positive pivot restarts the factorization with the diagonal relaxed
/// by (1 + shift), shift = 1e-3 * 10^retry, at most 3 retries.
class IncompleteCholesky final : public LinearOperator {
 public:
  explicit IncompleteCholesky(const CsrMatrix& a);

  index_t size() const override { return n_; }
  void apply(std::span<const double> x, std::span<double> y) const override;

  double diagonal_shift() const { return shift_used_; }

 private:
  bool try_factor(const CsrMatrix& a, double shift);

  index_t n_ = 0;
  // Lower triangle (diagonal included) in CSR order.
  std::vector<index_t> row_ptr_, col_;
  std::vector<double> val_;
  double shift_used_ = 0.0;
};

std::shared_ptr<LinearOperator> ic_factor(const CsrMatrix& a);

}  // namespace quench
