#pragma once

#include <utility>
#include <vector>

#include "quench/operators.hpp"

namespace quench {

/// Preconditioned conjugate gradients for SPD operators. Used as the inner
/// elliptic solver behind the preconditioner blocks.
std::pair<std::vector<double>, SolveStats> pcg(const LinearOperator& op,
                                               const LinearOperator& precond,
                                               std::span<const double> b, double rtol,
                                               int max_iters);

/// Solver handle: a LinearOperator whose apply() runs PCG to the configured
/// tolerance. Tracks cumulative iteration counts for reporting.
class PcgSolveOperator final : public LinearOperator {
 public:
  PcgSolveOperator(std::shared_ptr<const LinearOperator> op,
                   std::shared_ptr<const LinearOperator> precond, double rtol, int max_iters)
      : op_(std::move(op)), precond_(std::move(precond)), rtol_(rtol), max_iters_(max_iters) {}

  index_t size() const override { return op_->size(); }
  void apply(std::span<const double> x, std::span<double> y) const override;

  long total_iterations() const { return total_iters_; }
  bool last_converged() const { return last_converged_; }

 private:
  std::shared_ptr<const LinearOperator> op_;
  std::shared_ptr<const LinearOperator> precond_;
  double rtol_;
  int max_iters_;
  mutable long total_iters_ = 0;
  mutable bool last_converged_ = true;
};

}  // namespace quench
