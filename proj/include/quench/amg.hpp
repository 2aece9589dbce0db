#pragma once

#include <memory>
#include <vector>

#include "quench/operators.hpp"

namespace quench {

struct AmgOptions {
  int max_levels = 10;
  index_t min_coarse = 50;
  double strength_theta = 0.08;  // |a_ij| >= theta sqrt(a_ii a_jj)
  double jacobi_omega = 2.0 / 3.0;
  int pre_sweeps = 1;
  int post_sweeps = 1;
};

/// Unsmoothed-aggregation algebraic multigrid. Aggregates are built greedily
/// from strong graph neighbours, prolongations are piecewise constant (0/1
/// columns), coarse operators are Galerkin Pᵀ A P, and the smoother is damped
/// Jacobi. apply() performs one V-cycle on a zero initial guess, so the
/// operator is linear and can serve as a PCG preconditioner.
class AmgHierarchy final : public LinearOperator {
 public:
  AmgHierarchy(const CsrMatrix& a, const AmgOptions& opts = {});

  index_t size() const override { return levels_.front().a.n_rows; }
  void apply(std::span<const double> x, std::span<double> y) const override;

  int n_levels() const { return static_cast<int>(levels_.size()); }
  index_t level_size(int l) const { return levels_[l].a.n_rows; }
  const CsrMatrix& level_matrix(int l) const { return levels_[l].a; }
  const CsrMatrix& prolongation(int l) const { return levels_[l].p; }

 private:
  struct Level {
    CsrMatrix a;
    CsrMatrix p;  // prolongation from level l+1 (coarser) to l; empty on coarsest
    std::vector<double> inv_diag;
  };

  void cycle(int l, std::span<const double> b, std::span<double> x) const;
  void smooth(const Level& lev, std::span<const double> b, std::span<double> x,
              int sweeps) const;

  std::vector<Level> levels_;  // 0 = finest
  AmgOptions opts_;
  bool smoother_only_ = false;
  // dense Cholesky factor of the coarsest matrix
  std::vector<double> coarse_chol_;
  index_t coarse_n_ = 0;
};

/// Greedy aggregation of the strong-connection graph; returns the aggregate
/// id per node and the number of aggregates.
std::pair<std::vector<index_t>, index_t> aggregate_nodes(const CsrMatrix& a, double theta);

std::shared_ptr<LinearOperator> amg_hierarchy(const CsrMatrix& a, int max_levels = 10,
                                              index_t min_coarse = 50);

}  // namespace quench
