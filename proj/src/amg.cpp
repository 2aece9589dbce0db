#include "quench/amg.hpp"

#include <cmath>

#include "quench/errors.hpp"
#include "quench/kernels.hpp"

namespace quench {

std::pair<std::vector<index_t>, index_t> aggregate_nodes(const CsrMatrix& a, double theta) {
  const index_t n = a.n_rows;
  const auto diag = a.diagonal();
  std::vector<index_t> agg(n, -1);

  auto strong = [&](index_t i, index_t k) {
    const index_t j = a.col[k];
    if (j == i) return false;
    return std::abs(a.val[k]) >= theta * std::sqrt(std::abs(diag[i] * diag[j]));
  };

  // Pass 1: roots whose strong neighbours are all free seed an aggregate.
  index_t n_agg = 0;
  for (index_t i = 0; i < n; ++i) {
    if (agg[i] != -1) continue;
    bool free_nbrs = true;
    for (index_t k = a.row_ptr[i]; k < a.row_ptr[i + 1] && free_nbrs; ++k)
      if (strong(i, k) && agg[a.col[k]] != -1) free_nbrs = false;
    if (!free_nbrs) continue;
    agg[i] = n_agg;
    for (index_t k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k)
      if (strong(i, k)) agg[a.col[k]] = n_agg;
    ++n_agg;
  }

  // Pass 2: attach leftovers to the most strongly connected aggregate.
  for (index_t i = 0; i < n; ++i) {
    if (agg[i] != -1) continue;
    index_t best = -1;
    double best_w = -1.0;
    for (index_t k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) {
      const index_t j = a.col[k];
      if (j == i || agg[j] == -1) continue;
      const double w = std::abs(a.val[k]);
      if (w > best_w) {
        best_w = w;
        best = agg[j];
      }
    }
    if (best != -1) agg[i] = best;
  }

  // Pass 3: isolated nodes become singletons.
  for (index_t i = 0; i < n; ++i)
    if (agg[i] == -1) agg[i] = n_agg++;

  return {agg, n_agg};
}

namespace {

CsrMatrix aggregation_prolongation(const std::vector<index_t>& agg, index_t n_agg) {
  CsrBuilder b(static_cast<index_t>(agg.size()), n_agg);
  for (index_t i = 0; i < static_cast<index_t>(agg.size()); ++i) b.add(i, agg[i], 1.0);
  return b.build();
}

}  // namespace

AmgHierarchy::AmgHierarchy(const CsrMatrix& a, const AmgOptions& opts) : opts_(opts) {
  if (a.n_rows != a.n_cols) throw ContractError("AmgHierarchy: square matrix required");

  levels_.push_back({a, {}, {}});
  while (static_cast<int>(levels_.size()) < opts.max_levels &&
         levels_.back().a.n_rows > opts.min_coarse) {
    const CsrMatrix& fine = levels_.back().a;
    auto [agg, n_agg] = aggregate_nodes(fine, opts.strength_theta);
    if (n_agg > static_cast<index_t>(0.9 * fine.n_rows)) break;  // coarsening stagnated
    CsrMatrix p = aggregation_prolongation(agg, n_agg);
    CsrMatrix coarse = triple_product(p, fine);
    levels_.back().p = std::move(p);
    levels_.push_back({std::move(coarse), {}, {}});
  }

  for (auto& lev : levels_) {
    lev.inv_diag = lev.a.diagonal();
    for (double& d : lev.inv_diag) d = (d != 0.0) ? 1.0 / d : 0.0;
  }

  // A hierarchy capped before it could coarsen (max_levels=1, stagnation)
  // degenerates to plain smoothing; no dense factor of a large matrix.
  if (levels_.size() == 1 && levels_[0].a.n_rows > opts.min_coarse) {
    smoother_only_ = true;
    return;
  }

  // Dense Cholesky of the coarsest operator, with one shifted retry for
  // semidefinite corner cases.
  const CsrMatrix& c = levels_.back().a;
  coarse_n_ = c.n_rows;
  for (double shift : {0.0, 1e-12}) {
    std::vector<double> chol(static_cast<std::size_t>(coarse_n_) * coarse_n_, 0.0);
    double dmax = 0.0;
    for (index_t i = 0; i < coarse_n_; ++i)
      for (index_t k = c.row_ptr[i]; k < c.row_ptr[i + 1]; ++k) {
        chol[static_cast<std::size_t>(i) * coarse_n_ + c.col[k]] = c.val[k];
        dmax = std::max(dmax, std::abs(c.val[k]));
      }
    bool ok = true;
    for (index_t j = 0; j < coarse_n_ && ok; ++j) {
      auto at = [&](index_t r, index_t cc) -> double& {
        return chol[static_cast<std::size_t>(r) * coarse_n_ + cc];
      };
      double d = at(j, j) + shift * dmax;
      for (index_t k = 0; k < j; ++k) d -= at(j, k) * at(j, k);
      if (!(d > 0.0)) {
        ok = false;
        break;
      }
      at(j, j) = std::sqrt(d);
      for (index_t i = j + 1; i < coarse_n_; ++i) {
        double s = at(i, j);
        for (index_t k = 0; k < j; ++k) s -= at(i, k) * at(j, k);
        at(i, j) = s / at(j, j);
      }
    }
    if (ok) {
      coarse_chol_ = std::move(chol);
      return;
    }
  }
  throw NumericalError("AmgHierarchy: coarsest-level Cholesky failed");
}

void AmgHierarchy::smooth(const Level& lev, std::span<const double> b, std::span<double> x,
                          int sweeps) const {
  const index_t n = lev.a.n_rows;
  std::vector<double> r(n);
  for (int s = 0; s < sweeps; ++s) {
    lev.a.apply(x, r);
    kernels::sub(b, r, r);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) x[i] += opts_.jacobi_omega * lev.inv_diag[i] * r[i];
  }
}

void AmgHierarchy::cycle(int l, std::span<const double> b, std::span<double> x) const {
  if (l == static_cast<int>(levels_.size()) - 1) {
    if (smoother_only_) {
      kernels::fill(0.0, x);
      smooth(levels_[l], b, x, opts_.pre_sweeps + opts_.post_sweeps);
      return;
    }
    // coarsest: L Lᵀ x = b
    std::vector<double> y(b.begin(), b.end());
    auto at = [&](index_t r, index_t c) {
      return coarse_chol_[static_cast<std::size_t>(r) * coarse_n_ + c];
    };
    for (index_t i = 0; i < coarse_n_; ++i) {
      double s = y[i];
      for (index_t k = 0; k < i; ++k) s -= at(i, k) * y[k];
      y[i] = s / at(i, i);
    }
    for (index_t i = coarse_n_ - 1; i >= 0; --i) {
      double s = y[i];
      for (index_t k = i + 1; k < coarse_n_; ++k) s -= at(k, i) * y[k];
      y[i] = s / at(i, i);
    }
    kernels::copy(y, x);
    return;
  }

  const Level& lev = levels_[l];
  const CsrMatrix& p = lev.p;
  kernels::fill(0.0, x);
  smooth(lev, b, x, opts_.pre_sweeps);

  std::vector<double> r(lev.a.n_rows);
  lev.a.apply(x, r);
  kernels::sub(b, r, r);

  std::vector<double> rc(p.n_cols, 0.0), xc(p.n_cols, 0.0);
  // restriction = Pᵀ
  for (index_t i = 0; i < p.n_rows; ++i)
    for (index_t k = p.row_ptr[i]; k < p.row_ptr[i + 1]; ++k) rc[p.col[k]] += p.val[k] * r[i];

  cycle(l + 1, rc, xc);

  for (index_t i = 0; i < p.n_rows; ++i)
    for (index_t k = p.row_ptr[i]; k < p.row_ptr[i + 1]; ++k) x[i] += p.val[k] * xc[p.col[k]];

  smooth(lev, b, x, opts_.post_sweeps);
}

void AmgHierarchy::apply(std::span<const double> x, std::span<double> y) const {
  if (static_cast<index_t>(x.size()) != size() || static_cast<index_t>(y.size()) != size())
    throw ContractError("AmgHierarchy::apply: dimension mismatch");
  cycle(0, x, y);
}

std::shared_ptr<LinearOperator> amg_hierarchy(const CsrMatrix& a, int max_levels,
                                              index_t min_coarse) {
  AmgOptions opts;
  opts.max_levels = max_levels;
  opts.min_coarse = min_coarse;
  return std::make_shared<AmgHierarchy>(a, opts);
}

}  // namespace quench
