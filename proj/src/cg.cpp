#include "quench/cg.hpp"

#include <chrono>
#include <cmath>

#include "quench/kernels.hpp"

namespace quench {

std::pair<std::vector<double>, SolveStats> pcg(const LinearOperator& op,
                                               const LinearOperator& precond,
                                               std::span<const double> b, double rtol,
                                               int max_iters) {
  const index_t n = op.size();
  if (precond.size() != n || static_cast<index_t>(b.size()) != n)
    throw ContractError("pcg: dimension mismatch");

  namespace k = kernels;
  const auto t0 = std::chrono::steady_clock::now();

  std::vector<double> x(n, 0.0), r(b.begin(), b.end()), z(n), p(n), ap(n);
  SolveStats stats;

  const double normb = k::norm2(b);
  if (normb == 0.0) {
    stats.converged = true;
    return {x, stats};
  }

  precond.apply(r, z);
  k::copy(z, p);
  double rz = k::dot(r, z);
  double relres = 1.0;

  for (int it = 0; it < max_iters; ++it) {
    op.apply(p, ap);
    const double pap = k::dot(p, ap);
    if (!(pap > 0.0)) throw NumericalError("pcg: operator lost positive definiteness");
    const double alpha = rz / pap;
    k::axpy(alpha, p, x);
    k::axpy(-alpha, ap, r);
    ++stats.iterations;
    relres = k::norm2(r) / normb;
    stats.residual_history.push_back(relres);
    if (relres <= rtol) break;
    precond.apply(r, z);
    const double rz_new = k::dot(r, z);
    k::xpby(z, rz_new / rz, p);
    rz = rz_new;
  }

  stats.final_relres = relres;
  stats.converged = relres <= rtol;
  stats.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {x, stats};
}

void PcgSolveOperator::apply(std::span<const double> x, std::span<double> y) const {
  auto [sol, stats] = pcg(*op_, *precond_, x, rtol_, max_iters_);
  total_iters_ += stats.iterations;
  last_converged_ = stats.converged;
  kernels::copy(sol, y);
}

}  // namespace quench
