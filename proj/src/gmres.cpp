#include "quench/gmres.hpp"

#include <chrono>
#include <cmath>

#include "quench/kernels.hpp"

namespace quench {

namespace {
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}
}  // namespace

std::pair<std::vector<double>, SolveStats> gmres_right(const LinearOperator& op,
                                                       const LinearOperator& precond,
                                                       std::span<const double> b,
                                                       const KrylovConfig& cfg) {
  cfg.validate();
  const index_t n = op.size();
  if (precond.size() != n || static_cast<index_t>(b.size()) != n)
    throw ContractError("gmres_right: dimension mismatch");

  const auto t0 = Clock::now();
  namespace k = kernels;

  std::vector<double> x(n, 0.0);
  SolveStats stats;

  const double normb = k::norm2(b);
  if (normb == 0.0) {
    stats.converged = true;
    stats.wall_time = seconds_since(t0);
    return {x, stats};
  }

  const int m = cfg.restart_dim;
  std::vector<std::vector<double>> V;
  std::vector<std::vector<double>> H(m + 1, std::vector<double>(m, 0.0));
  std::vector<double> cs(m, 0.0), sn(m, 0.0), g(m + 1, 0.0);
  std::vector<double> w(n), z(n), r(n);

  bool done = false;
  while (!done && stats.iterations < cfg.max_iters) {
    op.apply(x, r);
    k::sub(b, r, r);
    const double beta = k::norm2(r);
    if (beta / normb <= cfg.rtol) break;

    V.assign(1, r);
    k::scale(1.0 / beta, V[0]);
    std::fill(g.begin(), g.end(), 0.0);
    g[0] = beta;

    int j = 0;
    for (; j < m && stats.iterations < cfg.max_iters; ++j) {
      precond.apply(V[j], z);
      op.apply(z, w);

      const double norm_pre = k::norm2(w);
      for (int i = 0; i <= j; ++i) {
        const double hij = k::dot(V[i], w);
        H[i][j] = hij;
        k::axpy(-hij, V[i], w);
      }
      // Second Gram-Schmidt pass when cancellation ate more than half the norm.
      if (k::norm2(w) < 0.5 * norm_pre) {
        for (int i = 0; i <= j; ++i) {
          const double hij = k::dot(V[i], w);
          H[i][j] += hij;
          k::axpy(-hij, V[i], w);
        }
      }
      const double hj1 = k::norm2(w);
      H[j + 1][j] = hj1;

      for (int i = 0; i < j; ++i) {
        const double t = cs[i] * H[i][j] + sn[i] * H[i + 1][j];
        H[i + 1][j] = -sn[i] * H[i][j] + cs[i] * H[i + 1][j];
        H[i][j] = t;
      }
      const double denom = std::hypot(H[j][j], H[j + 1][j]);
      if (denom == 0.0) {
        cs[j] = 1.0;
        sn[j] = 0.0;
      } else {
        cs[j] = H[j][j] / denom;
        sn[j] = H[j + 1][j] / denom;
      }
      H[j][j] = denom;
      H[j + 1][j] = 0.0;
      g[j + 1] = -sn[j] * g[j];
      g[j] = cs[j] * g[j];

      ++stats.iterations;
      const double relres = std::abs(g[j + 1]) / normb;
      stats.residual_history.push_back(relres);

      const bool lucky = hj1 <= 1e-14 * normb;
      if (relres <= cfg.rtol || lucky) {
        ++j;
        done = true;
        break;
      }
      V.push_back(w);
      k::scale(1.0 / hj1, V[j + 1]);
    }

    // y from the triangularized least-squares problem, then x += P(V y).
    if (j > 0) {
      std::vector<double> y(j, 0.0);
      for (int i = j - 1; i >= 0; --i) {
        double s = g[i];
        for (int l = i + 1; l < j; ++l) s -= H[i][l] * y[l];
        y[i] = s / H[i][i];
      }
      k::fill(0.0, w);
      for (int i = 0; i < j; ++i) k::axpy(y[i], V[i], w);
      precond.apply(w, z);
      k::axpy(1.0, z, x);
    }
  }

  op.apply(x, r);
  k::sub(b, r, r);
  stats.final_relres = k::norm2(r) / normb;
  stats.converged = stats.final_relres <= cfg.rtol;
  stats.wall_time = seconds_since(t0);
  return {x, stats};
}

}  // namespace quench
