#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "quench/errors.hpp"
#include "quench/sparse.hpp"

namespace quench {

/// Matrix-free linear operator contract: y = op(x).
class LinearOperator {
 public:
  virtual ~LinearOperator() = default;
  virtual index_t size() const = 0;
  virtual void apply(std::span<const double> x, std::span<double> y) const = 0;

  std::vector<double> operator()(std::span<const double> x) const {
    std::vector<double> y(size());
    apply(x, y);
    return y;
  }
};

class IdentityOperator final : public LinearOperator {
 public:
  explicit IdentityOperator(index_t n) : n_(n) {}
  index_t size() const override { return n_; }
  void apply(std::span<const double> x, std::span<double> y) const override {
    for (index_t i = 0; i < n_; ++i) y[i] = x[i];
  }

 private:
  index_t n_;
};

class FunctionOperator final : public LinearOperator {
 public:
  using Fn = std::function<void(std::span<const double>, std::span<double>)>;
  FunctionOperator(index_t n, Fn fn) : n_(n), fn_(std::move(fn)) {}
  index_t size() const override { return n_; }
  void apply(std::span<const double> x, std::span<double> y) const override { fn_(x, y); }

 private:
  index_t n_;
  Fn fn_;
};

class CsrOperator final : public LinearOperator {
 public:
  explicit CsrOperator(const CsrMatrix& a) : a_(&a) {}
  index_t size() const override { return a_->n_rows; }
  void apply(std::span<const double> x, std::span<double> y) const override { a_->apply(x, y); }

 private:
  const CsrMatrix* a_;
};

struct KrylovConfig {
  int restart_dim = 200;
  int max_iters = 300;
  double rtol = 1e-7;

  void validate() const {
    if (restart_dim < 1) throw ConfigError("KrylovConfig: restart_dim must be >= 1");
    if (!(rtol > 0.0 && rtol < 1.0)) throw ConfigError("KrylovConfig: rtol must be in (0,1)");
    if (max_iters < 0) throw ConfigError("KrylovConfig: max_iters must be >= 0");
  }
};

struct SolveStats {
  int iterations = 0;
  double final_relres = 0.0;
  bool converged = false;
  double wall_time = 0.0;
  std::vector<double> residual_history;
};

}  // namespace quench
