#pragma once

#include <cstddef>
#include <span>
#include <vector>

// Data-parallel vector kernels. The OpenMP versions in quench::kernels are
// the production path; quench::kernels::serial holds the reference
// implementations used by the tests and the benchmark.
//
// Reductions (dot, and norms built on it) accumulate fixed-size blocks and
// combine the per-block partial sums in index order, so the result is
// bit-identical for any thread count and identical to the serial reference.

namespace quench::kernels {

inline constexpr std::size_t kReductionBlock = 4096;

namespace serial {

double dot(std::span<const double> x, std::span<const double> y);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void xpby(std::span<const double> x, double beta, std::span<double> y);
void scale(double alpha, std::span<double> x);
void copy(std::span<const double> x, std::span<double> y);
void fill(double value, std::span<double> x);
// z = x - y
void sub(std::span<const double> x, std::span<const double> y, std::span<double> z);

}  // namespace serial

double dot(std::span<const double> x, std::span<const double> y);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void xpby(std::span<const double> x, double beta, std::span<double> y);
void scale(double alpha, std::span<double> x);
void copy(std::span<const double> x, std::span<double> y);
void fill(double value, std::span<double> x);
void sub(std::span<const double> x, std::span<const double> y, std::span<double> z);

double norm2(std::span<const double> x);
double norm_inf(std::span<const double> x);

/// Number of threads the parallel kernels will use (1 without OpenMP).
int thread_count();
void set_thread_count(int n_threads);

}  // namespace quench::kernels
