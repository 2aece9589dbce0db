#pragma once

#include <utility>
#include <vector>

#include "quench/operators.hpp"

namespace quench {

/// Right-preconditioned restarted GMRES: solves op(x) = b with the residual
/// measured on the unpreconditioned system, ||b - op(x)|| / ||b|| <= rtol.
/// Modified Gram-Schmidt with a selective second orthogonalization pass.
/// Lucky breakdown returns converged; running out of iterations returns the
/// best iterate with converged = false (no exception).
std::pair<std::vector<double>, SolveStats> gmres_right(const LinearOperator& op,
                                                       const LinearOperator& precond,
                                                       std::span<const double> b,
                                                       const KrylovConfig& cfg);

}  // namespace quench
