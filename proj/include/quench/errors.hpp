#pragma once

#include <stdexcept>
#include <string>

namespace quench {

/// Invalid user-facing configuration (parameter ranges, flag combinations).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A caller broke a documented precondition (infeasible iterate, size mismatch).
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

/// Arithmetic went somewhere it must not (lost positivity, failed factorization).
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace quench
