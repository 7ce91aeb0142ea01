#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace udisc {

struct EvalError : std::runtime_error {
  std::complex<double> where;
  EvalError(const std::string& msg, std::complex<double> z)
      : std::runtime_error(msg), where(z) {}
};

// |z| >= 1 outside the sanctioned boundary entry points.
struct DomainError : EvalError {
  using EvalError::EvalError;
};

// z hit a declared singularity of the descriptor.
struct SingularityError : EvalError {
  using EvalError::EvalError;
};

// |f'(z)| below the critical-point threshold where a criterion needs f' != 0.
struct CriticalPointError : EvalError {
  using EvalError::EvalError;
};

// Quadrature or refinement budget exhausted before reaching tolerance.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A verdict's hypothesis failed on the verification grid.
struct HypothesisError : EvalError {
  using EvalError::EvalError;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace udisc
